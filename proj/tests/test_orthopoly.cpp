#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>

#include "doctest.h"
#include "nbj/errors.hpp"
#include "nbj/orthopoly.hpp"

using namespace nbj;

TEST_CASE("generalized binomial convention") {
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(7, 0) == Rational(1));
  CHECK(binomial(4, -1) == Rational(0));
  CHECK(binomial(-1, 2) == Rational(1));   // (-1)(-2)/2
  CHECK(binomial(-2, 3) == Rational(-4));  // (-2)(-3)(-4)/6
  CHECK(binomial(3, 5) == Rational(0));
}

TEST_CASE("krawtchouk values") {
  for (long x = 0; x <= 5; ++x) CHECK(krawtchouk(0, x, 7, 3) == Rational(1));
  for (long N = 0; N <= 8; ++N)
    for (long p = 0; p <= 5; ++p) CHECK(krawtchouk(1, 0, N, p) == Rational((p - 1) * N));
  CHECK(krawtchouk(2, 0, 2, 2) == Rational(1));
  CHECK(krawtchouk(1, 1, 3, 3) == Rational(3));  // used by the hypergeometric bridge
}

TEST_CASE("eberlein values and the two closed forms") {
  CHECK(eberlein(0, 2, 9, 4) == Rational(1));
  CHECK(eberlein(1, 1, 4, 2) == Rational(0));
  CHECK(eberlein(1, 0, 3, 2) == Rational(2));
  for (long N = 0; N <= 12; ++N)
    for (long p = 0; p <= N; ++p) {
      const long mu = std::min(p, N - p);
      for (long i = 0; i <= mu; ++i)
        for (long x = 0; x <= mu; ++x)
          CHECK(eberlein(i, x, N, p) == eberlein_second_form(i, x, N, p));
    }
}

TEST_CASE("hahn values and domain errors") {
  for (long N = 1; N <= 8; ++N)
    for (long p = 0; p <= N; ++p)
      for (long x = 0; x <= std::min(p, N - p); ++x) CHECK(hahn(0, x, N, p) == Rational(1));
  CHECK(hahn(1, 1, 4, 2) == Rational(0));
  CHECK(hahn(1, 1, 3, 1) == Rational(-1));
  CHECK_THROWS_AS(hahn(1, 2, 3, 1), DomainError);  // C(1,2) C(2,2) = 0
  CHECK_THROWS_AS(hahn(0, 1, 2, 0), DomainError);
}

TEST_CASE("krawtchouk three-term recurrence") {
  for (long i = 0; i <= 6; ++i)
    for (long x = 0; x <= 6; ++x)
      for (long N = 0; N <= 6; ++N)
        for (long p = 0; p <= 6; ++p)
          CHECK(krawtchouk_recurrence_residual(i, x, N, p) == Rational(0));
  CHECK(krawtchouk_recurrence_residual(3, 2, 5, 3) == Rational(0));
  CHECK(krawtchouk_recurrence_residual(0, 4, 9, 2) == Rational(0));  // K_{-1} = 0 boundary
}

TEST_CASE("hahn recurrence coefficients") {
  HahnRecurrenceCoeffs c = hahn_recurrence_coeffs(1, 4, 2);
  CHECK(c.A == Rational(1));  // (1-4+2)(2-1)(2) / ((2-4)(4-2-1))
  for (long x = 0; x <= 2; ++x) CHECK(hahn_recurrence_residual(1, x, 4, 2) == Rational(0));
  CHECK_THROWS_AS(hahn_recurrence_coeffs(2, 4, 2), SingularCoefficientError);  // 2r-N = 0

  for (long N = 1; N <= 9; ++N)
    for (long p = 0; p <= N; ++p) {
      const long mu = std::min(p, N - p);
      for (long r = 0; r <= mu; ++r)
        for (long x = 0; x <= mu; ++x) {
          try {
            Rational res = hahn_recurrence_residual(r, x, N, p);
            CHECK(res == Rational(0));
          } catch (const SingularCoefficientError&) {
            // vanishing denominator; excluded from this identity
          }
        }
    }
}

TEST_CASE("hahn parameter-shift relation") {
  // 0 = 2 [ (1/2)(-1) + (1/2)(1) ] at (r,x,N,p) = (1,1,4,2)
  CHECK(hahn(1, 1, 3, 1) == Rational(-1));
  CHECK(hahn(0, 1, 3, 1) == Rational(1));
  CHECK(hahn_parameter_shift_residual(1, 1, 4, 2) == Rational(0));
  // x stays within the shifted family's range min(p-1, N-p)
  for (long x = 0; x <= 2; ++x) CHECK(hahn_parameter_shift_residual(0, x, 8, 3) == Rational(0));
  CHECK_THROWS_AS(hahn_parameter_shift_residual(2, 0, 4, 2), DomainError);  // N-2r = 0

  long tested = 0;
  for (long N = 1; N <= 10; ++N)
    for (long p = 1; p <= N; ++p)
      for (long r = 0; r <= p; ++r)
        for (long x = 0; x <= std::min(p, N - p); ++x) {
          try {
            Rational res = hahn_parameter_shift_residual(r, x, N, p);
            CHECK(res == Rational(0));
            ++tested;
          } catch (const DomainError&) {
          }
        }
  CHECK(tested > 200);
}

TEST_CASE("terminating hypergeometric series") {
  // 2F1(-1,-1;-3 | 3/2) = 1 - 1/2
  CHECK(generalized_hypergeometric({Rational(-1), Rational(-1)}, {Rational(-3)},
                                   Rational(3, 2)) == Rational(1, 2));
  CHECK(generalized_hypergeometric({Rational(0), Rational(5)}, {Rational(7)}, Rational(1)) ==
        Rational(1));
  // lower Pochhammer dies before the numerator truncates
  CHECK_THROWS_AS(generalized_hypergeometric({Rational(-5)}, {Rational(-2)}, Rational(1)),
                  DomainError);
}

TEST_CASE("hypergeometric bridges") {
  // K_1(1,3,3) = 3 = C(3,1) 2 hatK_1(1; 2/3, 3); the H/E bridges are outside
  // their parameter range at this point (mu = 0 < x)
  CHECK(krawtchouk_bridge_residual(1, 1, 3, 3) == Rational(0));
  for (long x = 0; x <= 3; ++x) {
    BridgeResiduals r = hypergeometric_bridge_residuals(0, x, 6, 3);
    CHECK(r.krawtchouk == Rational(0));
    CHECK(r.hahn == Rational(0));
    CHECK(r.eberlein == Rational(0));
  }

  long tested = 0;
  for (long i = 0; i <= 4; ++i)
    for (long x = 0; x <= 4; ++x)
      for (long N = 0; N <= 8; ++N)
        for (long p = 0; p <= N; ++p) {
          if (x > std::min(p, N - p)) continue;
          try {
            BridgeResiduals r = hypergeometric_bridge_residuals(i, x, N, p);
            CHECK(r.krawtchouk == Rational(0));
            CHECK(r.hahn == Rational(0));
            CHECK(r.eberlein == Rational(0));
            ++tested;
          } catch (const DomainError&) {
          }
        }
  CHECK(tested > 100);
}

TEST_CASE("evaluation is deterministic") {
  Rational a = hahn(2, 1, 7, 3);
  Rational b = hahn(2, 1, 7, 3);
  CHECK(a == b);
  CHECK(a.str() == b.str());
}

TEST_CASE("orthopoly grid certificate") {
  Certificate cert = orthopoly_grid_check();
  CHECK(cert.passed());
  CHECK(cert.witnesses.empty());
}
