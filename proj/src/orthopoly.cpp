#include "nbj/orthopoly.hpp"

#include <algorithm>
#include <string>

#include "nbj/errors.hpp"

namespace nbj {

namespace {

mpz_class pow_z(const mpz_class& base, long exp) {
  mpz_class out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
  return out;
}

}  // namespace

mpz_class binomial_z(long a, long b) {
  if (b < 0) return 0;
  mpz_class num = 1;
  for (long t = 0; t < b; ++t) num *= mpz_class(a - t);
  mpz_class den;
  mpz_fac_ui(den.get_mpz_t(), static_cast<unsigned long>(b));
  return num / den;  // falling factorial of length b is divisible by b!
}

Rational binomial(long a, long b) { return Rational(binomial_z(a, b)); }

Rational krawtchouk(long i, long x, long N, long p) {
  mpz_class acc = 0;
  for (long l = 0; l <= i; ++l) {
    mpz_class term = pow_z(mpz_class(p - 1), i - l) * binomial_z(x, l) * binomial_z(N - x, i - l);
    if (l % 2) acc -= term; else acc += term;
  }
  return Rational(acc);
}

Rational eberlein(long i, long x, long N, long p) {
  mpz_class acc = 0;
  for (long l = 0; l <= i; ++l) {
    mpz_class term = binomial_z(x, l) * binomial_z(p - x, i - l) * binomial_z(N - p - x, i - l);
    if (l % 2) acc -= term; else acc += term;
  }
  return Rational(acc);
}

Rational eberlein_second_form(long i, long x, long N, long p) {
  mpz_class acc = 0;
  for (long l = 0; l <= i; ++l) {
    mpz_class term =
        binomial_z(p - l, p - i) * binomial_z(p - x, l) * binomial_z(N - p - x + l, l);
    if ((i + l) % 2) acc -= term; else acc += term;
  }
  return Rational(acc);
}

Rational hahn(long i, long x, long N, long p) {
  mpz_class den = binomial_z(p, x) * binomial_z(N - p, x);
  if (den == 0) {
    throw DomainError("hahn: zero denominator C(p,x)C(N-p,x) at (x,N,p)=(" +
                      std::to_string(x) + "," + std::to_string(N) + "," + std::to_string(p) +
                      ")");
  }
  mpz_class num = binomial_z(N, i) - binomial_z(N, i - 1);
  return Rational(num, den) * eberlein(x, i, N, p);
}

Rational krawtchouk_recurrence_residual(long i, long x, long N, long p) {
  Rational lhs = Rational(p) * Rational(x) * krawtchouk(i, x, N, p);
  Rational rhs = Rational(-(i + 1)) * krawtchouk(i + 1, x, N, p) +
                 Rational(i + (p - 1) * (N - i)) * krawtchouk(i, x, N, p);
  if (i >= 1) rhs -= Rational((p - 1) * (N - i + 1)) * krawtchouk(i - 1, x, N, p);
  return lhs - rhs;
}

HahnRecurrenceCoeffs hahn_recurrence_coeffs(long r, long N, long p) {
  if (2 * r - N == 0 || N - 2 * r - 1 == 0 || 2 * r - N - 2 == 0 || N - 2 * r + 3 == 0) {
    throw SingularCoefficientError("hahn_recurrence_coeffs: vanishing denominator at (r,N)=(" +
                                   std::to_string(r) + "," + std::to_string(N) + ")");
  }
  HahnRecurrenceCoeffs c;
  c.A = Rational((r - N + p) * (p - r) * (r + 1), (2 * r - N) * (N - 2 * r - 1));
  c.B = Rational(-(r * r * N - r * N * (N + 1) + (2 + N) * (N - p) * p),
                 (2 * r - N - 2) * (2 * r - N));
  c.C = Rational(-((r - N - 1 + p) * (r - p - 1) * (N - r + 2)),
                 (2 * r - N - 2) * (N - 2 * r + 3));
  return c;
}

Rational hahn_recurrence_residual(long r, long x, long N, long p) {
  HahnRecurrenceCoeffs c = hahn_recurrence_coeffs(r, N, p);
  Rational lhs = Rational(-x) * hahn(r, x, N, p);
  Rational rhs = c.A * hahn(r + 1, x, N, p) + c.B * hahn(r, x, N, p);
  if (r >= 1) rhs += c.C * hahn(r - 1, x, N, p);
  return lhs - rhs;
}

Rational hahn_parameter_shift_residual(long r, long x, long N, long p) {
  if (p == 0 || N - 2 * r == 0 || N - 2 * r + 2 == 0) {
    throw DomainError("hahn_parameter_shift_residual: undefined at (r,N,p)=(" +
                      std::to_string(r) + "," + std::to_string(N) + "," + std::to_string(p) +
                      ")");
  }
  Rational rhs = Rational(p - r, N - 2 * r) * hahn(r, x, N - 1, p - 1);
  if (r >= 1) rhs += Rational(N - p - r + 1, N - 2 * r + 2) * hahn(r - 1, x, N - 1, p - 1);
  rhs *= Rational(N, p);
  return hahn(r, x, N, p) - rhs;
}

Rational generalized_hypergeometric(const std::vector<Rational>& upper,
                                    const std::vector<Rational>& lower, const Rational& z) {
  constexpr long kMaxTerms = 4096;
  Rational sum = 1;
  Rational term = 1;
  for (long l = 0; l < kMaxTerms; ++l) {
    bool numerator_zero = false;
    for (const auto& a : upper) {
      if ((a + Rational(l)).is_zero()) {
        numerator_zero = true;
        break;
      }
    }
    if (numerator_zero) return sum;
    for (const auto& b : lower) {
      if ((b + Rational(l)).is_zero()) {
        throw DomainError("generalized_hypergeometric: denominator Pochhammer vanishes before "
                          "series terminates");
      }
    }
    for (const auto& a : upper) term *= a + Rational(l);
    for (const auto& b : lower) term /= b + Rational(l);
    term *= z;
    term /= Rational(l + 1);
    sum += term;
  }
  throw DomainError("generalized_hypergeometric: series did not terminate");
}

Certificate orthopoly_grid_check() {
  Certificate cert("orthopoly-grid");
  long tested_shift = 0, skipped_shift = 0, tested_bridge = 0, skipped_bridge = 0;

  // The two Eberlein closed forms agree.
  for (long N = 0; N <= 12; ++N) {
    for (long p = 0; p <= N; ++p) {
      const long mu = std::min(p, N - p);
      for (long i = 0; i <= mu; ++i) {
        for (long x = 0; x <= mu; ++x) {
          Rational first = eberlein(i, x, N, p);
          Rational second = eberlein_second_form(i, x, N, p);
          if (first != second) {
            cert.fail({i, x, N, p}, first.str(), second.str(),
                      "Eberlein closed forms disagree");
          }
        }
      }
    }
  }

  // Krawtchouk three-term recurrence.
  for (long i = 0; i <= 6; ++i)
    for (long x = 0; x <= 6; ++x)
      for (long N = 0; N <= 10; ++N)
        for (long p = 0; p <= 6; ++p) {
          Rational res = krawtchouk_recurrence_residual(i, x, N, p);
          if (!res.is_zero()) {
            cert.fail({i, x, N, p}, "0", res.str(), "Krawtchouk recurrence residual");
          }
        }

  // Hahn three-term recurrence and H_0 = 1 on the admissible grid.
  for (long N = 0; N <= 10; ++N) {
    for (long p = 0; p <= N; ++p) {
      const long mu = std::min(p, N - p);
      for (long x = 0; x <= mu; ++x) {
        Rational h0 = hahn(0, x, N, p);
        if (h0 != Rational(1)) cert.fail({x, N, p}, "1", h0.str(), "H_0 = 1");
        for (long rr = 0; rr <= mu; ++rr) {
          try {
            Rational res = hahn_recurrence_residual(rr, x, N, p);
            if (!res.is_zero()) {
              cert.fail({rr, x, N, p}, "0", res.str(), "Hahn recurrence residual");
            }
          } catch (const SingularCoefficientError&) {
            // boundary denominators; covered by the Krein route in context
          }
        }
      }
    }
  }

  // Hahn parameter-shift relation.
  for (long N = 0; N <= 10; ++N) {
    for (long p = 0; p <= N; ++p) {
      const long mu = std::min(p, N - p);
      for (long rr = 0; rr <= p; ++rr) {
        for (long x = 0; x <= mu; ++x) {
          try {
            Rational res = hahn_parameter_shift_residual(rr, x, N, p);
            ++tested_shift;
            if (!res.is_zero()) {
              cert.fail({rr, x, N, p}, "0", res.str(), "parameter-shift residual");
            }
          } catch (const DomainError&) {
            ++skipped_shift;
          }
        }
      }
    }
  }

  // Hypergeometric bridges.
  for (long i = 0; i <= 4; ++i)
    for (long x = 0; x <= 4; ++x)
      for (long N = 0; N <= 8; ++N)
        for (long p = 0; p <= N; ++p) {
          if (x > std::min(p, N - p)) continue;  // Hahn factor undefined
          try {
            BridgeResiduals res = hypergeometric_bridge_residuals(i, x, N, p);
            ++tested_bridge;
            if (!res.krawtchouk.is_zero()) {
              cert.fail({i, x, N, p}, "0", res.krawtchouk.str(), "Krawtchouk bridge");
            }
            if (!res.hahn.is_zero()) {
              cert.fail({i, x, N, p}, "0", res.hahn.str(), "Hahn bridge");
            }
            if (!res.eberlein.is_zero()) {
              cert.fail({i, x, N, p}, "0", res.eberlein.str(), "Eberlein bridge");
            }
          } catch (const DomainError&) {
            ++skipped_bridge;
          }
        }

  cert.add_note("parameter-shift points tested/skipped: " + std::to_string(tested_shift) +
                "/" + std::to_string(skipped_shift));
  cert.add_note("bridge points tested/skipped: " + std::to_string(tested_bridge) + "/" +
                std::to_string(skipped_bridge));
  if (tested_shift < 100 || tested_bridge < 100) {
    cert.fail({}, "at least 100 grid points", "too few points evaluated",
              "grid coverage sanity");
  }
  return cert;
}

Rational krawtchouk_bridge_residual(long i, long x, long N, long p) {
  if (p == 1) throw DomainError("krawtchouk_bridge_residual: p = 1");
  Rational f21 = generalized_hypergeometric({Rational(-i), Rational(-x)}, {Rational(-N)},
                                            Rational(p, p - 1));
  return krawtchouk(i, x, N, p) -
         Rational(mpz_class(binomial_z(N, i) * pow_z(mpz_class(p - 1), i))) * f21;
}

Rational hahn_bridge_residual(long i, long x, long N, long p) {
  const long mu = std::min(p, N - p);
  Rational q3f2 = generalized_hypergeometric(
      {Rational(-i), Rational(i - N - 1), Rational(-x)}, {Rational(mu - N), Rational(-mu)},
      Rational(1));
  return hahn(i, x, N, p) -
         Rational(mpz_class(binomial_z(N, i) - binomial_z(N, i - 1))) * q3f2;
}

Rational eberlein_bridge_residual(long i, long x, long N, long p) {
  const long mu = std::min(p, N - p);
  Rational r3f2 = generalized_hypergeometric(
      {Rational(-i), Rational(-x), Rational(x - N - 1)}, {Rational(mu - N), Rational(-mu)},
      Rational(1));
  return eberlein(i, x, N, p) -
         Rational(mpz_class(binomial_z(p, i) * binomial_z(N - p, i))) * r3f2;
}

BridgeResiduals hypergeometric_bridge_residuals(long i, long x, long N, long p) {
  BridgeResiduals out;
  out.krawtchouk = krawtchouk_bridge_residual(i, x, N, p);
  out.hahn = hahn_bridge_residual(i, x, N, p);
  out.eberlein = eberlein_bridge_residual(i, x, N, p);
  return out;
}

}  // namespace nbj
