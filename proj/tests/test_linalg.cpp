#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "nbj/errors.hpp"
#include "nbj/matrix.hpp"
#include "nbj/rational.hpp"

using namespace nbj;

namespace {

std::mt19937 rng(20240817);

Rational random_rational() {
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 12);
  return Rational(num(rng), den(rng));
}

Matrix random_matrix(std::size_t dim) {
  return Matrix::build(dim, [&](std::size_t, std::size_t) { return random_rational(); });
}

}  // namespace

TEST_CASE("rational canonical form and arithmetic") {
  Rational a(2, 4);
  CHECK(a.numerator() == 1);
  CHECK(a.denominator() == 2);
  CHECK(a.str() == "1/2");
  CHECK(Rational(-6, -4).str() == "3/2");
  CHECK(Rational(6, -4).str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(5).is_integer());

  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(1, 3) * Rational(3, 5) == Rational(1, 5));
  CHECK(Rational(7, 2) - Rational(7, 2) == Rational(0));
  CHECK(Rational(1, 7) / Rational(1, 7) == Rational(1));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);

  CHECK(Rational::from_string("-22/4") == Rational(-11, 2));
  CHECK(Rational::from_string("17") == Rational(17));
  CHECK_THROWS_AS(Rational::from_string("x"), std::invalid_argument);

  // round trips stay canonical
  for (int t = 0; t < 200; ++t) {
    Rational x = random_rational(), y = random_rational();
    Rational s = x + y;
    CHECK(s - y == x);
    if (!y.is_zero()) CHECK((x * y) / y == x);
    CHECK(Rational::from_string(s.str()) == s);
    CHECK(s.denominator() > 0);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), s.numerator().get_mpz_t(), s.denominator().get_mpz_t());
    CHECK(g == 1);
  }
}

TEST_CASE("matrix products") {
  const std::size_t v = 6;
  Matrix m = random_matrix(v);
  CHECK(mat_mul(Matrix::identity(v), m) == m);
  CHECK(mat_mul(m, Matrix::identity(v)) == m);

  Matrix j = Matrix::all_ones(v);
  CHECK(mat_mul(j, j) == scale(Rational(static_cast<long>(v)), j));

  CHECK(hadamard(m, j) == m);

  // E_00 = J/v is idempotent under the Hadamard product up to 1/v.
  Matrix e00 = scale(Rational(1, static_cast<long>(v)), j);
  CHECK(hadamard(e00, e00) == scale(Rational(1, static_cast<long>(v)), e00));

  CHECK(commutator(m, m).is_zero());
  Matrix d1 = Matrix::diagonal({1, 2, Rational(1, 3), 4, 5, 6});
  Matrix d2 = Matrix::diagonal({7, 0, 1, Rational(2, 5), 3, 9});
  CHECK(commutator(d1, d2).is_zero());

  CHECK_THROWS_AS(mat_mul(m, Matrix::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(hadamard(m, Matrix::identity(3)), std::invalid_argument);
  CHECK_THROWS_AS(commutator(m, Matrix::identity(3)), std::invalid_argument);
}

TEST_CASE("product and hadamard laws on random triples") {
  for (std::size_t dim : {2u, 5u, 8u}) {
    Matrix a = random_matrix(dim), b = random_matrix(dim), c = random_matrix(dim);
    CHECK(mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c)));
    CHECK(hadamard(a, b) == hadamard(b, a));
    CHECK(hadamard(hadamard(a, b), c) == hadamard(a, hadamard(b, c)));
    CHECK(hadamard(a, mat_add(b, c)) == mat_add(hadamard(a, b), hadamard(a, c)));
    CHECK(anticommutator(a, b) == mat_add(mat_mul(a, b), mat_mul(b, a)));
  }
}

TEST_CASE("binary matrices") {
  BinaryMatrix b(70);  // spans two 64-bit words
  b.set(0, 0);
  b.set(0, 69);
  b.set(69, 0);
  b.set(3, 5);
  CHECK(b.get(0, 69));
  CHECK_FALSE(b.get(1, 1));
  CHECK(b.row_sum(0) == 2);
  CHECK(b.ones_count() == 4);
  CHECK_FALSE(b.is_symmetric());
  b.set(5, 3);
  b.set(69, 69);
  CHECK_FALSE(b.is_identity());

  BinaryMatrix eye(5);
  for (std::size_t t = 0; t < 5; ++t) eye.set(t, t);
  CHECK(eye.is_identity());
  CHECK(eye.is_symmetric());

  // row_dot equals the integer product entry for symmetric arguments
  BinaryMatrix s(4);
  auto link = [&](std::size_t u, std::size_t w) {
    s.set(u, w);
    s.set(w, u);
  };
  link(0, 1);
  link(1, 2);
  link(2, 3);
  link(3, 0);
  Matrix sm = s.to_matrix();
  Matrix prod = mat_mul(sm, sm);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t w = 0; w < 4; ++w)
      CHECK(prod.at(u, w) == Rational(static_cast<long>(s.row_dot(u, s, w))));
}

TEST_CASE("exact linear solves") {
  Matrix a = Matrix::build(3, [&](std::size_t r, std::size_t c) {
    static const long vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
    return Rational(vals[r][c]);
  });
  RationalLU lu(a);
  std::vector<Rational> rhs = {Rational(1), Rational(2), Rational(3)};
  std::vector<Rational> x = lu.solve(rhs);
  for (std::size_t r = 0; r < 3; ++r) {
    Rational acc;
    for (std::size_t c = 0; c < 3; ++c) acc += a.at(r, c) * x[c];
    CHECK(acc == rhs[r]);
  }

  Matrix singular = Matrix::build(2, [&](std::size_t r, std::size_t) {
    return r == 0 ? Rational(1) : Rational(2);
  });
  CHECK_THROWS_AS(RationalLU{singular}, InternalError);

  // random solvable systems round-trip
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(5);
    // make it comfortably nonsingular
    for (std::size_t r = 0; r < 5; ++r) {
      m = mat_add(m, scale(Rational(100), Matrix::identity(5)));
      break;
    }
    RationalLU f(m);
    std::vector<Rational> b(5);
    for (auto& val : b) val = random_rational();
    std::vector<Rational> sol = f.solve(b);
    for (std::size_t r = 0; r < 5; ++r) {
      Rational acc;
      for (std::size_t c = 0; c < 5; ++c) acc += m.at(r, c) * sol[c];
      CHECK(acc == b[r]);
    }
  }
}
