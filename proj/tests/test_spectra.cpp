#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>

#include "doctest.h"
#include "nbj/spectra.hpp"

using namespace nbj;

TEST_CASE("valencies match the row-sum oracle") {
  SchemeParams p{3, 2, 3};
  AdjacencyFamily fam = build_adjacency(p);
  SpectralData sd = build_spectral(p);
  const Domain& dom = sd.domain;

  Rational total;
  for (std::size_t t = 0; t < dom.size(); ++t) {
    CHECK(sd.valencies[t] == Rational(static_cast<long>(fam.matrices[t].row_sum(0))));
    total += sd.valencies[t];
  }
  CHECK(total == Rational(12));
  CHECK(sd.valencies[dom.index_of(BiIndex{0, 0})] == Rational(1));
  CHECK(sd.valencies[dom.index_of(BiIndex{1, 0})] == Rational(2));
  CHECK(sd.valencies[dom.index_of(BiIndex{2, 0})] == Rational(1));
  CHECK(sd.valencies[dom.index_of(BiIndex{0, 1})] == Rational(4));
  CHECK(sd.valencies[dom.index_of(BiIndex{1, 1})] == Rational(4));
}

TEST_CASE("table closed forms") {
  for (SchemeParams p : {SchemeParams{3, 2, 3}, SchemeParams{3, 2, 4}, SchemeParams{4, 2, 5}}) {
    SpectralData sd = build_spectral(p);
    Certificate cert = spectral_table_check(sd);
    CHECK(cert.passed());
    // p_00 = q_00 = 1 everywhere; theta and mu* closed forms already
    // certified inside spectral_table_check.
    for (std::size_t xy = 0; xy < sd.domain.size(); ++xy) {
      CHECK(sd.P[sd.pos00][xy] == Rational(1));
      CHECK(sd.Q[sd.pos00][xy] == Rational(1));
    }
  }
}

TEST_CASE("multiplicities") {
  SchemeParams p{3, 2, 4};
  SpectralData sd = build_spectral(p);
  CHECK(multiplicity_closed_form(p, BiIndex{0, 0}) == Rational(1));
  Rational total;
  for (std::size_t xy = 0; xy < sd.domain.size(); ++xy) {
    CHECK(sd.multiplicities[xy] == multiplicity_closed_form(p, sd.domain.at(xy)));
    total += sd.multiplicities[xy];
  }
  CHECK(total == Rational(24));

  // m_xy equals the trace (rank) of the constructed idempotent
  SchemeParams small{3, 2, 3};
  AdjacencyFamily fam = build_adjacency(small);
  SpectralData ssd = build_spectral(small);
  std::vector<Matrix> idem = build_idempotents(fam, ssd);
  for (std::size_t xy = 0; xy < ssd.domain.size(); ++xy) {
    CHECK(idem[xy].trace() == ssd.multiplicities[xy]);
  }
}

TEST_CASE("idempotent family invariants") {
  for (SchemeParams p : {SchemeParams{3, 2, 3}, SchemeParams{3, 2, 4}}) {
    AdjacencyFamily fam = build_adjacency(p);
    SpectralData sd = build_spectral(p);
    std::vector<Matrix> idem = build_idempotents(fam, sd);
    IntersectionTable inter = intersection_table(fam);
    Certificate cert = idempotent_check(fam, sd, idem, inter);
    CHECK(cert.passed());

    // E_00 = J/v spot check
    const Matrix& e00 = idem[sd.pos00];
    CHECK(e00.at(0, 0) == Rational(1) / sd.v);
    CHECK(e00.at(1, fam.v() - 1) == Rational(1) / sd.v);

    // E_mn E_pq = 0 for distinct labels (raw product)
    Matrix prod = mat_mul(idem[0], idem[1]);
    CHECK(prod.is_zero());
    // sum of idempotents = I (raw)
    Matrix acc(fam.v());
    for (const auto& e : idem) acc = mat_add(acc, e);
    CHECK(acc == Matrix::identity(fam.v()));
  }
}

TEST_CASE("wilson duality") {
  for (SchemeParams p : {SchemeParams{3, 2, 3}, SchemeParams{4, 2, 5}, SchemeParams{3, 3, 4}}) {
    SpectralData sd = build_spectral(p);
    CHECK(wilson_duality_check(sd).passed());
  }
}

TEST_CASE("krein parameters") {
  SchemeParams p{3, 2, 3};
  AdjacencyFamily fam = build_adjacency(p);
  SpectralData sd = build_spectral(p);
  std::vector<Matrix> idem = build_idempotents(fam, sd);
  CoefficientTable krein = krein_parameters(sd);
  Certificate cert = krein_check(sd, krein, idem);  // includes the Hadamard cross-check
  CHECK(cert.passed());

  // q_{00,kl}^{mn} = delta
  for (std::size_t kl = 0; kl < sd.domain.size(); ++kl)
    for (std::size_t mn = 0; mn < sd.domain.size(); ++mn)
      CHECK(krein[sd.pos00][kl][mn] == (kl == mn ? Rational(1) : Rational(0)));

  // nonnegativity
  for (const auto& row : krein)
    for (const auto& col : row)
      for (const auto& val : col) CHECK(val.sign() >= 0);
}

TEST_CASE("krein and intersection support stencils") {
  SchemeParams p{3, 2, 4};  // n >= 2k-1
  AdjacencyFamily fam = build_adjacency(p);
  SpectralData sd = build_spectral(p);
  const Domain& dom = sd.domain;
  IntersectionTable inter = intersection_table(fam);
  CoefficientTable krein = krein_parameters(sd);

  for (std::size_t ij = 0; ij < dom.size(); ++ij) {
    const BiIndex a = dom.at(ij);
    for (std::size_t mn = 0; mn < dom.size(); ++mn) {
      const BiIndex b = dom.at(mn);
      // p_{10,ij}^{mn} = 0 unless |m-i| <= 1 and n = j
      if (inter[sd.pos10][ij][mn] != 0) {
        CHECK(std::abs(a.i - b.i) <= 1);
        CHECK(a.j == b.j);
      }
      // p_{01,ij}^{mn} = 0 unless |n-j| <= 1 (seven-term stencil)
      if (inter[sd.pos01][ij][mn] != 0) {
        CHECK(std::abs(a.j - b.j) <= 1);
        CHECK(std::abs(a.i - b.i) + std::abs(a.j - b.j) <= 2);
      }
      // q_{10,ij}^{mn}: five-point stencil of Figure 1(c)
      if (!krein[sd.pos10][ij][mn].is_zero()) {
        const bool ok = (b == a) || (b == BiIndex{a.i + 1, a.j}) ||
                        (b == BiIndex{a.i - 1, a.j}) || (b == BiIndex{a.i + 1, a.j - 1}) ||
                        (b == BiIndex{a.i - 1, a.j + 1});
        CHECK(ok);
      }
      // q_{01,ij}^{mn} = 0 whenever m != i or |n-j| > 1
      if (!krein[sd.pos01][ij][mn].is_zero()) {
        CHECK(a.i == b.i);
        CHECK(std::abs(a.j - b.j) <= 1);
      }
    }
  }
}

TEST_CASE("spectral route reproduces the combinatorial intersection numbers") {
  for (SchemeParams p : {SchemeParams{3, 2, 3}, SchemeParams{3, 2, 4}}) {
    AdjacencyFamily fam = build_adjacency(p);
    SpectralData sd = build_spectral(p);
    IntersectionTable inter = intersection_table(fam);
    CoefficientTable spectral = intersection_numbers_spectral(sd);
    CHECK(intersection_cross_check(sd, inter, spectral).passed());
  }
}
