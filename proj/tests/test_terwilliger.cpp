#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "nbj/terwilliger.hpp"

using namespace nbj;

namespace {

struct Instance {
  AdjacencyFamily fam;
  SpectralData sd;
  IntersectionTable inter;
  CoefficientTable krein;
  std::vector<Matrix> idem;

  explicit Instance(const SchemeParams& p)
      : fam(build_adjacency(p)),
        sd(build_spectral(p)),
        inter(intersection_table(fam)),
        krein(krein_parameters(sd)),
        idem(build_idempotents(fam, sd)) {}
};

}  // namespace

TEST_CASE("dual pair construction and basics") {
  Instance inst(SchemeParams{3, 2, 3});
  CHECK_THROWS_AS(build_duals(inst.fam, inst.sd, 99), std::invalid_argument);

  for (std::size_t base : {std::size_t{0}, std::size_t{5}, std::size_t{11}}) {
    DualPair duals = build_duals(inst.fam, inst.sd, base);
    // E*_00 is the rank-one diagonal unit at the base vertex
    for (std::size_t y = 0; y < inst.fam.v(); ++y) {
      CHECK((duals.estar[inst.sd.pos00][y] != 0) == (y == base));
    }
    CHECK(dual_basics_check(inst.fam, inst.sd, inst.krein, duals).passed());
  }
}

TEST_CASE("triple products on the two small instances") {
  for (SchemeParams p : {SchemeParams{3, 2, 3}, SchemeParams{3, 2, 4}}) {
    Instance inst(p);
    DualPair duals = build_duals(inst.fam, inst.sd, 0);
    Certificate cert =
        triple_product_check(inst.fam, inst.sd, inst.krein, inst.inter, duals, inst.idem);
    CHECK(cert.passed());

    // (i,j) = (r,s) = (0,0): E*_00 A_mn E*_00 = 0 for (m,n) != (0,0)
    for (std::size_t mn = 0; mn < inst.fam.domain.size(); ++mn) {
      CHECK((inst.inter[inst.sd.pos00][mn][inst.sd.pos00] != 0) == (mn == inst.sd.pos00));
    }
  }
}

TEST_CASE("the five subconstituent relations") {
  for (SchemeParams p : {SchemeParams{3, 2, 3}, SchemeParams{3, 2, 4}, SchemeParams{4, 2, 5}}) {
    Instance inst(p);
    for (std::size_t base : {std::size_t{0}, inst.fam.v() / 2, inst.fam.v() - 1}) {
      DualPair duals = build_duals(inst.fam, inst.sd, base);
      Certificate cert = subconstituent_relations_check(inst.fam, inst.sd, duals);
      CHECK(cert.passed());
      if (!cert.passed()) {
        for (const auto& w : cert.witnesses) MESSAGE(w.note);
      }
    }
  }
}

TEST_CASE("c2 vanishes for (3,2,4) and the relation still holds") {
  // c2 = 2(kr - (n-1)(r-1)) = 2(6 - 6) = 0
  SchemeParams p{3, 2, 4};
  CHECK(2 * (p.k * p.r - (p.n - 1) * (p.r - 1)) == 0);
  Instance inst(p);
  DualPair duals = build_duals(inst.fam, inst.sd, 3);
  CHECK(subconstituent_relations_check(inst.fam, inst.sd, duals).passed());
}

TEST_CASE("primary module correspondence") {
  for (SchemeParams p : {SchemeParams{3, 2, 3}, SchemeParams{4, 2, 5}}) {
    Instance inst(p);
    OperatorQuadruple quad = build_quadruple(p);
    for (std::size_t base : {std::size_t{0}, inst.fam.v() / 2, inst.fam.v() - 1}) {
      DualPair duals = build_duals(inst.fam, inst.sd, base);
      Certificate cert = primary_module_check(inst.fam, inst.sd, duals, quad);
      CHECK(cert.passed());
      if (!cert.passed()) {
        for (const auto& w : cert.witnesses) MESSAGE(w.note);
      }
    }
  }
}

TEST_CASE("raw generators do not satisfy the bispectral relations") {
  for (SchemeParams p : {SchemeParams{3, 2, 3}, SchemeParams{3, 2, 4}}) {
    Instance inst(p);
    DualPair duals = build_duals(inst.fam, inst.sd, 0);
    Certificate cert = raw_generators_negative_check(inst.fam, inst.sd, duals);
    CHECK(cert.passed());
    CHECK_FALSE(cert.notes.empty());
  }
}
