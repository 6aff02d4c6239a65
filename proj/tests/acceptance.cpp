// Acceptance suite: runs every top-level criterion at zero tolerance and
// prints one pass/fail line per criterion.  Exit code = number of failures.

#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "nbj/bispectral.hpp"
#include "nbj/orthopoly.hpp"
#include "nbj/polystructure.hpp"
#include "nbj/report.hpp"
#include "nbj/scheme.hpp"
#include "nbj/spectra.hpp"
#include "nbj/terwilliger.hpp"

using namespace nbj;

namespace {

struct Instance {
  SchemeParams params;
  AdjacencyFamily fam;
  SpectralData sd;
  IntersectionTable inter;
  CoefficientTable krein;
  std::vector<Matrix> idem;
  OperatorQuadruple quad;
  std::vector<std::size_t> bases;

  explicit Instance(const SchemeParams& p)
      : params(p),
        fam(build_adjacency(p)),
        sd(build_spectral(p)),
        inter(intersection_table(fam)),
        krein(krein_parameters(sd)),
        idem(build_idempotents(fam, sd)),
        quad(build_quadruple(p)) {
    bases = {0, fam.v() / 2, fam.v() - 1};
  }

  std::string name() const {
    return "J_" + std::to_string(params.r) + "(" + std::to_string(params.k) + "," +
           std::to_string(params.n) + ")";
  }
};

int failures = 0;

void report(int number, const std::string& what, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << what;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << "\n";
  if (!ok) ++failures;
}

std::string first_witness(const Certificate& cert) {
  if (cert.witnesses.empty()) return "";
  const Witness& w = cert.witnesses.front();
  return w.note + " expected " + w.expected + " actual " + w.actual;
}

}  // namespace

int main() {
  const auto start = std::chrono::steady_clock::now();

  std::vector<Instance> instances;
  instances.emplace_back(SchemeParams{3, 2, 3});
  instances.emplace_back(SchemeParams{3, 2, 4});
  instances.emplace_back(SchemeParams{4, 2, 5});
  instances.emplace_back(SchemeParams{3, 3, 6});

  const std::vector<std::size_t> expected_v = {12, 24, 90, 160};

  // 1. scheme axioms
  {
    bool ok = true;
    std::string detail;
    for (std::size_t t = 0; t < instances.size(); ++t) {
      if (instances[t].fam.v() != expected_v[t]) {
        ok = false;
        detail = instances[t].name() + " has wrong vertex count";
      }
      Certificate cert = verify_axioms(instances[t].fam);
      if (!cert.passed()) {
        ok = false;
        detail = instances[t].name() + ": " + first_witness(cert);
      }
    }
    report(1, "association-scheme axioms on the four instances", ok, detail);
  }

  // 2. adjacency recurrences
  {
    bool ok = true;
    std::string detail;
    for (const auto& inst : instances) {
      Certificate cert = adjacency_recurrence_check(inst.fam);
      if (!cert.passed()) {
        ok = false;
        detail = inst.name() + ": " + first_witness(cert);
      }
    }
    report(2, "A_10 A_ij and A_01 A_ij match the displayed expansions", ok, detail);
  }

  // 3. eigen machinery
  {
    bool ok = true;
    std::string detail;
    for (const auto& inst : instances) {
      Certificate tables = spectral_table_check(inst.sd);
      Certificate idem = idempotent_check(inst.fam, inst.sd, inst.idem, inst.inter);
      Certificate wilson = wilson_duality_check(inst.sd);
      Certificate cross =
          intersection_cross_check(inst.sd, inst.inter, intersection_numbers_spectral(inst.sd));
      for (const Certificate* cert : {&tables, &idem, &wilson, &cross}) {
        if (!cert->passed()) {
          ok = false;
          detail = inst.name() + " " + cert->check + ": " + first_witness(*cert);
        }
      }
    }
    report(3, "idempotents, spectral decomposition, Wilson duality, intersection routes", ok,
           detail);
  }

  // 4. P-certification
  {
    bool ok = true;
    std::string detail;
    for (const auto& inst : instances) {
      Certificate cert = certify_P(inst.sd, inst.inter);
      if (!cert.passed()) {
        ok = false;
        detail = inst.name() + ": " + first_witness(cert);
      }
    }
    report(4, "bivariate P-polynomial certification of type (1,0)", ok, detail);
  }

  // 5. Q-certification incl. the required negative instance
  {
    bool ok = true;
    std::string detail;
    for (const auto& inst : instances) {
      Certificate cert = certify_Q(inst.sd, inst.krein);
      if (!cert.passed()) {
        ok = false;
        detail = inst.name() + ": " + first_witness(cert);
      }
    }
    SchemeParams neg{3, 3, 4};
    SpectralData nsd = build_spectral(neg);
    Certificate ncert = certify_Q(nsd, krein_parameters(nsd));
    if (ncert.passed()) {
      ok = false;
      detail = "J_3(3,4) unexpectedly certified";
    } else {
      bool witnessed = false;
      for (const auto& w : ncert.witnesses) {
        if (w.note.find("(0,2) ≼ (2,1)") != std::string::npos) witnessed = true;
      }
      if (!witnessed) {
        ok = false;
        detail = "J_3(3,4) failed without the (0,2) ≼ (2,1) witness";
      }
    }
    report(5, "Q-certification of type (0,1/2), including the J_3(3,4) rejection", ok, detail);
  }

  // 6. dual-eigenvalue recurrences
  {
    bool ok = true;
    std::string detail;
    for (const auto& inst : instances) {
      Certificate cert = dual_recurrence_check(inst.sd, inst.krein);
      if (!cert.passed()) {
        ok = false;
        detail = inst.name() + ": " + first_witness(cert);
      }
    }
    report(6, "dual-eigenvalue recurrences with Krein-resolved singularities", ok, detail);
  }

  // 7. difference relations
  {
    bool ok = true;
    std::string detail;
    for (const auto& inst : instances) {
      Certificate cert = difference_relation_check(inst.sd, inst.krein);
      if (!cert.passed()) {
        ok = false;
        detail = inst.name() + ": " + first_witness(cert);
      }
    }
    report(7, "difference relations with the duality-route fallback", ok, detail);
  }

  // 8. bispectral algebra
  {
    bool ok = true;
    std::string detail;
    for (const auto& inst : instances) {
      Certificate ops = operator_construction_check(inst.quad, inst.sd, inst.inter);
      Certificate alg = algebra_relations_check(inst.quad);
      if (!ops.passed() || !alg.passed()) {
        ok = false;
        detail = inst.name() + ": " +
                 first_witness(ops.passed() ? alg : ops);
      }
    }
    report(8, "the seven bispectral-algebra identities", ok, detail);
  }

  // 9. Terwilliger relations, primary module, and the negative control
  {
    bool ok = true;
    std::string detail;
    for (const auto& inst : instances) {
      for (std::size_t base : inst.bases) {
        DualPair duals = build_duals(inst.fam, inst.sd, base);
        Certificate basics = dual_basics_check(inst.fam, inst.sd, inst.krein, duals);
        Certificate sub = subconstituent_relations_check(inst.fam, inst.sd, duals);
        Certificate primary = primary_module_check(inst.fam, inst.sd, duals, inst.quad);
        Certificate triples =
            triple_product_check(inst.fam, inst.sd, inst.krein, inst.inter, duals, inst.idem);
        for (const Certificate* cert : {&basics, &sub, &primary, &triples}) {
          if (!cert->passed()) {
            ok = false;
            detail = inst.name() + " base " + std::to_string(base) + " " + cert->check + ": " +
                     first_witness(*cert);
          }
        }
      }
      DualPair duals = build_duals(inst.fam, inst.sd, inst.bases.front());
      Certificate negative = raw_generators_negative_check(inst.fam, inst.sd, duals);
      if (!negative.passed()) {
        ok = false;
        detail = inst.name() + ": raw generators satisfied every relation";
      }
    }
    report(9, "subconstituent relations, primary module, raw-generator negative control", ok,
           detail);
  }

  // 10. orthogonal-polynomial grid suite
  {
    Certificate cert = orthopoly_grid_check();
    report(10, "orthogonal-polynomial identities on the exhaustive grid", cert.passed(),
           cert.passed() ? "" : first_witness(cert));
  }

  const auto elapsed =
      std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) +
                                                            " criterion(s) failed")
            << " in " << elapsed.count() << "s\n";
  return failures;
}
