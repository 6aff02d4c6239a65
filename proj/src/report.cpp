#include "nbj/report.hpp"

#include <chrono>
#include <fstream>
#include <functional>

#include "nbj/bispectral.hpp"
#include "nbj/errors.hpp"
#include "nbj/matrix.hpp"
#include "nbj/orthopoly.hpp"
#include "nbj/polystructure.hpp"
#include "nbj/scheme.hpp"
#include "nbj/spectra.hpp"
#include "nbj/terwilliger.hpp"

namespace nbj {

namespace {

using ordered_json = nlohmann::ordered_json;

const std::vector<std::pair<std::string, CheckId>> kCheckNames = {
    {"axioms", CheckId::axioms},         {"spectra", CheckId::spectra},
    {"ppoly", CheckId::ppoly},           {"qpoly", CheckId::qpoly},
    {"recurrences", CheckId::recurrences}, {"difference", CheckId::difference},
    {"bispectral", CheckId::bispectral}, {"terwilliger", CheckId::terwilliger},
    {"orthopoly", CheckId::orthopoly},
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

/// Everything the check groups share, built lazily in dependency order.
struct Pipeline {
  SchemeParams params;
  AdjacencyFamily fam;
  SpectralData sd;
  IntersectionTable inter;
  CoefficientTable krein;
  std::vector<Matrix> idempotents;
  std::vector<std::size_t> bases;
};

std::vector<std::size_t> pick_bases(std::size_t v, int count) {
  std::vector<std::size_t> out;
  if (count <= 0 || v == 0) return out;
  if (count == 1 || v == 1) return {0};
  for (int t = 0; t < count; ++t) {
    std::size_t idx = static_cast<std::size_t>(
        (static_cast<unsigned long long>(t) * (v - 1)) / (count - 1));
    if (out.empty() || out.back() != idx) out.push_back(idx);
  }
  return out;
}

}  // namespace

std::set<CheckId> parse_checks(const std::vector<std::string>& names) {
  std::set<CheckId> out;
  for (const auto& name : names) {
    if (name == "all") {
      for (const auto& [_, id] : kCheckNames) out.insert(id);
      continue;
    }
    bool found = false;
    for (const auto& [nm, id] : kCheckNames) {
      if (nm == name) {
        out.insert(id);
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("unknown check '" + name + "'");
  }
  return out;
}

std::string check_name(CheckId id) {
  for (const auto& [nm, cid] : kCheckNames) {
    if (cid == id) return nm;
  }
  return "?";
}

ordered_json certificate_to_json(const Certificate& cert) {
  ordered_json j;
  j["check"] = cert.check;
  j["instance"] = {{"r", cert.instance.r}, {"k", cert.instance.k}, {"n", cert.instance.n}};
  j["verdict"] = verdict_name(cert.verdict);
  ordered_json witnesses = ordered_json::array();
  for (const auto& w : cert.witnesses) {
    ordered_json jw;
    jw["index"] = w.index;
    jw["expected"] = w.expected;
    jw["actual"] = w.actual;
    if (!w.note.empty()) jw["note"] = w.note;
    witnesses.push_back(jw);
  }
  j["witnesses"] = witnesses;
  j["witness_total"] = cert.witness_total;
  if (!cert.notes.empty()) j["notes"] = cert.notes;
  j["wall_time_ms"] = cert.wall_time_ms;
  return j;
}

RunResult run(const RunConfig& config) {
  SchemeParams params{config.r, config.k, config.n};
  params.validate();

  // Dependency closure: everything scheme-dependent needs axioms; the
  // algebraic checks need the spectral tables.
  std::set<CheckId> selected = config.checks;
  const bool needs_spectra =
      selected.contains(CheckId::spectra) || selected.contains(CheckId::ppoly) ||
      selected.contains(CheckId::qpoly) || selected.contains(CheckId::recurrences) ||
      selected.contains(CheckId::difference) || selected.contains(CheckId::bispectral) ||
      selected.contains(CheckId::terwilliger);
  if (needs_spectra) {
    selected.insert(CheckId::spectra);
    selected.insert(CheckId::axioms);
  }

  Pipeline pipe;
  pipe.params = params;

  std::vector<Certificate> certs;
  auto timed = [&certs](const std::function<Certificate()>& fn) -> const Certificate& {
    Stopwatch sw;
    Certificate cert = fn();
    cert.wall_time_ms = sw.elapsed_ms();
    certs.push_back(std::move(cert));
    return certs.back();
  };

  if (selected.contains(CheckId::orthopoly)) {
    Stopwatch sw;
    Certificate cert = orthopoly_grid_check();
    cert.instance = params;
    cert.wall_time_ms = sw.elapsed_ms();
    certs.push_back(std::move(cert));
  }

  bool axioms_ok = true;
  if (selected.contains(CheckId::axioms)) {
    pipe.fam = build_adjacency(params, config.max_vertices);
    axioms_ok = timed([&] { return verify_axioms(pipe.fam); }).passed();
  }

  bool spectra_ok = axioms_ok;
  const bool run_spectra = selected.contains(CheckId::spectra);
  if (run_spectra && axioms_ok) {
    pipe.sd = build_spectral(params);
    pipe.inter = intersection_table(pipe.fam);
    pipe.idempotents = build_idempotents(pipe.fam, pipe.sd);
    pipe.krein = krein_parameters(pipe.sd);
    spectra_ok &= timed([&] { return spectral_table_check(pipe.sd); }).passed();
    spectra_ok &= timed([&] { return wilson_duality_check(pipe.sd); }).passed();
    spectra_ok &=
        timed([&] { return idempotent_check(pipe.fam, pipe.sd, pipe.idempotents, pipe.inter); })
            .passed();
    spectra_ok &=
        timed([&] { return krein_check(pipe.sd, pipe.krein, pipe.idempotents); }).passed();
    spectra_ok &= timed([&] {
                    return intersection_cross_check(pipe.sd, pipe.inter,
                                                    intersection_numbers_spectral(pipe.sd));
                  }).passed();
  }

  auto skip = [&](const std::string& name, const std::string& why) {
    Certificate cert(name, params);
    cert.verdict = Verdict::skipped;
    cert.add_note(why);
    certs.push_back(std::move(cert));
  };
  auto guarded = [&](CheckId id, const std::vector<std::string>& names,
                     const std::function<void()>& body) {
    if (!selected.contains(id)) return;
    if (!axioms_ok) {
      for (const auto& nm : names) skip(nm, "axioms check failed");
    } else if (!spectra_ok) {
      for (const auto& nm : names) skip(nm, "spectra checks failed");
    } else {
      body();
    }
  };

  guarded(CheckId::ppoly, {"p-polynomial-certification"},
          [&] { timed([&] { return certify_P(pipe.sd, pipe.inter); }); });
  guarded(CheckId::qpoly, {"q-polynomial-certification"},
          [&] { timed([&] { return certify_Q(pipe.sd, pipe.krein); }); });
  guarded(CheckId::recurrences, {"adjacency-recurrences", "dual-eigenvalue-recurrences"}, [&] {
    timed([&] { return adjacency_recurrence_check(pipe.fam); });
    timed([&] { return dual_recurrence_check(pipe.sd, pipe.krein); });
  });
  guarded(CheckId::difference, {"difference-relations"},
          [&] { timed([&] { return difference_relation_check(pipe.sd, pipe.krein); }); });
  guarded(CheckId::bispectral, {"bispectral-operators", "bispectral-algebra"}, [&] {
    OperatorQuadruple quad = build_quadruple(params);
    timed([&] { return operator_construction_check(quad, pipe.sd, pipe.inter); });
    timed([&] { return algebra_relations_check(quad); });
  });
  guarded(CheckId::terwilliger,
          {"dual-bose-mesner", "triple-products", "subconstituent-relations", "primary-module",
           "raw-generator-negative"},
          [&] {
            pipe.bases = pick_bases(pipe.fam.v(), config.base_count);
            OperatorQuadruple quad = build_quadruple(params);
            auto per_base = [&](const std::string& name,
                               const std::function<Certificate(const DualPair&)>& fn) {
              timed([&]() -> Certificate {
                Certificate merged(name, params);
                for (std::size_t base : pipe.bases) {
                  DualPair duals = build_duals(pipe.fam, pipe.sd, base);
                  Certificate one = fn(duals);
                  if (!one.passed()) {
                    one.add_note("base vertex " + std::to_string(base));
                  }
                  merged.absorb(one);
                }
                merged.add_note(std::to_string(pipe.bases.size()) + " base vertices sampled");
                return merged;
              });
            };
            per_base("dual-bose-mesner", [&](const DualPair& duals) {
              return dual_basics_check(pipe.fam, pipe.sd, pipe.krein, duals);
            });
            per_base("triple-products", [&](const DualPair& duals) {
              return triple_product_check(pipe.fam, pipe.sd, pipe.krein, pipe.inter, duals,
                                          pipe.idempotents);
            });
            per_base("subconstituent-relations", [&](const DualPair& duals) {
              return subconstituent_relations_check(pipe.fam, pipe.sd, duals);
            });
            per_base("primary-module", [&](const DualPair& duals) {
              return primary_module_check(pipe.fam, pipe.sd, duals, quad);
            });
            timed([&] {
              DualPair duals = build_duals(pipe.fam, pipe.sd, pipe.bases.front());
              return raw_generators_negative_check(pipe.fam, pipe.sd, duals);
            });
          });

  ordered_json report;
  report["instance"] = {{"r", params.r},
                        {"k", params.k},
                        {"n", params.n},
                        {"v", vertex_count(params).get_str()}};
  ordered_json domain_list = ordered_json::array();
  const Domain domain = Domain::make(params);
  for (const BiIndex& ij : domain.indices()) {
    domain_list.push_back({ij.i, ij.j});
  }
  report["domain"] = domain_list;
  ordered_json jcerts = ordered_json::array();
  bool any_fail = false;
  for (const auto& cert : certs) {
    jcerts.push_back(certificate_to_json(cert));
    any_fail |= (cert.verdict == Verdict::fail);
  }
  report["certificates"] = jcerts;

  if (config.include_tables && run_spectra && axioms_ok) {
    ordered_json tables;
    auto table_json = [&](const std::vector<std::vector<Rational>>& t) {
      ordered_json rows = ordered_json::array();
      for (const auto& row : t) {
        ordered_json cells = ordered_json::array();
        for (const auto& val : row) cells.push_back(val.str());
        rows.push_back(cells);
      }
      return rows;
    };
    tables["P"] = table_json(pipe.sd.P);
    tables["Q"] = table_json(pipe.sd.Q);
    ordered_json vals = ordered_json::array(), mults = ordered_json::array();
    for (const auto& val : pipe.sd.valencies) vals.push_back(val.str());
    for (const auto& val : pipe.sd.multiplicities) mults.push_back(val.str());
    tables["valencies"] = vals;
    tables["multiplicities"] = mults;
    ordered_json krein_rows = ordered_json::array();
    for (const auto& row : pipe.krein) krein_rows.push_back(table_json(row));
    tables["krein"] = krein_rows;
    report["tables"] = tables;
  }

  if (config.output_path) {
    std::ofstream out(*config.output_path);
    if (!out) throw std::invalid_argument("cannot open output file " + *config.output_path);
    out << report.dump(2) << "\n";
  }
  return RunResult{std::move(report), any_fail ? 2 : 0};
}

}  // namespace nbj
