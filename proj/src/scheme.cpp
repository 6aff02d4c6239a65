#include "nbj/scheme.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "nbj/errors.hpp"
#include "nbj/orthopoly.hpp"

namespace nbj {

Domain Domain::make(const SchemeParams& params) {
  params.validate();
  Domain d;
  d.params_ = params;
  const int jmax = std::min(params.k, params.n - params.k);
  for (int a = 0; a <= params.k; ++a) {
    for (int b = 0; b <= std::min(params.k - a, jmax); ++b) {
      d.indices_.push_back(BiIndex{a, b});
    }
  }
  return d;
}

bool Domain::contains(const BiIndex& ij) const {
  return std::binary_search(indices_.begin(), indices_.end(), ij);
}

std::size_t Domain::index_of(const BiIndex& ij) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), ij);
  if (it == indices_.end() || *it != ij) {
    throw std::out_of_range("Domain: index (" + std::to_string(ij.i) + "," +
                            std::to_string(ij.j) + ") not in D");
  }
  return static_cast<std::size_t>(it - indices_.begin());
}

long Domain::find(const BiIndex& ij) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), ij);
  if (it == indices_.end() || *it != ij) return -1;
  return it - indices_.begin();
}

int weight(const Vertex& x) {
  int w = 0;
  for (auto c : x) w += (c != 0);
  return w;
}

PairStatistics pair_statistics(const Vertex& x, const Vertex& y) {
  if (x.size() != y.size()) throw std::invalid_argument("pair_statistics: unequal lengths");
  PairStatistics s;
  for (std::size_t t = 0; t < x.size(); ++t) {
    if (x[t] != 0 && y[t] != 0) {
      ++s.common_nonzero;
      if (x[t] == y[t]) ++s.equal_nonzero;
    }
  }
  return s;
}

BiIndex classify_pair(const Vertex& x, const Vertex& y) {
  const int k = weight(x);
  if (weight(y) != k) throw std::invalid_argument("classify_pair: weights differ");
  PairStatistics s = pair_statistics(x, y);
  return BiIndex{s.common_nonzero - s.equal_nonzero, k - s.common_nonzero};
}

mpz_class vertex_count(const SchemeParams& params) {
  params.validate();
  mpz_class count = binomial_z(params.n, params.k);
  mpz_class pw;
  mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(params.r - 1),
                static_cast<unsigned long>(params.k));
  return count * pw;
}

namespace {

void enumerate_rec(const SchemeParams& p, Vertex& word, int pos, int used,
                   std::vector<Vertex>& out) {
  const int remaining = p.n - pos;
  const int needed = p.k - used;
  if (needed > remaining) return;
  if (pos == p.n) {
    out.push_back(word);
    return;
  }
  // Value 0 first keeps the output lexicographic.
  if (needed < remaining) {
    word[pos] = 0;
    enumerate_rec(p, word, pos + 1, used, out);
  }
  if (needed > 0) {
    for (int val = 1; val < p.r; ++val) {
      word[pos] = static_cast<std::uint8_t>(val);
      enumerate_rec(p, word, pos + 1, used + 1, out);
    }
  }
  word[pos] = 0;
}

}  // namespace

std::vector<Vertex> enumerate_vertices(const SchemeParams& params, std::size_t max_vertices) {
  params.validate();
  mpz_class count = vertex_count(params);
  if (count > max_vertices) {
    throw ResourceError("enumerate_vertices: |S| = " + count.get_str() +
                        " exceeds the size guard " + std::to_string(max_vertices));
  }
  std::vector<Vertex> out;
  out.reserve(count.get_ui());
  Vertex word(params.n, 0);
  enumerate_rec(params, word, 0, 0, out);
  return out;
}

AdjacencyFamily build_adjacency(const SchemeParams& params, std::size_t max_vertices) {
  AdjacencyFamily fam;
  fam.params = params;
  fam.domain = Domain::make(params);
  fam.vertices = enumerate_vertices(params, max_vertices);
  const std::size_t v = fam.vertices.size();
  fam.matrices.assign(fam.domain.size(), BinaryMatrix(v));
  fam.pair_class.assign(v * v, 0);
  fam.representatives.assign(fam.domain.size(), {});
  for (std::size_t u = 0; u < v; ++u) {
    for (std::size_t w = 0; w < v; ++w) {
      const BiIndex ij = classify_pair(fam.vertices[u], fam.vertices[w]);
      const std::size_t pos = fam.domain.index_of(ij);
      fam.pair_class[u * v + w] = static_cast<std::uint16_t>(pos);
      fam.matrices[pos].set(u, w);
      if (fam.representatives[pos].size() < 5) fam.representatives[pos].emplace_back(u, w);
    }
  }
  return fam;
}

namespace {

std::string bi_str(const BiIndex& ij) {
  return "(" + std::to_string(ij.i) + "," + std::to_string(ij.j) + ")";
}

}  // namespace

Certificate verify_axioms(const AdjacencyFamily& fam) {
  Certificate cert("axioms", fam.params);
  const std::size_t v = fam.v();
  const std::size_t d = fam.domain.size();

  const std::size_t pos00 = fam.domain.index_of(BiIndex{0, 0});
  if (!fam.matrices[pos00].is_identity()) {
    cert.fail({0, 0}, "identity matrix", "A_00 differs from the identity");
  }

  for (std::size_t pos = 0; pos < d; ++pos) {
    const BiIndex ij = fam.domain.at(pos);
    if (fam.matrices[pos].ones_count() == 0) {
      cert.fail({ij.i, ij.j}, "non-empty relation", "zero matrix",
                "relation " + bi_str(ij) + " is empty");
    }
    if (!fam.matrices[pos].is_symmetric()) {
      cert.fail({ij.i, ij.j}, "symmetric", "A_" + bi_str(ij) + " not symmetric");
    }
  }

  // Completeness: every pair lies in exactly one relation.
  for (std::size_t u = 0; u < v; ++u) {
    for (std::size_t w = 0; w < v; ++w) {
      int hits = 0;
      for (std::size_t pos = 0; pos < d; ++pos) hits += fam.matrices[pos].get(u, w);
      if (hits != 1) {
        cert.fail({static_cast<long long>(u), static_cast<long long>(w)}, "1",
                  std::to_string(hits),
                  "pair covered by " + std::to_string(hits) + " relations");
      }
    }
  }

  // Closure: the integer product of any two adjacency matrices is constant
  // on every relation class (which also gives commutativity by symmetry).
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      std::vector<long long> expected(d, 0);
      for (std::size_t mn = 0; mn < d; ++mn) {
        const auto& rep = fam.representatives[mn].front();
        expected[mn] = static_cast<long long>(
            fam.matrices[a].row_dot(rep.first, fam.matrices[b], rep.second));
      }
      for (std::size_t u = 0; u < v; ++u) {
        for (std::size_t w = 0; w < v; ++w) {
          const long long got =
              static_cast<long long>(fam.matrices[a].row_dot(u, fam.matrices[b], w));
          const long long want = expected[fam.class_of(u, w)];
          if (got != want) {
            const BiIndex ij = fam.domain.at(a);
            const BiIndex kl = fam.domain.at(b);
            cert.fail({ij.i, ij.j, kl.i, kl.j, static_cast<long long>(u),
                       static_cast<long long>(w)},
                      std::to_string(want), std::to_string(got),
                      "A_" + bi_str(ij) + " A_" + bi_str(kl) + " not in the linear span");
          }
        }
      }
    }
  }
  return cert;
}

std::vector<long long> intersection_numbers(const AdjacencyFamily& fam, const BiIndex& ij,
                                            const BiIndex& kl) {
  const std::size_t a = fam.domain.index_of(ij);
  const std::size_t b = fam.domain.index_of(kl);
  std::vector<long long> out(fam.domain.size(), 0);
  for (std::size_t mn = 0; mn < fam.domain.size(); ++mn) {
    bool first = true;
    for (const auto& [u, w] : fam.representatives[mn]) {
      const long long val =
          static_cast<long long>(fam.matrices[a].row_dot(u, fam.matrices[b], w));
      if (first) {
        out[mn] = val;
        first = false;
      } else if (val != out[mn]) {
        throw InternalError("intersection_numbers: representatives of class " +
                            bi_str(fam.domain.at(mn)) + " disagree for pair " + bi_str(ij) +
                            "," + bi_str(kl));
      }
    }
  }
  return out;
}

IntersectionTable intersection_table(const AdjacencyFamily& fam) {
  const std::size_t d = fam.domain.size();
  IntersectionTable table(d, std::vector<std::vector<long long>>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      table[a][b] = intersection_numbers(fam, fam.domain.at(a), fam.domain.at(b));
    }
  }
  return table;
}

long long adjacency_recurrence_coeff_x(const SchemeParams& p, const BiIndex& ij,
                                       const BiIndex& mn) {
  const long long i = ij.i, j = ij.j, r = p.r, k = p.k;
  if (mn == BiIndex{ij.i - 1, ij.j}) return (k - i - j + 1) * (r - 2);
  if (mn == ij) return i * (r - 3) + j * (r - 2);
  if (mn == BiIndex{ij.i + 1, ij.j}) return i + 1;
  return 0;
}

long long adjacency_recurrence_coeff_y(const SchemeParams& p, const BiIndex& ij,
                                       const BiIndex& mn) {
  const long long i = ij.i, j = ij.j, r = p.r, k = p.k, n = p.n;
  if (mn == BiIndex{ij.i - 1, ij.j}) return (k - i - j + 1) * (r - 2) * j;
  if (mn == BiIndex{ij.i, ij.j - 1}) return (k - i - j + 1) * (n - k - j + 1) * (r - 1);
  if (mn == BiIndex{ij.i + 1, ij.j}) return (i + 1) * j;
  if (mn == BiIndex{ij.i, ij.j + 1}) return (j + 1) * (j + 1);
  if (mn == BiIndex{ij.i + 1, ij.j - 1}) return (i + 1) * (n - k - j + 1) * (r - 1);
  if (mn == BiIndex{ij.i - 1, ij.j + 1}) return (j + 1) * (j + 1) * (r - 2);
  if (mn == ij) return j * (k - i - j + (r - 2) * i + (n - k - j) * (r - 1));
  return 0;
}

Certificate adjacency_recurrence_check(const AdjacencyFamily& fam) {
  Certificate cert("adjacency-recurrences", fam.params);
  const std::size_t v = fam.v();
  const std::size_t pos10 = fam.domain.index_of(BiIndex{1, 0});
  const std::size_t pos01 = fam.domain.index_of(BiIndex{0, 1});
  for (std::size_t b = 0; b < fam.domain.size(); ++b) {
    const BiIndex ij = fam.domain.at(b);
    for (std::size_t u = 0; u < v; ++u) {
      for (std::size_t w = 0; w < v; ++w) {
        const BiIndex mn = fam.domain.at(fam.class_of(u, w));
        const long long got10 =
            static_cast<long long>(fam.matrices[pos10].row_dot(u, fam.matrices[b], w));
        const long long want10 = adjacency_recurrence_coeff_x(fam.params, ij, mn);
        if (got10 != want10) {
          cert.fail({ij.i, ij.j, static_cast<long long>(u), static_cast<long long>(w)},
                    std::to_string(want10), std::to_string(got10),
                    "A_10 A_" + bi_str(ij) + " expansion");
        }
        const long long got01 =
            static_cast<long long>(fam.matrices[pos01].row_dot(u, fam.matrices[b], w));
        const long long want01 = adjacency_recurrence_coeff_y(fam.params, ij, mn);
        if (got01 != want01) {
          cert.fail({ij.i, ij.j, static_cast<long long>(u), static_cast<long long>(w)},
                    std::to_string(want01), std::to_string(got01),
                    "A_01 A_" + bi_str(ij) + " expansion");
        }
      }
    }
  }
  return cert;
}

}  // namespace nbj
