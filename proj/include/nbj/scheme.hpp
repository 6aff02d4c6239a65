#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "nbj/certificate.hpp"
#include "nbj/matrix.hpp"
#include "nbj/params.hpp"

namespace nbj {

/// A vertex is a length-n word over {0,...,r-1} of weight k.
using Vertex = std::vector<std::uint8_t>;

/// Relation / eigenspace label.
struct BiIndex {
  int i = 0;
  int j = 0;
  friend auto operator<=>(const BiIndex&, const BiIndex&) = default;
};

/// The index domain D = {(a,b) : a+b <= k, b <= min(k, n-k)}, listed in
/// lexicographic order.  Shared by relations, eigenspaces and polynomials.
class Domain {
 public:
  static Domain make(const SchemeParams& params);

  const SchemeParams& params() const { return params_; }
  const std::vector<BiIndex>& indices() const { return indices_; }
  std::size_t size() const { return indices_.size(); }
  const BiIndex& at(std::size_t pos) const { return indices_[pos]; }
  bool contains(const BiIndex& ij) const;
  /// Position in the sorted listing; throws std::out_of_range when absent.
  std::size_t index_of(const BiIndex& ij) const;
  /// Like index_of, but -1 when absent.
  long find(const BiIndex& ij) const;

 private:
  SchemeParams params_;
  std::vector<BiIndex> indices_;
};

struct PairStatistics {
  int equal_nonzero = 0;   // e(x,y)
  int common_nonzero = 0;  // c(x,y)
};

int weight(const Vertex& x);
PairStatistics pair_statistics(const Vertex& x, const Vertex& y);

/// Relation label of a pair: (i,j) = (c-e, k-c), where e(x,y) = k-i-j and
/// c(x,y) = k-j.  Always lands in the domain; a result outside it would be
/// an internal invariant violation.
BiIndex classify_pair(const Vertex& x, const Vertex& y);

/// Exact vertex count C(n,k) (r-1)^k.
mpz_class vertex_count(const SchemeParams& params);

/// All weight-k words in lexicographic order.  Throws ResourceError when the
/// count exceeds max_vertices.
std::vector<Vertex> enumerate_vertices(const SchemeParams& params,
                                       std::size_t max_vertices = 5000);

/// Vertices, relation classification of every pair, and the 0/1 adjacency
/// matrices indexed by the domain.
struct AdjacencyFamily {
  SchemeParams params;
  Domain domain;
  std::vector<Vertex> vertices;
  std::vector<BinaryMatrix> matrices;          // aligned with domain.indices()
  std::vector<std::uint16_t> pair_class;       // v*v grid of domain positions
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>>
      representatives;                         // up to 5 pairs per class

  std::size_t v() const { return vertices.size(); }
  std::size_t class_of(std::size_t u, std::size_t w) const {
    return pair_class[u * vertices.size() + w];
  }
  const BinaryMatrix& matrix(const BiIndex& ij) const {
    return matrices[domain.index_of(ij)];
  }
};

AdjacencyFamily build_adjacency(const SchemeParams& params, std::size_t max_vertices = 5000);

/// Association scheme axioms: identity, completeness (every pair in exactly
/// one relation), symmetry, non-emptiness, and closure of products in the
/// linear span (entrywise, over the integers).  Failures are reported in the
/// certificate, not thrown.
Certificate verify_axioms(const AdjacencyFamily& fam);

/// Intersection numbers p_{ij,kl}^{mn} by counting common neighbours for
/// representative pairs of each class; cross-checks up to five
/// representatives per class and throws InternalError if they disagree.
std::vector<long long> intersection_numbers(const AdjacencyFamily& fam, const BiIndex& ij,
                                            const BiIndex& kl);

/// p[ij][kl][mn] for all labels, via intersection_numbers.
using IntersectionTable = std::vector<std::vector<std::vector<long long>>>;
IntersectionTable intersection_table(const AdjacencyFamily& fam);

/// Entrywise check of the two displayed product expansions
///   A_10 A_ij = (k-i-j+1)(r-2) A_{i-1,j} + (i(r-3)+j(r-2)) A_ij + (i+1) A_{i+1,j}
/// and the seven-term expansion of A_01 A_ij, with out-of-domain targets
/// dropped.
Certificate adjacency_recurrence_check(const AdjacencyFamily& fam);

/// Closed-form coefficient of A_mn in A_10 A_ij (zero off the stencil).
long long adjacency_recurrence_coeff_x(const SchemeParams& p, const BiIndex& ij,
                                       const BiIndex& mn);
/// Closed-form coefficient of A_mn in A_01 A_ij.
long long adjacency_recurrence_coeff_y(const SchemeParams& p, const BiIndex& ij,
                                       const BiIndex& mn);

}  // namespace nbj
