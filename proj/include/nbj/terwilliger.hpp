#pragma once

#include <cstdint>
#include <vector>

#include "nbj/bispectral.hpp"
#include "nbj/certificate.hpp"
#include "nbj/matrix.hpp"
#include "nbj/scheme.hpp"
#include "nbj/spectra.hpp"

namespace nbj {

/// Dual adjacency matrices and dual idempotents with respect to a base
/// vertex, stored as their diagonals: (A*_mn)_yy = v (E_mn)_{x0,y} and
/// (E*_ij)_yy = (A_ij)_{x0,y}.
struct DualPair {
  std::size_t base = 0;
  std::vector<std::vector<Rational>> astar;      // [mn][y]
  std::vector<std::vector<std::uint8_t>> estar;  // [ij][y]
};

DualPair build_duals(const AdjacencyFamily& fam, const SpectralData& sd, std::size_t base);

/// Partition property of the dual idempotents, the rank-one E*_00, the two
/// displayed change-of-basis relations between A* and E*, and the expansion
/// A*_ij A*_kl = sum q_{ij,kl}^{mn} A*_mn.
Certificate dual_basics_check(const AdjacencyFamily& fam, const SpectralData& sd,
                              const CoefficientTable& krein, const DualPair& duals);

/// The two vanishing equivalences E*_ij A_mn E*_rs = 0 <=> p_{ij,mn}^{rs} = 0
/// and E_ij A*_mn E_rs = 0 <=> q_{ij,mn}^{rs} = 0 over all index triples.
/// The second family is decided through the exact sum of squared entries;
/// raw matrix products are used additionally when v <= raw_limit.
Certificate triple_product_check(const AdjacencyFamily& fam, const SpectralData& sd,
                                 const CoefficientTable& krein, const IntersectionTable& inter,
                                 const DualPair& duals,
                                 const std::vector<Matrix>& idempotents,
                                 std::size_t raw_limit = 24);

/// The five displayed subconstituent-algebra relations as exact v x v
/// identities: [A*_01, A_10] = 0, the two Dolan-Grady relations of
/// (A*_10, A_10), and the two tridiagonal relations of (A*_01, A_01) with
/// the central A_10 extension.  The Q-dependent relations are skipped (with
/// a note) when n < 2k-1.
Certificate subconstituent_relations_check(const AdjacencyFamily& fam, const SpectralData& sd,
                                           const DualPair& duals);

/// Representations of A_10, A_01, A*_10, A*_01 on the primary-module basis
/// {A_ij x0}: the dual generators act diagonally with entries theta*_ij and
/// mu*_ij, the four correspondence equations onto X, Y, X*, Y* hold, and the
/// representations satisfy the same five relations as the v x v matrices.
Certificate primary_module_check(const AdjacencyFamily& fam, const SpectralData& sd,
                                 const DualPair& duals, const OperatorQuadruple& quad);

/// Negative control: the raw generators A_10, A_01, A*_10, A*_01 must NOT
/// satisfy the gl_2 / Hahn-algebra relations of X, Y, X*, Y*; the
/// certificate passes iff at least one of the four residuals is nonzero and
/// records which.
Certificate raw_generators_negative_check(const AdjacencyFamily& fam, const SpectralData& sd,
                                          const DualPair& duals);

}  // namespace nbj
