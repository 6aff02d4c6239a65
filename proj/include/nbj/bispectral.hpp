#pragma once

#include "nbj/certificate.hpp"
#include "nbj/matrix.hpp"
#include "nbj/scheme.hpp"
#include "nbj/spectra.hpp"

namespace nbj {

/// The four bispectral operators on the span W of the eigenvalue functions
/// p_ij, in the coefficient basis indexed by the domain (column = source
/// label).  Xstar and Ystar are diagonal with entries i and j.
struct OperatorQuadruple {
  Domain domain;
  Matrix X, Y, Xstar, Ystar;
};

OperatorQuadruple build_quadruple(const SchemeParams& params);

/// X equals the matrix of the A_10 expansion shifted by -k(r-2) I, Y equals
/// the matrix of the A_01 expansion (both against the combinatorial
/// intersection numbers), and the support stencils are as expected.
Certificate operator_construction_check(const OperatorQuadruple& quad,
                                        const SpectralData& sd,
                                        const IntersectionTable& inter);

/// The seven algebra relations ([X,Y], [X*,Y*], [X,Y*], the two gl_2
/// relations of the pair (X,X*) and the two Hahn-algebra relations of the
/// pair (Y,Y*)), plus the rational annihilating polynomial
/// prod_{x=0..k} (X + x(r-1)) = 0.
Certificate algebra_relations_check(const OperatorQuadruple& quad);

/// The two difference relations of the eigenvalues: the seven-term relation
/// for i p_ij(x,y) and the three-term relation for j p_ij(x,y), verified for
/// every ((i,j),(x,y)).  Coefficients come from the duality route (Krein
/// parameters times multiplicity ratios); the displayed closed forms are
/// compared against them wherever their denominators do not vanish.
Certificate difference_relation_check(const SpectralData& sd, const CoefficientTable& krein);

}  // namespace nbj
