#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "nbj/certificate.hpp"
#include "nbj/rational.hpp"
#include "nbj/scheme.hpp"
#include "nbj/spectra.hpp"

namespace nbj {

/// Finitely supported bivariate polynomial; the stored support never
/// contains explicit zeros.
class BivariatePolynomial {
 public:
  using Monomial = std::pair<int, int>;

  BivariatePolynomial() = default;
  static BivariatePolynomial constant(const Rational& c);
  static BivariatePolynomial monomial(int m, int n, const Rational& c);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(int m, int n) const;
  bool is_zero() const { return terms_.empty(); }

  /// Greatest monomial in the deg-lex order; std::nullopt for 0.
  std::optional<Monomial> deg_lex_degree() const;

  Rational eval(const Rational& x, const Rational& y) const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a += b;
  }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) {
    return a -= b;
  }

  BivariatePolynomial scaled(const Rational& c) const;
  BivariatePolynomial shifted(int dm, int dn) const;  // multiply by x^dm y^dn

 private:
  void set(const Monomial& m, const Rational& c);
  std::map<Monomial, Rational> terms_;
};

/// deg-lex: (m,n) <= (i,j) iff m+n < i+j, or m+n = i+j and n <= j.
bool deg_lex_leq(int m, int n, int i, int j);

/// The (alpha, beta) partial order with 0 <= alpha <= 1 and 0 <= beta < 1.
struct OrderType {
  Rational alpha;
  Rational beta;

  OrderType(Rational a, Rational b);
  static OrderType p_type() { return OrderType(Rational(1), Rational(0)); }
  static OrderType q_type() { return OrderType(Rational(0), Rational(1, 2)); }
};

/// (m,n) preceq (i,j) iff m + alpha n <= i + alpha j and beta m + n <= beta i + j.
bool partial_leq(const OrderType& order, int m, int n, int i, int j);

/// Downward closure of the domain under preceq; the witness on failure is a
/// pair (m,n) preceq (i,j) with (i,j) in D but (m,n) not in D.
Certificate domain_compatible(const Domain& domain, const OrderType& order);

/// True iff x^i y^j has a nonzero coefficient and every support monomial is
/// preceq (i,j).
bool poly_compatible(const BivariatePolynomial& p, const BiIndex& degree,
                     const OrderType& order);
/// Offending monomial (or the missing leading monomial itself) when not
/// compatible; std::nullopt when compatible.
std::optional<BivariatePolynomial::Monomial> poly_incompatibility_witness(
    const BivariatePolynomial& p, const BiIndex& degree, const OrderType& order);

/// The polynomials v_ij with A_ij = v_ij(A_10, A_01), built by solving the
/// two displayed product expansions for their leading term (v_00 = 1, rows
/// extended in i by the x-expansion, each new row opened by the y-expansion).
/// Indexed in domain order.
std::vector<BivariatePolynomial> construct_v(const SchemeParams& params);

/// The dual polynomials v*_ij with q_ij(x,y) = v*_ij(theta*_xy, mu*_xy),
/// built from the Krein-parameter recurrences (columns extended in j by the
/// three-term mu* relation at i = 0, then columns in i by the five-term
/// theta* relation).  A required leading Krein parameter equal to zero is a
/// certification failure recorded in the certificate; `polys` is then empty.
struct VStarConstruction {
  std::vector<BivariatePolynomial> polys;
  Certificate certificate;
};
VStarConstruction construct_v_star(const SpectralData& sd, const CoefficientTable& krein);

/// Bivariate P-polynomial certification of type (1,0).  Two routes that must
/// agree: (a) intersection-number support conditions, (b) domain
/// compatibility + compatible polynomials + the evaluation identity
/// p_ij(x,y) = v_ij(theta_xy, mu_xy) on the full grid.
Certificate certify_P(const SpectralData& sd, const IntersectionTable& inter);

/// Bivariate Q-polynomial certification of type (0,1/2); same two routes on
/// the dual side (Krein support conditions / v*_ij and the dual evaluation
/// identity).  Both routes fail on n < 2k-1 with the domain witness.
Certificate certify_Q(const SpectralData& sd, const CoefficientTable& krein);

/// The five-term theta* and three-term mu* recurrences of the dual
/// eigenvalues, verified at every ((i,j),(x,y)).  Out-of-domain targets are
/// dropped before their coefficient is evaluated; closed-form coefficients
/// are compared against the Krein parameters wherever defined, and each
/// removable singularity resolved by the Krein route is counted in the
/// certificate notes.
Certificate dual_recurrence_check(const SpectralData& sd, const CoefficientTable& krein);

/// Closed forms of the mu* recurrence coefficients A-hat, B-hat, C-hat.
/// Throws SingularCoefficientError when a denominator vanishes.
Rational dual_recurrence_coeff_A(const SchemeParams& p, const BiIndex& ij);
Rational dual_recurrence_coeff_B(const SchemeParams& p, const BiIndex& ij);
Rational dual_recurrence_coeff_C(const SchemeParams& p, const BiIndex& ij);
/// Closed form of the theta* recurrence coefficient on target mn.
Rational dual_recurrence_coeff_theta(const SchemeParams& p, const BiIndex& ij,
                                     const BiIndex& mn);

}  // namespace nbj
