#pragma once

#include <gmpxx.h>

#include <vector>

#include "nbj/certificate.hpp"
#include "nbj/rational.hpp"

namespace nbj {

/// Binomial coefficient under the generalized convention: 0 when b < 0,
/// otherwise the falling factorial a(a-1)...(a-b+1)/b!, valid for negative a.
mpz_class binomial_z(long a, long b);
Rational binomial(long a, long b);

/// K_i(x,N,p) = sum_l (-1)^l (p-1)^(i-l) C(x,l) C(N-x,i-l).
Rational krawtchouk(long i, long x, long N, long p);

/// Eberlein (dual Hahn) polynomial, first closed form:
/// E_i(x,N,p) = sum_l (-1)^l C(x,l) C(p-x,i-l) C(N-p-x,i-l).
Rational eberlein(long i, long x, long N, long p);

/// Second closed form: sum_l (-1)^(i+l) C(p-l,p-i) C(p-x,l) C(N-p-x+l,l).
/// Must agree with eberlein() everywhere; kept as an independent route.
Rational eberlein_second_form(long i, long x, long N, long p);

/// H_i(x,N,p) = (C(N,i) - C(N,i-1)) / (C(p,x) C(N-p,x)) * E_x(i,N,p).
/// Note the argument swap: the Eberlein factor is E_x evaluated at i.
/// Throws DomainError when C(p,x) C(N-p,x) = 0.
Rational hahn(long i, long x, long N, long p);

/// LHS - RHS of  p x K_i = -(i+1)K_{i+1} + (i+(p-1)(N-i))K_i - (p-1)(N-i+1)K_{i-1},
/// with K_{-1} := 0.  Identically zero.
Rational krawtchouk_recurrence_residual(long i, long x, long N, long p);

struct HahnRecurrenceCoeffs {
  Rational A, B, C;
};

/// Coefficients of  -x H_r = A_r H_{r+1} + B_r H_r + C_r H_{r-1}.
/// Throws SingularCoefficientError when any of the four denominators
/// (2r-N), (N-2r-1), (2r-N-2), (N-2r+3) vanishes.
HahnRecurrenceCoeffs hahn_recurrence_coeffs(long r, long N, long p);

/// LHS - RHS of the Hahn three-term recurrence, with H_{-1} := 0.
Rational hahn_recurrence_residual(long r, long x, long N, long p);

/// Residual of the parameter-shift relation
/// H_r(x,N,p) = (N/p) [ (p-r)/(N-2r) H_r(x,N-1,p-1)
///                     + (N-p-r+1)/(N-2r+2) H_{r-1}(x,N-1,p-1) ].
/// Identically zero.  Throws DomainError on p = 0, N-2r = 0 or N-2r+2 = 0.
Rational hahn_parameter_shift_residual(long r, long x, long N, long p);

/// Terminating generalized hypergeometric series sum_l (a1)_l...(ar)_l /
/// ((b1)_l...(bs)_l l!) z^l.  A numerator Pochhammer reaching zero
/// terminates the series; a denominator Pochhammer reaching zero first is a
/// DomainError, as is a series that fails to terminate.
Rational generalized_hypergeometric(const std::vector<Rational>& upper,
                                    const std::vector<Rational>& lower,
                                    const Rational& z);

struct BridgeResiduals {
  Rational krawtchouk, hahn, eberlein;
};

/// Residuals of the three bridges to the hypergeometric normalizations
/// (with mu = min(p, N-p)):
///   K_i(x,N,p)  vs  C(N,i) (p-1)^i 2F1(-i,-x;-N | p/(p-1))
///   H_i(x,N,p)  vs  (C(N,i)-C(N,i-1)) 3F2(-i,i-N-1,-x; mu-N,-mu | 1)
///   E_i(x,N,p)  vs  C(p,i) C(N-p,i)   3F2(-i,-x,x-N-1; mu-N,-mu | 1)
/// All identically zero where defined; each bridge throws DomainError on its
/// own parameter constraints only.
Rational krawtchouk_bridge_residual(long i, long x, long N, long p);
Rational hahn_bridge_residual(long i, long x, long N, long p);
Rational eberlein_bridge_residual(long i, long x, long N, long p);
BridgeResiduals hypergeometric_bridge_residuals(long i, long x, long N, long p);

/// Exhaustive grid suite: agreement of the two Eberlein closed forms
/// (N <= 12), the Krawtchouk and Hahn three-term recurrences, H_0 = 1, the
/// Hahn parameter-shift relation on r <= p <= N <= 10, and the three
/// hypergeometric bridges on i,x <= 4, N <= 8.
Certificate orthopoly_grid_check();

}  // namespace nbj
