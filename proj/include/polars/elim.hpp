#pragma once

// Resultants and first subresultants of bivariate integer polynomials.
//
// Determinants of Sylvester-type matrices are evaluated at integer points modulo
// word-size primes, interpolated, and lifted by Chinese remaindering. The number of
// primes comes from a permanent bound on the coefficients and the number of
// evaluation points from a weighted degree bound, so the result is exact.

#include "polars/polynomial.hpp"
#include "polars/upoly.hpp"

#include <vector>

namespace polars::elim {

using upoly::IntPoly;

/// Integer polynomial in (u, v): coeffs[k] is the coefficient of v^k, a polynomial in u.
struct BiPoly {
    std::vector<IntPoly> coeffs;
    int total_degree = -1;

    int degree_v() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }
};

/// View of an affine polynomial with `other` as u and `eliminated` as v; denominators
/// are cleared and the content removed (same zero set).
BiPoly to_bipoly(const Polynomial& p, int other, int eliminated);
Polynomial from_bipoly(const BiPoly& b, int other, int eliminated);

/// Substitutes u -> u + lambda * v (integer lambda).
BiPoly shear(const BiPoly& p, long lambda);

/// Sum of absolute values of all coefficients.
Integer norm1(const BiPoly& p);

/// Res_v(f, g) as a polynomial in u (Sylvester determinant, f rows first).
IntPoly resultant(const BiPoly& f, const BiPoly& g);

/// First subresultant S_1 = s1 * v + s0 (up to sign). Requires deg_v f, deg_v g >= 1.
/// When one input is linear in v the linear input itself is returned.
struct Subresultant1 {
    IntPoly s1;
    IntPoly s0;
};
Subresultant1 subresultant1(const BiPoly& f, const BiPoly& g);

/// Coefficients s_{k,0..k} of the k-th subresultant of f and g in v. For k at or above
/// the smaller v-degree the lower-degree input is returned (padded to k+1 entries).
std::vector<IntPoly> subresultant(const BiPoly& f, const BiPoly& g, int k);

}  // namespace polars::elim

namespace polars {

/// Resultant of p and q with respect to X_var. The inputs may involve X_var and at
/// most one other variable; the result is a polynomial in that other variable.
/// Throws std::invalid_argument if p or q is zero or has degree 0 in X_var.
Polynomial resultant(const Polynomial& p, const Polynomial& q, int var);

}  // namespace polars
