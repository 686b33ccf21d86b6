#pragma once

// Dense univariate polynomials over the integers: exact gcd, square-free
// decomposition and real root isolation.

#include "polars/interval.hpp"
#include "polars/polynomial.hpp"
#include "polars/rational.hpp"

#include <optional>
#include <vector>

namespace polars::upoly {

/// Coefficients from the constant term upward; the zero polynomial is empty.
using IntPoly = std::vector<Integer>;

int degree(const IntPoly& p);
void trim(IntPoly& p);
const Integer& leading(const IntPoly& p);

IntPoly derivative(const IntPoly& p);
Integer content(const IntPoly& p);
/// Divides out the content and makes the leading coefficient positive.
IntPoly primitive(const IntPoly& p);
IntPoly add(const IntPoly& a, const IntPoly& b);
IntPoly sub(const IntPoly& a, const IntPoly& b);
IntPoly mul(const IntPoly& a, const IntPoly& b);
/// a / b when b divides a over Z, otherwise nullopt.
std::optional<IntPoly> exact_div(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (multi-modular, verified by division).
IntPoly gcd(const IntPoly& a, const IntPoly& b);
/// p / gcd(p, p'), primitive.
IntPoly squarefree(const IntPoly& p);
/// Yun decomposition: p = c * prod f_i^i; returns {f_1, f_2, ...} (f_i may be constant 1).
std::vector<IntPoly> squarefree_decomposition(const IntPoly& p);

/// p(x) for rational x.
Rational eval(const IntPoly& p, const Rational& x);
int sign_at(const IntPoly& p, const Rational& x);
/// Interval Horner enclosure.
Interval eval(const IntPoly& p, const Interval& x);

/// Isolating intervals of the real roots of a square-free nonzero p, in increasing
/// order. Each interval either is a single exact rational root or has rational
/// endpoints that are not roots, with exactly one root inside.
std::vector<Interval> isolate_real_roots(const IntPoly& p);

/// Shrinks an isolating interval of a square-free p to width <= w.
Interval refine_root(const IntPoly& p, const Interval& root, const Rational& w);

/// True if p has a root in the isolating interval of square-free q's root (p | q assumed,
/// so p has at most that one root there).
bool vanishes_in(const IntPoly& p, const Interval& root);

/// Univariate view of a polynomial in the single variable X_var, with cleared denominators.
IntPoly from_polynomial(const Polynomial& p, int var);
Polynomial to_polynomial(const IntPoly& p, int var);

/// 1 + max |a_i / a_n|, rounded up to a power of two; returns the exponent.
unsigned long cauchy_bound_log2(const IntPoly& p);

}  // namespace polars::upoly
