#pragma once

// Certified real solving of univariate polynomials and of bivariate systems.
//
// A system (f, g) is sheared, X1 <- X1 + lambda*X2, until both polynomials have constant
// leading coefficients in X2 and the first subresultant does not vanish at any root of
// the square-free resultant. Then each real root alpha of Res_X2 carries exactly one
// complex (hence real) solution, X2 = -s0(alpha)/s1(alpha).

#include "polars/interval.hpp"
#include "polars/polynomial.hpp"
#include "polars/upoly.hpp"

#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace polars {

struct Box {
    Interval x;
    Interval y;

    Rational width() const { return std::max(x.width(), y.width()); }
    bool intersects(const Box& o) const { return x.intersects(o.x) && y.intersects(o.y); }
    bool contains(const Box& o) const { return x.contains(o.x) && y.contains(o.y); }
    std::pair<Rational, Rational> center() const { return {x.midpoint(), y.midpoint()}; }

    friend bool operator==(const Box&, const Box&) = default;
};

struct IsolatingInterval {
    Interval interval;
    std::shared_ptr<const upoly::IntPoly> poly;  // square-free target
    int sign_at_lo = 0;                           // 0 when the interval is an exact root
};

class CommonComponentError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace detail {
struct SolutionBranch;
}

/// A real plane point enclosed by a rational box that contains exactly one real
/// solution of its system. Immutable; refinement returns a new value.
class CertifiedPoint {
public:
    const Box& box() const { return box_; }
    std::pair<double, double> approx() const;
    int multiplicity_hint() const { return multiplicity_; }
    const Polynomial& f() const;
    const Polynomial& g() const;

    /// Same solution, box width <= w in both coordinates.
    CertifiedPoint refined(const Rational& w) const;

private:
    friend struct detail::SolutionBranch;

    std::shared_ptr<const detail::SolutionBranch> branch_;
    Interval u_;  // isolating interval of the sheared X1 coordinate
    int stratum_ = 0;
    Box box_;
    int multiplicity_ = 1;
};

struct ExcludedPoint {
    CertifiedPoint point;
    std::string reason;
};

struct SolutionSet {
    std::vector<CertifiedPoint> points;
    std::vector<ExcludedPoint> excluded;
};

// --- univariate --------------------------------------------------------------

/// Square-free part of a univariate polynomial (any single variable), primitive.
Polynomial squarefree(const Polynomial& p);
/// Isolating intervals of the distinct real roots of a univariate polynomial.
std::vector<IsolatingInterval> isolate_roots(const Polynomial& p);

// --- bivariate ---------------------------------------------------------------

/// All real common zeros of affine f and g (inside `box` when given).
/// Throws CommonComponentError if f and g share a curve component.
SolutionSet solve_system(const Polynomial& f, const Polynomial& g, const std::optional<Box>& box = std::nullopt);

CertifiedPoint refine(const CertifiedPoint& point, const Rational& width);

/// Refines the points until their boxes are pairwise disjoint.
void separate(std::vector<CertifiedPoint>& points);

/// Real singular points of a square-free affine curve, computed as the real solutions
/// of (f, fx^2 + fy^2). Throws std::invalid_argument if f is not square-free.
SolutionSet singular_points(const Polynomial& f);

/// True if the affine polynomial has no repeated factor.
bool is_squarefree(const Polynomial& f);

/// Index of the candidate whose box holds `s`, given that s is itself a solution of the
/// candidates' common system (so it lies in exactly one of their boxes). Refines both
/// sides until exactly one candidate box meets s's box. Returns nullopt if none does.
std::optional<std::size_t> locate(const CertifiedPoint& s, std::vector<CertifiedPoint>& candidates);

/// Shear parameters tried by solve_system, in order (0 first, then a fixed-seed sequence).
const std::vector<long>& shear_sequence();

}  // namespace polars
