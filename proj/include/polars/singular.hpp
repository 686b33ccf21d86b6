#pragma once

// Tangent cones and classification of real singular points of affine plane curves.
// Singular points with coordinates in Q or in one real quadratic field Q(sqrt m) are
// recognised exactly; anything else is reported Unclassified with its certified box.

#include "polars/polynomial.hpp"
#include "polars/qsurd.hpp"
#include "polars/solve.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polars {

struct ExactPoint {
    QuadSurd x;
    QuadSurd y;
};

/// Projective pair (a : b) with entries in Q or Q(sqrt m), scaled so that a is a positive
/// integer when nonzero (otherwise b == 1) and the pair is primitive.
struct Direction {
    QuadSurd a;
    QuadSurd b;

    static Direction normalized(const QuadSurd& a, const QuadSurd& b);
    std::string to_string() const;  // "(3 : -sqrt(3))"
    /// The line a*X1 + b*X2 = 0 in local coordinates, e.g. "V(3*X1-sqrt(3)*X2)".
    std::string line() const;
    friend bool operator==(const Direction& p, const Direction& q) {
        return p.a * q.b - p.b * q.a == QuadSurd(Rational(0));
    }
};

/// Binary form sum_i c[i] u^i v^(deg-i) with coefficients in Q(sqrt m).
struct BinaryForm {
    int degree = 0;
    std::vector<QuadSurd> c;
    bool is_rational() const;
};

enum class SingularKind { OrdinaryRealMultiple, Cusp, NonOrdinary, Unclassified };
std::string to_string(SingularKind k);

struct ConeFactor {
    std::optional<Direction> line;  // exact linear form a*u + b*v, if expressible
    double angle = 0;               // direction of (a, b) in [0, pi), display
    int multiplicity = 1;
};

struct SingularityReport {
    CertifiedPoint location;
    std::optional<ExactPoint> exact;
    int multiplicity = 2;  // a lower bound when kind is Unclassified
    std::vector<ConeFactor> factors;  // real linear factors of the tangent cone
    int complex_pairs = 0;            // non-real conjugate factor pairs
    SingularKind kind = SingularKind::Unclassified;
    int real_branches = -1;           // -1 when not determined
};

/// Lowest homogeneous part of f(X + P) in the local variables (X1, X2), for a rational
/// singular point P. Throws std::invalid_argument if P is not a singular point of f.
Polynomial tangent_cone(const Polynomial& f, const Rational& p1, const Rational& p2);
/// Same at a point with coordinates in Q(sqrt m).
BinaryForm tangent_cone(const Polynomial& f, const ExactPoint& p);

/// Exact coordinates of a certified singular point of f when they lie in Q or Q(sqrt m).
/// The candidate is verified: f, fx, fy vanish there and it lies in the isolating box.
std::optional<ExactPoint> exact_location(const Polynomial& f, const CertifiedPoint& p);

/// Number of sign changes of f along the boundary of the square of half-width r centred
/// at c; nullopt if a corner lies on the curve or an edge is contained in it.
std::optional<int> boundary_crossings(const Polynomial& f, const Rational& c1, const Rational& c2, const Rational& r);

/// Classifies a certified singular point. `others` are the remaining singular points of
/// f, used to keep the branch-counting square away from them.
SingularityReport classify(const Polynomial& f, const CertifiedPoint& p, std::span<const CertifiedPoint> others = {});

/// Singular points of f with their classification.
std::vector<SingularityReport> classify_all(const Polynomial& f);

/// (fx(P) : fy(P)) at a nonsingular exact point. Throws std::invalid_argument at a singular point.
Direction gauss_direction(const Polynomial& f, const ExactPoint& p);

}  // namespace polars
