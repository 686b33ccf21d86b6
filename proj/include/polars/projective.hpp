#pragma once

// Projective points and lines of P^2 over Q, quadric polarity, and the classical and
// reciprocal polar curves of a plane curve.

#include "polars/polynomial.hpp"
#include "polars/rational.hpp"

#include <array>
#include <stdexcept>
#include <string>

namespace polars {

using Triple = std::array<Rational, 3>;
using Matrix3 = std::array<Triple, 3>;

/// Coordinates (a0 : a1 : a2), stored as given; compare and print via canonical().
struct ProjPoint {
    Triple c;

    ProjPoint() = default;
    ProjPoint(Rational a0, Rational a1, Rational a2);
    explicit ProjPoint(const Triple& t);

    /// First nonzero coordinate scaled to 1.
    ProjPoint canonical() const;
    bool is_affine() const { return sgn(c[0]) != 0; }
    std::string to_string() const;
    friend bool operator==(const ProjPoint& p, const ProjPoint& q);
};

/// The line b0 X0 + b1 X1 + b2 X2 = 0.
struct ProjLine {
    Triple c;

    ProjLine() = default;
    ProjLine(Rational b0, Rational b1, Rational b2);
    explicit ProjLine(const Triple& t);

    ProjLine canonical() const;
    std::string to_string() const;
    friend bool operator==(const ProjLine& p, const ProjLine& q);

    static ProjLine at_infinity() { return {1, 0, 0}; }
};

bool incident(const ProjPoint& p, const ProjLine& l);

/// L0 subset L1 with L1 the line at infinity.
struct Flag2D {
    ProjPoint point;
    ProjLine line_at_infinity = ProjLine::at_infinity();

    explicit Flag2D(const ProjPoint& p);
};

class Quadric {
public:
    /// Accepts a quadratic form in X0, X1, X2; an affine quadratic polynomial is
    /// homogenised first. Throws std::invalid_argument if degenerate or not quadratic.
    static Quadric from_polynomial(const Polynomial& q);
    /// X0^2 + X1^2 + X2^2.
    static Quadric standard();

    const Polynomial& polynomial() const { return q_; }
    const Matrix3& sym() const { return sym_; }
    Rational det() const;
    /// Restriction to the affine chart is a positive definite form in X1, X2.
    bool distance_like() const;

    friend bool operator==(const Quadric& a, const Quadric& b) { return a.q_ == b.q_; }

private:
    Polynomial q_;
    Matrix3 sym_{};
};

class DegeneratePolarError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// sum_i a_i df/dX_i for homogeneous f of degree >= 2. Throws DegeneratePolarError when
/// the polar vanishes identically (A of full multiplicity).
Polynomial classical_polar(const Polynomial& f, const ProjPoint& a);

/// sum_i dq/dX_i(A) X_i, i.e. 2 sym A.
ProjLine polar_line(const Quadric& q, const ProjPoint& a);
/// sym^-1 L, the pole of L.
ProjPoint polar_point(const Quadric& q, const ProjLine& l);

/// det of the matrix with rows A, grad f, grad q (cofactors along A).
Polynomial reciprocal_polar(const Polynomial& f, const Quadric& q, const ProjPoint& a);

/// Rows (df/dX1, df/dX2) and (dq/dX1, dq/dX2) of affine f and q.
using PolyMatrix2 = std::array<std::array<Polynomial, 2>, 2>;
PolyMatrix2 reciprocal_minor_matrix(const Polynomial& f, const Polynomial& q_affine);
Polynomial minor(const PolyMatrix2& m);

/// (1 + sum a_i^2) X0^2 - 2 sum a_i X0 X_i + sum X_i^2 for the affine centre A.
/// Throws std::invalid_argument if A is at infinity.
Quadric quadric_for_center(const ProjPoint& a);

/// Affine centre (x, y) as the projective point (1 : x : y).
inline ProjPoint affine_point(const Rational& x, const Rational& y) { return {1, x, y}; }

/// Homogeneous view of an affine curve polynomial (already homogeneous input is kept).
Polynomial projective_curve(const Polynomial& f);

}  // namespace polars
