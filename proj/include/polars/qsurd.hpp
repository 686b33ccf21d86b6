#pragma once

#include "polars/rational.hpp"

#include <optional>
#include <string>

namespace polars {

/// a + b*sqrt(m) with rational a, b and squarefree integer m > 1 (m == 1 encodes a
/// plain rational, b == 0). Mixing two different nontrivial radicands throws
/// std::domain_error.
class QuadSurd {
public:
    QuadSurd() = default;
    QuadSurd(const Rational& a) : a_(a) {}  // NOLINT(google-explicit-constructor)
    QuadSurd(const Rational& a, const Rational& b, long m);

    const Rational& rational_part() const { return a_; }
    const Rational& surd_part() const { return b_; }
    long radicand() const { return m_; }
    bool is_rational() const { return sgn(b_) == 0; }

    int sign() const;
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    double to_double() const;

    QuadSurd conjugate() const { return {a_, -b_, m_}; }
    /// a^2 - m b^2, a rational.
    Rational norm() const { return a_ * a_ - Rational(m_) * b_ * b_; }

    friend QuadSurd operator+(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator-(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator*(const QuadSurd& x, const QuadSurd& y);
    friend QuadSurd operator/(const QuadSurd& x, const QuadSurd& y);
    QuadSurd operator-() const { return {-a_, -b_, m_}; }

    friend bool operator==(const QuadSurd& x, const QuadSurd& y) { return (x - y).is_zero(); }
    friend bool operator<(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() < 0; }
    friend bool operator<=(const QuadSurd& x, const QuadSurd& y) { return (x - y).sign() <= 0; }

    /// Human-readable exact form, e.g. "3", "-sqrt(3)", "1/2+3/2*sqrt(5)", "sqrt(3)/2".
    std::string to_string() const;

private:
    static long common_radicand(const QuadSurd& x, const QuadSurd& y);
    void normalize();

    Rational a_;
    Rational b_;
    long m_ = 1;
};

QuadSurd power(const QuadSurd& x, unsigned k);

/// Splits n = s^2 * m with m squarefree (trial division up to 10^6; a larger cofactor is
/// kept whole unless it is a perfect square). Requires n > 0.
std::pair<Integer, Integer> split_square(const Integer& n);

/// sqrt(r) for rational r >= 0 as a surd.
QuadSurd surd_sqrt(const Rational& r);

/// Tries to express sqrt(x) inside x's own field (x >= 0).
std::optional<QuadSurd> sqrt_in_field(const QuadSurd& x);

}  // namespace polars
