#pragma once

#include "polars/rational.hpp"

#include <iosfwd>

namespace polars {

/// Closed interval [lo, hi] with exact rational endpoints.
struct Interval {
    Rational lo;
    Rational hi;

    Interval() = default;
    Interval(const Rational& point) : lo(point), hi(point) {}  // NOLINT(google-explicit-constructor)
    Interval(const Rational& l, const Rational& h);

    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool contains_zero() const { return sgn(lo) <= 0 && sgn(hi) >= 0; }
    bool intersects(const Interval& o) const { return !(hi < o.lo || o.hi < lo); }
    bool is_point() const { return lo == hi; }

    friend bool operator==(const Interval&, const Interval&) = default;
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws std::domain_error if the divisor contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval& operator+=(Interval& a, const Interval& b);
Interval& operator*=(Interval& a, const Interval& b);

/// Tight power: even powers of intervals straddling zero start at 0.
Interval ipow(const Interval& x, unsigned k);

Interval hull(const Interval& a, const Interval& b);

std::ostream& operator<<(std::ostream& os, const Interval& x);

}  // namespace polars
