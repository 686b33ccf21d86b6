#include "polars/interval.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace polars {

Interval::Interval(const Rational& l, const Rational& h) : lo(l), hi(h) {
    if (hi < lo) throw std::invalid_argument("interval with lo > hi");
}

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }

Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }

Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
    if (a.is_point() && b.is_point()) return Interval(a.lo * b.lo);
    Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    auto [mn, mx] = std::minmax_element(std::begin(p), std::end(p));
    return {*mn, *mx};
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
    Rational inv_lo = 1 / b.hi;
    Rational inv_hi = 1 / b.lo;
    return a * Interval(inv_lo, inv_hi);
}

Interval& operator+=(Interval& a, const Interval& b) {
    a.lo += b.lo;
    a.hi += b.hi;
    return a;
}

Interval& operator*=(Interval& a, const Interval& b) {
    a = a * b;
    return a;
}

namespace {

Rational rpow(const Rational& x, unsigned k) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), k);
    return r;
}

}  // namespace

Interval ipow(const Interval& x, unsigned k) {
    if (k == 0) return Interval(Rational(1));
    Rational a = rpow(x.lo, k);
    Rational b = rpow(x.hi, k);
    if (k % 2 == 1) return {a, b};
    if (sgn(x.lo) >= 0) return {a, b};
    if (sgn(x.hi) <= 0) return {b, a};
    return {Rational(0), std::max(a, b)};
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

std::ostream& operator<<(std::ostream& os, const Interval& x) {
    return os << '[' << x.lo.get_str() << ", " << x.hi.get_str() << ']';
}

}  // namespace polars
