#include "polars/qsurd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace polars {

QuadSurd::QuadSurd(const Rational& a, const Rational& b, long m) : a_(a), b_(b), m_(m) {
    if (m < 1) throw std::domain_error("QuadSurd radicand must be positive");
    normalize();
}

void QuadSurd::normalize() {
    if (sgn(b_) == 0 || m_ == 1) {
        if (m_ == 1) a_ += b_;
        b_ = 0;
        m_ = 1;
    }
}

long QuadSurd::common_radicand(const QuadSurd& x, const QuadSurd& y) {
    if (x.m_ == 1) return y.m_;
    if (y.m_ == 1 || x.m_ == y.m_) return x.m_;
    throw std::domain_error("QuadSurd: incompatible radicands " + std::to_string(x.m_) + " and " + std::to_string(y.m_));
}

QuadSurd operator+(const QuadSurd& x, const QuadSurd& y) {
    return {x.a_ + y.a_, x.b_ + y.b_, QuadSurd::common_radicand(x, y)};
}

QuadSurd operator-(const QuadSurd& x, const QuadSurd& y) {
    return {x.a_ - y.a_, x.b_ - y.b_, QuadSurd::common_radicand(x, y)};
}

QuadSurd operator*(const QuadSurd& x, const QuadSurd& y) {
    const long m = QuadSurd::common_radicand(x, y);
    return {x.a_ * y.a_ + Rational(m) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_, m};
}

QuadSurd operator/(const QuadSurd& x, const QuadSurd& y) {
    if (y.is_zero()) throw std::domain_error("QuadSurd division by zero");
    const Rational n = y.norm();
    QuadSurd num = x * y.conjugate();
    return {num.a_ / n, num.b_ / n, num.m_};
}

int QuadSurd::sign() const {
    const int sa = sgn(a_), sb = sgn(b_);
    if (sb == 0) return sa;
    if (sa == 0 || sa == sb) return sb;
    // opposite signs: compare a^2 with m b^2
    const int c = cmp(a_ * a_, Rational(m_) * b_ * b_);
    return c > 0 ? sa : (c < 0 ? sb : 0);
}

double QuadSurd::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(m_)); }

std::string QuadSurd::to_string() const {
    std::ostringstream os;
    if (is_rational()) return a_.get_str();
    if (sgn(a_) != 0) os << a_.get_str();
    const Rational mag = abs(b_);
    if (sgn(b_) < 0)
        os << '-';
    else if (sgn(a_) != 0)
        os << '+';
    const std::string root = "sqrt(" + std::to_string(m_) + ")";
    if (mag == 1)
        os << root;
    else if (mag.get_num() == 1)
        os << root << '/' << mag.get_den().get_str();
    else
        os << mag.get_str() << '*' << root;
    return os.str();
}

QuadSurd power(const QuadSurd& x, unsigned k) {
    QuadSurd r(Rational(1));
    QuadSurd b = x;
    while (k) {
        if (k & 1U) r = r * b;
        b = b * b;
        k >>= 1U;
    }
    return r;
}

std::pair<Integer, Integer> split_square(const Integer& n_in) {
    if (sgn(n_in) <= 0) throw std::domain_error("split_square expects a positive integer");
    Integer n = n_in, s = 1, m = 1;
    for (unsigned long q = 2; q < 1000000 && Integer(q) * q <= n; q += (q == 2 ? 1 : 2)) {
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
            ++e;
        }
        for (int i = 0; i + 1 < e; i += 2) s *= q;
        if (e % 2 == 1) m *= q;
    }
    if (n > 1) {
        if (mpz_perfect_square_p(n.get_mpz_t())) {
            Integer r;
            mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
            s *= r;
        } else {
            m *= n;
        }
    }
    return {s, m};
}

QuadSurd surd_sqrt(const Rational& r) {
    if (sgn(r) < 0) throw std::domain_error("surd_sqrt of a negative number");
    if (sgn(r) == 0) return QuadSurd(Rational(0));
    // sqrt(p/q) = sqrt(p q) / q
    Integer pq = r.get_num() * r.get_den();
    auto [s, m] = split_square(pq);
    if (!m.fits_slong_p()) throw std::domain_error("radicand too large");
    Rational coef(s, r.get_den());
    coef.canonicalize();
    if (m == 1) return QuadSurd(coef);
    return {Rational(0), coef, m.get_si()};
}

std::optional<QuadSurd> sqrt_in_field(const QuadSurd& x) {
    if (x.sign() < 0) return std::nullopt;
    if (x.is_rational()) {
        QuadSurd r = surd_sqrt(x.rational_part());
        return r;
    }
    // (p + q sqrt m)^2 = p^2 + m q^2 + 2pq sqrt m = a + b sqrt m.
    // p^2 = (a +- sqrt(norm)) / 2 with norm = a^2 - m b^2 a rational square.
    const Rational n = x.norm();
    if (sgn(n) < 0) return std::nullopt;
    QuadSurd rn = surd_sqrt(n);
    if (!rn.is_rational()) return std::nullopt;
    for (int s : {1, -1}) {
        Rational p2 = (x.rational_part() + s * rn.rational_part()) / 2;
        if (sgn(p2) <= 0) continue;
        QuadSurd p = surd_sqrt(p2);
        if (!p.is_rational()) continue;
        Rational q = x.surd_part() / (2 * p.rational_part());
        QuadSurd cand(p.rational_part(), q, x.radicand());
        if (cand * cand == x) return cand.sign() >= 0 ? cand : -cand;
    }
    return std::nullopt;
}

}  // namespace polars
