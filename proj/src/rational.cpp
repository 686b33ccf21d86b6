#include "polars/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace polars {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

Rational dyadic(const Integer& num, unsigned long exp2) {
    Rational r(num);
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), exp2);
    return r;
}

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw std::invalid_argument("malformed rational: " + std::string(text));
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (negative) n = -n;
    return make_rational(n, d);
}

std::string to_string(const Rational& r) { return r.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

double to_double(const Rational& r) { return r.get_d(); }

std::string to_decimal(const Rational& r, int digits) {
    // mpf keeps enough bits for 12-17 significant digits without the double's range limits.
    mpf_class f(r, 256);
    char buf[128];
    gmp_snprintf(buf, sizeof buf, "%.*Fg", digits, f.get_mpf_t());
    return buf;
}

int sign(const Rational& r) { return sgn(r); }

int sign(const Integer& z) { return sgn(z); }

}  // namespace polars
