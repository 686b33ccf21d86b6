#include "polars/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace polars {

namespace {

void check_nvars(int nvars) {
    if (nvars != 2 && nvars != 3) throw std::invalid_argument("nvars must be 2 or 3");
}

}  // namespace

Polynomial::Polynomial(int nvars) : nvars_(nvars) { check_nvars(nvars); }

Polynomial Polynomial::constant(const Rational& c, int nvars) {
    Polynomial p(nvars);
    p.add_term(Monomial{}, c);
    return p;
}

Polynomial Polynomial::variable(int index, int nvars) {
    if (index < 0 || index > 2) throw std::invalid_argument("variable index out of range");
    if (index == 0) nvars = 3;
    Monomial m;
    m.exps[index] = 1;
    return term(m, 1, nvars);
}

Polynomial Polynomial::term(const Monomial& m, const Rational& c, int nvars) {
    if (m.exps[0] != 0) nvars = 3;
    Polynomial p(nvars);
    p.add_term(m, c);
    return p;
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.degree() == 0); }

int Polynomial::degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.begin()->first.degree()); }

int Polynomial::degree_in(int var) const {
    if (terms_.empty()) return -1;
    unsigned d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.exps[var]);
    return static_cast<int>(d);
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    unsigned d = terms_.begin()->first.degree();
    return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

std::vector<int> Polynomial::used_variables() const {
    std::vector<int> vars;
    for (int v = 0; v < 3; ++v)
        if (degree_in(v) > 0) vars.push_back(v);
    return vars;
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (sgn(c) == 0) return;
    if (m.exps[0] != 0 && nvars_ == 2) nvars_ = 3;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) {
        it->second.canonicalize();
    } else {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

Polynomial Polynomial::as_projective() const {
    Polynomial p = *this;
    p.nvars_ = 3;
    return p;
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& [m, c] : p.terms_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    nvars_ = std::max(nvars_, o.nvars_);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r(std::max(a.nvars_, b.nvars_));
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m;
            for (int v = 0; v < 3; ++v) m.exps[v] = ma.exps[v] + mb.exps[v];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (sgn(c) == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coef] : terms_) coef *= c;
    return *this;
}

Polynomial scale(const Polynomial& p, const Rational& c) { return p * c; }

Polynomial pow(const Polynomial& p, unsigned k) {
    Polynomial result = Polynomial::constant(1, p.nvars());
    Polynomial base = p;
    while (k > 0) {
        if (k & 1U) result *= base;
        k >>= 1U;
        if (k > 0) base *= base;
    }
    return result;
}

Polynomial partial(const Polynomial& p, int var) {
    if (var < 0 || var > 2) throw std::invalid_argument("partial: variable index out of range");
    Polynomial r(p.nvars());
    for (const auto& [m, c] : p.terms()) {
        if (m.exps[var] == 0) continue;
        Monomial d = m;
        d.exps[var] -= 1;
        r.add_term(d, c * m.exps[var]);
    }
    return r;
}

Polynomial homogenize(const Polynomial& p) {
    if (p.degree_in(0) > 0) throw std::invalid_argument("homogenize expects a polynomial in X1, X2");
    Polynomial r(3);
    const unsigned d = p.is_zero() ? 0 : static_cast<unsigned>(p.degree());
    for (const auto& [m, c] : p.terms()) {
        Monomial h = m;
        h.exps[0] = d - m.degree();
        r.add_term(h, c);
    }
    return r;
}

Polynomial restrict_affine(const Polynomial& p) {
    Polynomial r(2);
    for (const auto& [m, c] : p.terms()) {
        Monomial a = m;
        a.exps[0] = 0;
        r.add_term(a, c);
    }
    return r;
}

Polynomial dehomogenize(const Polynomial& p) {
    if (!p.is_homogeneous()) throw std::invalid_argument("dehomogenize expects a homogeneous polynomial");
    return restrict_affine(p);
}

Polynomial translate(const Polynomial& p, const Rational& c1, const Rational& c2) {
    if (p.degree_in(0) > 0) throw std::invalid_argument("translate expects an affine polynomial");
    Polynomial x = Polynomial::variable(1) + Polynomial::constant(c1);
    Polynomial y = Polynomial::variable(2) + Polynomial::constant(c2);
    const int dx = std::max(p.degree_in(1), 0);
    const int dy = std::max(p.degree_in(2), 0);
    std::vector<Polynomial> xp{Polynomial::constant(1)}, yp{Polynomial::constant(1)};
    for (int i = 1; i <= dx; ++i) xp.push_back(xp.back() * x);
    for (int i = 1; i <= dy; ++i) yp.push_back(yp.back() * y);
    Polynomial r(2);
    for (const auto& [m, c] : p.terms()) r += c * (xp[m.exps[1]] * yp[m.exps[2]]);
    return r;
}

Polynomial primitive_part(const Polynomial& p) {
    if (p.is_zero()) return p;
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    }
    Rational factor(den_lcm, num_gcd);
    factor.canonicalize();
    if (sgn(p.terms().begin()->second) < 0) factor = -factor;
    return p * factor;
}

Rational power(const Rational& x, unsigned k) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), k);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), k);
    return r;
}

Rational eval_rat(const Polynomial& p, std::span<const Rational> point) { return p.evaluate<Rational>(point); }

Interval eval_interval(const Polynomial& p, std::span<const Interval> box) { return p.evaluate<Interval>(box); }

std::string to_string(const Polynomial& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rational mag = abs(c);
        if (sgn(c) < 0)
            os << '-';
        else if (!first)
            os << '+';
        first = false;
        bool wrote = false;
        if (m.degree() == 0 || mag != 1) {
            os << mag.get_str();
            wrote = true;
        }
        for (int v : {1, 2, 0}) {
            if (m.exps[v] == 0) continue;
            if (wrote) os << '*';
            os << 'X' << v;
            if (m.exps[v] > 1) os << '^' << m.exps[v];
            wrote = true;
        }
    }
    return os.str();
}

}  // namespace polars
