#include "polars/upoly.hpp"

#include "polars/modp.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace polars::upoly {

int degree(const IntPoly& p) { return static_cast<int>(p.size()) - 1; }

void trim(IntPoly& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

const Integer& leading(const IntPoly& p) {
    if (p.empty()) throw std::invalid_argument("leading coefficient of zero polynomial");
    return p.back();
}

IntPoly derivative(const IntPoly& p) {
    if (p.size() <= 1) return {};
    IntPoly d(p.size() - 1);
    for (std::size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<unsigned long>(i);
    trim(d);
    return d;
}

Integer content(const IntPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive(const IntPoly& p) {
    IntPoly r = p;
    trim(r);
    if (r.empty()) return r;
    Integer c = content(r);
    if (sgn(r.back()) < 0) c = -c;
    if (c != 1)
        for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

IntPoly add(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

IntPoly sub(const IntPoly& a, const IntPoly& b) {
    IntPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
    if (a.empty() || b.empty()) return {};
    IntPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    trim(r);
    return r;
}

std::optional<IntPoly> exact_div(const IntPoly& a_in, const IntPoly& b) {
    if (b.empty()) throw std::domain_error("division by zero polynomial");
    IntPoly a = a_in;
    trim(a);
    if (a.empty()) return IntPoly{};
    if (a.size() < b.size()) return std::nullopt;
    const std::size_t db = b.size() - 1;
    IntPoly q(a.size() - db);
    const Integer& lb = b.back();
    for (std::size_t k = a.size(); k-- > db;) {
        if (sgn(a[k]) == 0) continue;
        if (!mpz_divisible_p(a[k].get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        Integer t;
        mpz_divexact(t.get_mpz_t(), a[k].get_mpz_t(), lb.get_mpz_t());
        const std::size_t shift = k - db;
        for (std::size_t i = 0; i <= db; ++i) mpz_submul(a[shift + i].get_mpz_t(), t.get_mpz_t(), b[i].get_mpz_t());
        q[shift] = std::move(t);
    }
    for (std::size_t i = 0; i < db; ++i)
        if (sgn(a[i]) != 0) return std::nullopt;
    trim(q);
    return q;
}

namespace {

modp::PolyP reduce_poly(const IntPoly& a, modp::u64 p) {
    modp::PolyP r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = modp::reduce(a[i], p);
    modp::trim(r);
    return r;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace

IntPoly gcd(const IntPoly& a_in, const IntPoly& b_in) {
    IntPoly a = primitive(a_in);
    IntPoly b = primitive(b_in);
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (degree(a) == 0 || degree(b) == 0) return {Integer(1)};
    if (degree(a) < degree(b)) std::swap(a, b);

    Integer lc_gcd;
    mpz_gcd(lc_gcd.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());

    int best = degree(b) + 1;
    modp::CrtAccumulator acc;
    std::size_t used = 0;
    for (std::size_t i = 0;; ++i) {
        const modp::u64 p = modp::prime(i);
        if (modp::reduce(a.back(), p) == 0 || modp::reduce(b.back(), p) == 0) continue;
        modp::PolyP g = modp::gcd(reduce_poly(a, p), reduce_poly(b, p), p);
        const int dg = static_cast<int>(g.size()) - 1;
        if (dg == 0) return {Integer(1)};
        if (dg > best) continue;  // unlucky prime
        if (dg < best) {
            best = dg;
            acc.reset();
            used = 0;
        }
        const modp::u64 scale = modp::reduce(lc_gcd, p);
        for (auto& c : g) c = modp::mulmod(c, scale, p);
        acc.add(g, p);
        ++used;
        if (!is_power_of_two(used)) continue;
        IntPoly candidate = primitive(acc.symmetric());
        if (degree(candidate) != best) continue;
        if (exact_div(b, candidate) && exact_div(a, candidate)) return candidate;
    }
}

IntPoly squarefree(const IntPoly& p) {
    IntPoly a = primitive(p);
    if (degree(a) <= 0) return a;
    IntPoly g = gcd(a, derivative(a));
    if (degree(g) == 0) return a;
    auto q = exact_div(a, g);
    if (!q) throw std::logic_error("squarefree: gcd does not divide");
    return primitive(*q);
}

std::vector<IntPoly> squarefree_decomposition(const IntPoly& p) {
    IntPoly a = primitive(p);
    std::vector<IntPoly> out;
    if (degree(a) <= 0) return out;
    IntPoly b = derivative(a);
    IntPoly c = gcd(a, b);
    IntPoly w = *exact_div(a, c);
    IntPoly y = *exact_div(b, c);
    IntPoly z = sub(y, derivative(w));
    while (degree(w) > 0) {
        IntPoly g = gcd(w, z);
        out.push_back(g);
        w = *exact_div(w, g);
        y = z.empty() ? IntPoly{} : *exact_div(z, g);
        z = sub(y, derivative(w));
    }
    return out;
}

namespace {

/// p(num/den) * den^n as an exact integer.
Integer eval_homogeneous(const IntPoly& p, const Integer& num, const Integer& den) {
    if (p.empty()) return 0;
    Integer r = p.back();
    Integer den_pow = den;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        r *= num;
        mpz_addmul(r.get_mpz_t(), p[i].get_mpz_t(), den_pow.get_mpz_t());
        if (i > 0) den_pow *= den;
    }
    return r;
}

}  // namespace

Rational eval(const IntPoly& p, const Rational& x) {
    if (p.empty()) return 0;
    Integer v = eval_homogeneous(p, x.get_num(), x.get_den());
    Integer d;
    mpz_pow_ui(d.get_mpz_t(), x.get_den_mpz_t(), p.size() - 1);
    return make_rational(v, d);
}

int sign_at(const IntPoly& p, const Rational& x) { return sgn(eval_homogeneous(p, x.get_num(), x.get_den())); }

// Horner over integers: with x = [a, b] / D, R_j = R_{j-1} * [a, b] + c * D^j and the
// result is R / D^deg. Avoids rational canonicalisation on long coefficients.
Interval eval(const IntPoly& p, const Interval& x) {
    if (p.empty()) return Interval(Rational(0));
    Integer D;
    mpz_lcm(D.get_mpz_t(), x.lo.get_den_mpz_t(), x.hi.get_den_mpz_t());
    const Integer a = x.lo.get_num() * (D / x.lo.get_den());
    const Integer b = x.hi.get_num() * (D / x.hi.get_den());
    Integer lo = p.back(), hi = p.back(), Dpow = 1;
    Integer t1, t2, t3, t4;
    for (std::size_t i = p.size() - 1; i-- > 0;) {
        t1 = lo * a;
        t2 = lo * b;
        t3 = hi * a;
        t4 = hi * b;
        lo = std::min(std::min(t1, t2), std::min(t3, t4));
        hi = std::max(std::max(t1, t2), std::max(t3, t4));
        Dpow *= D;
        t1 = p[i] * Dpow;
        lo += t1;
        hi += t1;
    }
    return {make_rational(lo, Dpow), make_rational(hi, Dpow)};
}

namespace {

// In-place Taylor shift: a(x) -> a(x + 1).
void taylor_shift_one(IntPoly& a) {
    const std::size_t n = a.size();
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) a[j] += a[j + 1];
}

// Upper bound on the number of roots in (0, 1): sign variations of (x+1)^n a(1/(x+1)).
// Only distinguishes 0, 1 and "2 or more".
int descartes_unit(const IntPoly& a) {
    IntPoly r(a.rbegin(), a.rend());
    taylor_shift_one(r);
    int variations = 0;
    int last = 0;
    for (const auto& c : r) {
        int s = sgn(c);
        if (s == 0) continue;
        if (last != 0 && s != last && ++variations >= 2) return 2;
        last = s;
    }
    return variations;
}

struct UnitRoot {
    Integer c;  // interval (c / 2^k, (c + 1) / 2^k), or the exact point c / 2^k
    unsigned long k;
    bool exact;
};

// Roots of a in (0, 1), found by Vincent-Collins-Akritas bisection.
std::vector<UnitRoot> isolate_unit(IntPoly a) {
    std::vector<UnitRoot> out;
    struct Node {
        IntPoly poly;
        Integer c;
        unsigned long k;
    };
    std::vector<Node> stack;
    stack.push_back({std::move(a), Integer(0), 0});
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        const int v = descartes_unit(node.poly);
        if (v == 0) continue;
        if (v == 1) {
            out.push_back({node.c, node.k, false});
            continue;
        }
        const std::size_t n = node.poly.size() - 1;
        IntPoly left = node.poly;
        for (std::size_t i = 0; i <= n; ++i) mpz_mul_2exp(left[i].get_mpz_t(), left[i].get_mpz_t(), n - i);
        Integer g = content(left);
        if (g > 1)
            for (auto& x : left) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
        IntPoly right = left;
        taylor_shift_one(right);
        if (sgn(right[0]) == 0) {
            out.push_back({2 * node.c + 1, node.k + 1, true});
            right.erase(right.begin());
        }
        stack.push_back({std::move(right), 2 * node.c + 1, node.k + 1});
        stack.push_back({std::move(left), 2 * node.c, node.k + 1});
    }
    return out;
}

// Sign of p just inside an isolating interval next to an endpoint that may itself be a root.
int side_sign(const IntPoly& p, const Rational& x, bool right_of_x) {
    int s = sign_at(p, x);
    if (s != 0) return s;
    int d = sign_at(derivative(p), x);
    return right_of_x ? d : -d;
}

// Shrinks [lo, hi] (exactly one root strictly inside, endpoints possibly roots) until
// neither endpoint is a root.
Interval normalize_isolating(const IntPoly& p, Rational lo, Rational hi) {
    const int slo = side_sign(p, lo, true);
    bool lo_root = sign_at(p, lo) == 0;
    bool hi_root = sign_at(p, hi) == 0;
    while (lo_root || hi_root) {
        Rational m = (lo + hi) / 2;
        int sm = sign_at(p, m);
        if (sm == 0) return Interval(m);
        if (sm == slo) {
            lo = m;
            lo_root = false;
        } else {
            hi = m;
            hi_root = false;
        }
    }
    return {lo, hi};
}

}  // namespace

unsigned long cauchy_bound_log2(const IntPoly& p) {
    if (degree(p) <= 0) return 0;
    Integer mx = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) mx = std::max(mx, Integer(abs(p[i])));
    Integer lc = abs(p.back());
    Integer q = mx / lc + 2;  // >= 1 + max|a_i/a_n|
    return mpz_sizeinbase(q.get_mpz_t(), 2);
}

std::vector<Interval> isolate_real_roots(const IntPoly& p_in) {
    IntPoly p = primitive(p_in);
    if (p.empty()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
    std::vector<Interval> roots;
    if (degree(p) == 0) return roots;
    IntPoly work = p;
    if (sgn(work[0]) == 0) {
        roots.emplace_back(Rational(0));
        work.erase(work.begin());
    }
    if (degree(work) > 0) {
        const unsigned long kb = cauchy_bound_log2(work);
        for (int side : {1, -1}) {
            IntPoly q = work;
            for (std::size_t i = 0; i < q.size(); ++i) {
                mpz_mul_2exp(q[i].get_mpz_t(), q[i].get_mpz_t(), kb * i);
                if (side < 0 && (i % 2 == 1)) q[i] = -q[i];
            }
            for (const auto& r : isolate_unit(std::move(q))) {
                // x = side * 2^kb * t
                Rational a = dyadic(r.c, r.k);
                Rational b = dyadic(r.c + 1, r.k);
                const Rational scale(Integer(1) << kb);
                a *= scale;
                b *= scale;
                if (r.exact) {
                    roots.emplace_back(side > 0 ? a : Rational(-a));
                    continue;
                }
                Rational lo = side > 0 ? a : Rational(-b);
                Rational hi = side > 0 ? b : Rational(-a);
                roots.push_back(normalize_isolating(p, lo, hi));
            }
        }
    }
    std::sort(roots.begin(), roots.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
    return roots;
}

Interval refine_root(const IntPoly& p, const Interval& root, const Rational& w) {
    if (root.is_point()) return root;
    Rational lo = root.lo, hi = root.hi;
    int slo = sign_at(p, lo);
    while (hi - lo > w) {
        Rational m = (lo + hi) / 2;
        int sm = sign_at(p, m);
        if (sm == 0) return Interval(m);
        if (sm == slo)
            lo = m;
        else
            hi = m;
    }
    return {lo, hi};
}

bool vanishes_in(const IntPoly& p, const Interval& root) {
    if (root.is_point()) return sign_at(p, root.lo) == 0;
    return sign_at(p, root.lo) * sign_at(p, root.hi) < 0;
}

IntPoly from_polynomial(const Polynomial& p, int var) {
    Polynomial q = primitive_part(p);
    for (int v = 0; v < 3; ++v)
        if (v != var && q.degree_in(v) > 0) throw std::invalid_argument("from_polynomial: polynomial is not univariate");
    IntPoly r(q.is_zero() ? 0 : q.degree_in(var) + 1);
    for (const auto& [m, c] : q.terms()) r[m.exps[var]] = c.get_num();
    trim(r);
    return r;
}

Polynomial to_polynomial(const IntPoly& p, int var) {
    Polynomial r(var == 0 ? 3 : 2);
    for (std::size_t i = 0; i < p.size(); ++i) {
        Monomial m;
        m.exps[var] = static_cast<unsigned>(i);
        r.add_term(m, Rational(p[i]));
    }
    return r;
}

}  // namespace polars::upoly
