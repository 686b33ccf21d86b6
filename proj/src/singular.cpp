#include "polars/singular.hpp"

#include "polars/lll.hpp"
#include "polars/upoly.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace polars {

namespace {

Integer lcm_den(const std::vector<Rational>& xs) {
    Integer l = 1;
    for (const auto& x : xs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    return l;
}

std::string coef_times(const QuadSurd& c, const char* var, bool first) {
    std::string s = c.to_string();
    const bool compound = !c.is_rational() && sgn(c.rational_part()) != 0;
    std::string out;
    if (compound) {
        out = (first ? "" : "+") + ("(" + s + ")*") + var;
    } else if (s == "1") {
        out = (first ? "" : "+") + std::string(var);
    } else if (s == "-1") {
        out = std::string("-") + var;
    } else {
        out = (s[0] == '-' || first ? "" : "+") + s + "*" + var;
    }
    return out;
}

// D(i, j) = d^i/dX1^i d^j/dX2^j f, memoised.
class Derivatives {
public:
    explicit Derivatives(const Polynomial& f) { table_[{0, 0}] = f; }
    const Polynomial& get(int i, int j) {
        auto it = table_.find({i, j});
        if (it != table_.end()) return it->second;
        Polynomial d = i > 0 ? partial(get(i - 1, j), 1) : partial(get(i, j - 1), 2);
        return table_.emplace(std::pair{i, j}, std::move(d)).first->second;
    }

private:
    std::map<std::pair<int, int>, Polynomial> table_;
};

QuadSurd eval_at(const Polynomial& p, const ExactPoint& pt) {
    const std::array<QuadSurd, 2> v{pt.x, pt.y};
    return p.evaluate<QuadSurd>(std::span<const QuadSurd>(v));
}

Rational factorial(int n) {
    Integer r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return Rational(r);
}

std::optional<QuadSurd> recognize(const Interval& coord) {
    const Rational x = coord.midpoint();
    auto rel = integer_relation({Rational(1), x, x * x}, 200, Integer(1) << 40);
    if (!rel) return std::nullopt;
    const Integer c0 = (*rel)[0], c1 = (*rel)[1], c2 = (*rel)[2];
    if (sgn(c2) == 0) {
        if (sgn(c1) == 0) return std::nullopt;
        Rational r = make_rational(-c0, c1);
        if (coord.contains(r)) return QuadSurd(r);
        return std::nullopt;
    }
    const Integer disc = c1 * c1 - 4 * c0 * c2;
    if (sgn(disc) < 0) return std::nullopt;
    QuadSurd root = surd_sqrt(Rational(disc));
    for (int s : {1, -1}) {
        QuadSurd cand = (QuadSurd(Rational(-c1)) + (s > 0 ? root : -root)) / QuadSurd(Rational(2 * c2));
        if (QuadSurd(coord.lo) <= cand && cand <= QuadSurd(coord.hi)) return cand;
    }
    return std::nullopt;
}

// f with X1 := a as a univariate integer polynomial in X2 (or X2 := a, in X1).
upoly::IntPoly restrict_edge(const Polynomial& f, int fixed_var, const Rational& a) {
    const int free_var = 3 - fixed_var;
    Polynomial r(2);
    for (const auto& [m, c] : f.terms()) {
        Monomial mm;
        mm.exps[free_var] = m.exps[free_var];
        r.add_term(mm, c * power(a, m.exps[fixed_var]));
    }
    if (r.is_zero()) return {};
    return upoly::from_polynomial(r, free_var);
}

// Number of odd-multiplicity roots of p strictly inside (lo, hi); endpoints are not roots.
int odd_roots_inside(const upoly::IntPoly& p, const Rational& lo, const Rational& hi) {
    if (upoly::degree(p) <= 0) return 0;
    const auto parts = upoly::squarefree_decomposition(p);
    int n = 0;
    for (std::size_t i = 0; i < parts.size(); i += 2) {
        if (upoly::degree(parts[i]) <= 0) continue;
        for (Interval iv : upoly::isolate_real_roots(parts[i])) {
            for (;;) {
                if (iv.hi < lo || hi < iv.lo) break;
                if (lo < iv.lo && iv.hi < hi) {
                    ++n;
                    break;
                }
                iv = upoly::refine_root(parts[i], iv, iv.width() / 2);
            }
        }
    }
    return n;
}

Rational box_gap(const Box& a, const Box& b) {
    Rational gx = std::max(Rational(b.x.lo - a.x.hi), Rational(a.x.lo - b.x.hi));
    Rational gy = std::max(Rational(b.y.lo - a.y.hi), Rational(a.y.lo - b.y.hi));
    return std::max(gx, gy);
}

double angle_of(double a, double b) {
    double t = std::atan2(b, a);
    if (t < 0) t += std::numbers::pi;
    if (t >= std::numbers::pi) t -= std::numbers::pi;
    return t;
}

ConeFactor factor_of(const Direction& d, int mult) {
    return {d, angle_of(d.a.to_double(), d.b.to_double()), mult};
}

// Linear forms u - t v over the real roots t of a square-free rational polynomial.
void real_linear_factors(const upoly::IntPoly& q, int mult, std::vector<ConeFactor>& out) {
    const int deg = upoly::degree(q);
    for (const Interval& iv : upoly::isolate_real_roots(q)) {
        std::optional<Direction> dir;
        if (deg == 1) {
            dir = Direction::normalized(QuadSurd(Rational(q[1])), QuadSurd(Rational(q[0])));  // q1 u + q0 v
        } else if (deg == 2) {
            const Integer disc = q[1] * q[1] - 4 * q[0] * q[2];
            QuadSurd root = surd_sqrt(Rational(disc));
            for (int s : {1, -1}) {
                QuadSurd t = (QuadSurd(Rational(-q[1])) + (s > 0 ? root : -root)) / QuadSurd(Rational(2 * q[2]));
                if (QuadSurd(iv.lo) <= t && t <= QuadSurd(iv.hi)) dir = Direction::normalized(QuadSurd(Rational(1)), -t);
            }
        }
        if (dir) {
            out.push_back(factor_of(*dir, mult));
        } else {
            const double t = iv.midpoint().get_d();
            out.push_back({std::nullopt, angle_of(1.0, -t), mult});
        }
    }
}

}  // namespace

// --- Direction ---------------------------------------------------------------

Direction Direction::normalized(const QuadSurd& a_in, const QuadSurd& b_in) {
    if (a_in.is_zero()) {
        if (b_in.is_zero()) throw std::invalid_argument("Direction: both entries zero");
        return {QuadSurd(Rational(0)), QuadSurd(Rational(1))};
    }
    QuadSurd a = a_in, b = b_in;
    if (!a.is_rational()) {
        const QuadSurd s = a.conjugate();
        a = a * s;
        b = b * s;
    }
    std::vector<Rational> parts{a.rational_part(), b.rational_part(), b.surd_part()};
    const Rational l(lcm_den(parts));
    Integer g = 0;
    for (auto& p : parts) {
        p *= l;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), p.get_num_mpz_t());
    }
    Rational scale = Rational(l) / Rational(g);
    if (sgn(a.rational_part()) < 0) scale = -scale;
    const long m = b.radicand();
    return {QuadSurd(a.rational_part() * scale), QuadSurd(b.rational_part() * scale, b.surd_part() * scale, m)};
}

std::string Direction::to_string() const { return "(" + a.to_string() + " : " + b.to_string() + ")"; }

std::string Direction::line() const {
    std::string s;
    if (!a.is_zero()) s += coef_times(a, "X1", true);
    if (!b.is_zero()) s += coef_times(b, "X2", s.empty());
    return "V(" + s + ")";
}

bool BinaryForm::is_rational() const {
    for (const auto& x : c)
        if (!x.is_rational()) return false;
    return true;
}

std::string to_string(SingularKind k) {
    switch (k) {
        case SingularKind::OrdinaryRealMultiple: return "OrdinaryRealMultiple";
        case SingularKind::Cusp: return "Cusp";
        case SingularKind::NonOrdinary: return "NonOrdinary";
        case SingularKind::Unclassified: return "Unclassified";
    }
    return "Unclassified";
}

// --- tangent cones -----------------------------------------------------------

Polynomial tangent_cone(const Polynomial& f, const Rational& p1, const Rational& p2) {
    if (f.is_zero()) throw std::invalid_argument("tangent_cone of the zero polynomial");
    Polynomial t = translate(f, p1, p2);
    int low = t.degree();
    for (const auto& [m, c] : t.terms()) low = std::min(low, static_cast<int>(m.degree()));
    if (low < 2) throw std::invalid_argument("tangent_cone: the point is not a singular point of the curve");
    Polynomial cone(2);
    for (const auto& [m, c] : t.terms())
        if (static_cast<int>(m.degree()) == low) cone.add_term(m, c);
    return cone;
}

BinaryForm tangent_cone(const Polynomial& f, const ExactPoint& p) {
    if (f.is_zero()) throw std::invalid_argument("tangent_cone of the zero polynomial");
    Derivatives d(f);
    for (int e = 0; e <= f.degree(); ++e) {
        BinaryForm form;
        form.degree = e;
        bool nonzero = false;
        for (int i = 0; i <= e; ++i) {
            QuadSurd v = eval_at(d.get(i, e - i), p) / QuadSurd(factorial(i) * factorial(e - i));
            nonzero = nonzero || !v.is_zero();
            form.c.push_back(v);
        }
        if (!nonzero) continue;
        if (e < 2) throw std::invalid_argument("tangent_cone: the point is not a singular point of the curve");
        return form;
    }
    throw std::invalid_argument("tangent_cone: polynomial vanishes identically near the point");
}

std::optional<ExactPoint> exact_location(const Polynomial& f, const CertifiedPoint& p) {
    const CertifiedPoint q = refine(p, Rational(1) / Rational(Integer(1) << 220));
    auto x = recognize(q.box().x);
    auto y = recognize(q.box().y);
    if (!x || !y) return std::nullopt;
    try {
        ExactPoint e{*x, *y};
        if (!eval_at(f, e).is_zero()) return std::nullopt;
        if (!eval_at(partial(f, 1), e).is_zero()) return std::nullopt;
        if (!eval_at(partial(f, 2), e).is_zero()) return std::nullopt;
        const Box& b = p.box();
        if (!(QuadSurd(b.x.lo) <= e.x && e.x <= QuadSurd(b.x.hi) && QuadSurd(b.y.lo) <= e.y && e.y <= QuadSurd(b.y.hi)))
            return std::nullopt;
        return e;
    } catch (const std::domain_error&) {
        return std::nullopt;  // coordinates in two different quadratic fields
    }
}

std::optional<int> boundary_crossings(const Polynomial& f, const Rational& c1, const Rational& c2, const Rational& r) {
    const Rational x0 = c1 - r, x1 = c1 + r, y0 = c2 - r, y1 = c2 + r;
    for (const Rational& x : {x0, x1})
        for (const Rational& y : {y0, y1})
            if (eval_rat(f, std::vector<Rational>{x, y}) == 0) return std::nullopt;
    int n = 0;
    for (const Rational& x : {x0, x1}) {
        auto e = restrict_edge(f, 1, x);
        if (e.empty()) return std::nullopt;
        n += odd_roots_inside(e, y0, y1);
    }
    for (const Rational& y : {y0, y1}) {
        auto e = restrict_edge(f, 2, y);
        if (e.empty()) return std::nullopt;
        n += odd_roots_inside(e, x0, x1);
    }
    return n;
}

namespace {

// Crossing count on shrinking squares until two consecutive radii agree.
std::optional<int> local_branch_crossings(const Polynomial& f, const CertifiedPoint& p,
                                          std::span<const CertifiedPoint> others) {
    Rational r0(1, 8);
    for (const auto& o : others) {
        CertifiedPoint a = p, b = o;
        Rational gap = box_gap(a.box(), b.box());
        while (sgn(gap) <= 0) {
            a = a.refined(a.box().width() / 2);
            b = b.refined(b.box().width() / 2);
            gap = box_gap(a.box(), b.box());
        }
        while (r0 > gap / 2) r0 /= 2;
    }
    auto count = [&](const Rational& r) -> std::optional<int> {
        Rational rr = r;
        for (int attempt = 0; attempt < 8; ++attempt) {
            // centre snapped to a dyadic grid of pitch <= r/1024 to keep the edge polynomials small
            auto c = refine(p, rr / 1024).box().center();
            const Rational pitch = dyadic(Integer(1), mpz_sizeinbase(Integer(1024 * rr.get_den() / rr.get_num() + 1).get_mpz_t(), 2));
            auto snap = [&](const Rational& x) -> Rational {
                Integer q;
                Rational t = x / pitch;
                mpz_fdiv_q(q.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
                return Rational(q) * pitch;
            };
            if (auto n = boundary_crossings(f, snap(c.first), snap(c.second), rr)) return n;
            rr *= Rational(96, 97);
        }
        return std::nullopt;
    };
    std::optional<int> prev = count(r0);
    Rational r = r0;
    for (int k = 0; k < 40; ++k) {
        r /= 2;
        auto cur = count(r);
        if (prev && cur && *prev == *cur) return cur;
        prev = cur;
    }
    return std::nullopt;
}

void classify_quadratic(const Polynomial& f, const CertifiedPoint& p, std::span<const CertifiedPoint> others,
                        const BinaryForm& t, SingularityReport& rep) {
    const QuadSurd A = t.c[2], B = t.c[1], C = t.c[0];  // A u^2 + B u v + C v^2
    const QuadSurd disc = B * B - QuadSurd(Rational(4)) * A * C;
    const int s = disc.sign();
    if (s < 0) {
        rep.complex_pairs = 1;
        rep.kind = SingularKind::NonOrdinary;  // isolated real point
        rep.real_branches = 0;
        return;
    }
    if (s > 0) {
        auto root = sqrt_in_field(disc);
        if (!A.is_zero()) {
            // A (u - t1 v)(u - t2 v)
            for (int sg : {1, -1}) {
                if (root) {
                    QuadSurd tt = (-B + (sg > 0 ? *root : -*root)) / (QuadSurd(Rational(2)) * A);
                    rep.factors.push_back(factor_of(Direction::normalized(QuadSurd(Rational(1)), -tt), 1));
                } else {
                    const double tt = (-B.to_double() + sg * std::sqrt(disc.to_double())) / (2 * A.to_double());
                    rep.factors.push_back({std::nullopt, angle_of(1.0, -tt), 1});
                }
            }
        } else {
            // v (B u + C v)
            rep.factors.push_back(factor_of(Direction::normalized(QuadSurd(Rational(0)), QuadSurd(Rational(1))), 1));
            rep.factors.push_back(factor_of(Direction::normalized(B, C), 1));
        }
        rep.kind = SingularKind::OrdinaryRealMultiple;
        rep.real_branches = 2;
        return;
    }
    // doubled line
    Direction d = A.is_zero() ? Direction::normalized(QuadSurd(Rational(0)), QuadSurd(Rational(1)))
                              : Direction::normalized(QuadSurd(Rational(2)) * A, B);
    rep.factors.push_back(factor_of(d, 2));
    auto crossings = local_branch_crossings(f, p, others);
    if (!crossings) {
        rep.kind = SingularKind::Unclassified;
        return;
    }
    rep.real_branches = *crossings / 2;
    rep.kind = *crossings == 2 ? SingularKind::Cusp : SingularKind::NonOrdinary;
}

void classify_rational_cone(const BinaryForm& t, SingularityReport& rep) {
    const int m = t.degree;
    // leading zeros in u: factor v^z
    int top = m;
    while (top >= 0 && t.c[top].is_zero()) --top;
    const int z = m - top;
    std::vector<Rational> coeffs;
    for (int i = 0; i <= top; ++i) coeffs.push_back(t.c[i].rational_part());
    const Rational l(lcm_den(coeffs));
    upoly::IntPoly q;
    for (auto& c : coeffs) q.push_back(Rational(c * l).get_num());
    int real_mult = 0;
    bool repeated = z >= 2;
    if (z > 0) {
        rep.factors.push_back(factor_of(Direction::normalized(QuadSurd(Rational(0)), QuadSurd(Rational(1))), z));
        real_mult += z;
    }
    if (upoly::degree(q) > 0) {
        const auto parts = upoly::squarefree_decomposition(q);
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (upoly::degree(parts[i]) <= 0) continue;
            if (i > 0) repeated = true;
            const std::size_t before = rep.factors.size();
            real_linear_factors(parts[i], static_cast<int>(i) + 1, rep.factors);
            real_mult += static_cast<int>((rep.factors.size() - before) * (i + 1));
        }
    }
    rep.complex_pairs = (m - real_mult) / 2;
    const int k = static_cast<int>(rep.factors.size());
    rep.real_branches = repeated ? -1 : k;
    rep.kind = (!repeated && k >= 2) ? SingularKind::OrdinaryRealMultiple : SingularKind::NonOrdinary;
}

}  // namespace

SingularityReport classify(const Polynomial& f, const CertifiedPoint& p, std::span<const CertifiedPoint> others) {
    SingularityReport rep;
    rep.location = p;
    rep.exact = exact_location(f, p);
    if (!rep.exact) return rep;  // Unclassified, multiplicity at least 2
    const BinaryForm t = tangent_cone(f, *rep.exact);
    rep.multiplicity = t.degree;
    if (t.degree == 2)
        classify_quadratic(f, p, others, t, rep);
    else if (t.is_rational())
        classify_rational_cone(t, rep);
    return rep;
}

std::vector<SingularityReport> classify_all(const Polynomial& f) {
    SolutionSet s = singular_points(f);
    std::vector<SingularityReport> out;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        std::vector<CertifiedPoint> others;
        for (std::size_t j = 0; j < s.points.size(); ++j)
            if (j != i) others.push_back(s.points[j]);
        out.push_back(classify(f, s.points[i], others));
    }
    return out;
}

Direction gauss_direction(const Polynomial& f, const ExactPoint& p) {
    QuadSurd a = eval_at(partial(f, 1), p), b = eval_at(partial(f, 2), p);
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gauss_direction: singular point");
    return Direction::normalized(a, b);
}

}  // namespace polars
