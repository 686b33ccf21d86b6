#include "polars/solve.hpp"

#include "polars/elim.hpp"

#include <algorithm>
#include <random>

namespace polars {

namespace detail {

struct Stratum {
    int k = 1;               // degree of the fiber gcd over these roots
    upoly::IntPoly gamma;    // square-free factor of the resultant carrying them
    upoly::IntPoly lead;     // s_{k,k}
    upoly::IntPoly next;     // s_{k,k-1}
};

struct SolutionBranch {
    Polynomial f, g;
    long lambda = 0;
    upoly::IntPoly rsq;  // square-free resultant in u = X1 - lambda*X2
    std::vector<Stratum> strata;

    // Over a root of stratum k the fiber gcd is lead*(v - beta)^k, so
    // beta = -next / (k*lead). I is shrunk until lead has no zero on it.
    Box make_box(Interval& u, int stratum) const {
        const Stratum& st = strata[stratum];
        Interval lv = upoly::eval(st.lead, u);
        while (lv.contains_zero()) {
            u = upoly::refine_root(rsq, u, u.width() / 2);
            lv = upoly::eval(st.lead, u);
        }
        Interval v = -(upoly::eval(st.next, u) / (Interval(Rational(st.k)) * lv));
        Interval x = u + Interval(Rational(lambda)) * v;
        return {x, v};
    }

    static CertifiedPoint make(std::shared_ptr<const SolutionBranch> b, Interval u, int stratum, int mult) {
        CertifiedPoint p;
        p.box_ = b->make_box(u, stratum);
        p.stratum_ = stratum;
        p.u_ = u;
        p.branch_ = std::move(b);
        p.multiplicity_ = mult;
        return p;
    }

    static CertifiedPoint refine(const CertifiedPoint& p, const Rational& w) {
        if (p.box_.width() <= w) return p;
        const SolutionBranch& b = *p.branch_;
        Interval u = p.u_;
        Rational target = w / (1 + abs(Rational(b.lambda)));
        for (;;) {
            u = upoly::refine_root(b.rsq, u, target);
            CertifiedPoint q = p;
            q.box_ = b.make_box(u, p.stratum_);
            q.u_ = u;
            if (q.box_.width() <= w) return q;
            // enclosure width scales roughly linearly with the u-interval
            target /= 2;
            if (sgn(u.width()) > 0) target = std::min(target, Rational(u.width() * w / q.box_.width() / 2));
        }
    }
};

}  // namespace detail

namespace {

using detail::SolutionBranch;
using elim::BiPoly;

bool is_affine(const Polynomial& p) { return p.degree_in(0) == 0; }

bool lc_constant(const BiPoly& b) { return !b.is_zero() && b.degree_v() == b.total_degree; }

BiPoly d_dv(const BiPoly& b) {
    BiPoly r;
    for (std::size_t k = 1; k < b.coeffs.size(); ++k) {
        upoly::IntPoly c = b.coeffs[k];
        for (auto& x : c) x *= static_cast<unsigned long>(k);
        r.coeffs.push_back(std::move(c));
    }
    while (!r.coeffs.empty() && r.coeffs.back().empty()) r.coeffs.pop_back();
    r.total_degree = -1;
    for (std::size_t k = 0; k < r.coeffs.size(); ++k)
        if (!r.coeffs[k].empty())
            r.total_degree = std::max(r.total_degree, static_cast<int>(k) + upoly::degree(r.coeffs[k]));
    return r;
}

// Box straddles the query box: refine until inside or outside, or give up and keep it.
bool inside(CertifiedPoint& p, const Box& box) {
    for (int i = 0; i < 64; ++i) {
        if (box.contains(p.box())) return true;
        if (!box.intersects(p.box())) return false;
        p = refine(p, p.box().width() / 2);
        if (p.box().width() == 0) return box.contains(p.box());
    }
    return true;
}

bool divides(const upoly::IntPoly& d, const upoly::IntPoly& p) {
    if (p.empty()) return true;
    return upoly::degree(upoly::gcd(d, p)) == upoly::degree(d);
}

// Splits the square-free resultant by the degree k of the fiber gcd and checks that
// over every root the gcd S_k(alpha, v) is a k-th power of one linear factor. This is
// exactly the condition that no two common zeros share a u-coordinate.
bool stratify(SolutionBranch& br, const BiPoly& F, const BiPoly& G) {
    using upoly::IntPoly;
    IntPoly rest = br.rsq;
    const int kmax = std::min(F.degree_v(), G.degree_v());
    for (int k = 1; upoly::degree(rest) > 0; ++k) {
        if (k > kmax) throw std::logic_error("stratify: gcd degree exceeds input degree");
        std::vector<IntPoly> s = elim::subresultant(F, G, k);
        IntPoly higher = upoly::gcd(rest, s[k]);
        IntPoly gamma = *upoly::exact_div(rest, higher);
        if (upoly::degree(gamma) > 0) {
            // s_{k,j} (k s_kk)^(k-j) == C(k,j) s_kk s_{k,k-1}^(k-j)   mod gamma
            IntPoly klead = s[k];
            for (auto& c : klead) c *= k;
            for (int j = k - 2; j >= 0; --j) {
                Integer cb;
                mpz_bin_uiui(cb.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
                IntPoly lhs = s[j], rhs = s[k];
                for (int e = 0; e < k - j; ++e) {
                    lhs = upoly::mul(lhs, klead);
                    rhs = upoly::mul(rhs, s[k - 1]);
                }
                for (auto& c : rhs) c *= cb;
                if (!divides(gamma, upoly::sub(lhs, rhs))) return false;
            }
            br.strata.push_back({k, gamma, s[k], s[k - 1]});
        }
        rest = higher;
    }
    return true;
}

int univariate_var(const Polynomial& p) {
    auto vars = p.used_variables();
    if (vars.size() > 1) throw std::invalid_argument("expected a univariate polynomial");
    return vars.empty() ? 1 : vars.front();
}

}  // namespace

std::pair<double, double> CertifiedPoint::approx() const {
    auto [x, y] = box_.center();
    return {x.get_d(), y.get_d()};
}

const Polynomial& CertifiedPoint::f() const { return branch_->f; }
const Polynomial& CertifiedPoint::g() const { return branch_->g; }

CertifiedPoint CertifiedPoint::refined(const Rational& w) const { return SolutionBranch::refine(*this, w); }

CertifiedPoint refine(const CertifiedPoint& point, const Rational& width) {
    if (sgn(width) <= 0) throw std::invalid_argument("refine: width must be positive");
    return point.refined(width);
}

const std::vector<long>& shear_sequence() {
    static const std::vector<long> seq = [] {
        std::vector<long> s{0};
        std::mt19937 rng(20240601U);
        std::uniform_int_distribution<long> pick(-7, 7);
        while (s.size() < 15) {
            long l = pick(rng);
            if (std::find(s.begin(), s.end(), l) == s.end()) s.push_back(l);
        }
        return s;
    }();
    return seq;
}

Polynomial squarefree(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree of the zero polynomial");
    const int var = univariate_var(p);
    return upoly::to_polynomial(upoly::squarefree(upoly::from_polynomial(p, var)), var);
}

std::vector<IsolatingInterval> isolate_roots(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots of the zero polynomial");
    const int var = univariate_var(p);
    auto sq = std::make_shared<const upoly::IntPoly>(upoly::squarefree(upoly::from_polynomial(p, var)));
    std::vector<IsolatingInterval> out;
    for (const auto& iv : upoly::isolate_real_roots(*sq)) out.push_back({iv, sq, iv.is_point() ? 0 : upoly::sign_at(*sq, iv.lo)});
    return out;
}

void separate(std::vector<CertifiedPoint>& pts) {
    for (bool again = true; again;) {
        again = false;
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                if (!pts[i].box().intersects(pts[j].box())) continue;
                const Rational w = std::max(pts[i].box().width(), pts[j].box().width()) / 2;
                if (sgn(w) == 0) throw std::logic_error("separate: coincident exact solutions");
                pts[i] = pts[i].refined(w);
                pts[j] = pts[j].refined(w);
                again = true;
            }
    }
}

SolutionSet solve_system(const Polynomial& f, const Polynomial& g, const std::optional<Box>& box) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("solve_system: zero polynomial");
    if (!is_affine(f) || !is_affine(g)) throw std::invalid_argument("solve_system expects affine polynomials in X1, X2");
    SolutionSet out;
    if (f.is_constant() || g.is_constant()) return out;

    const BiPoly F = elim::to_bipoly(f, 1, 2), G = elim::to_bipoly(g, 1, 2);
    for (long lambda : shear_sequence()) {
        BiPoly Fs = elim::shear(F, lambda), Gs = elim::shear(G, lambda);
        if (!lc_constant(Fs) || !lc_constant(Gs)) continue;
        upoly::IntPoly R = elim::resultant(Fs, Gs);
        if (R.empty()) throw CommonComponentError("the two curves share a common component");
        auto br = std::make_shared<SolutionBranch>();
        br->f = f;
        br->g = g;
        br->lambda = lambda;
        br->rsq = upoly::squarefree(R);
        if (upoly::degree(br->rsq) <= 0) return out;
        if (!stratify(*br, Fs, Gs)) continue;

        const auto yun = upoly::squarefree_decomposition(R);
        std::shared_ptr<const SolutionBranch> shared = br;
        std::vector<CertifiedPoint> pts;
        for (const Interval& u : upoly::isolate_real_roots(br->rsq)) {
            int mult = 1;
            for (std::size_t i = 0; i < yun.size(); ++i)
                if (upoly::degree(yun[i]) > 0 && upoly::vanishes_in(yun[i], u)) {
                    mult = static_cast<int>(i) + 1;
                    break;
                }
            int stratum = 0;
            while (!upoly::vanishes_in(br->strata.at(stratum).gamma, u)) ++stratum;
            pts.push_back(SolutionBranch::make(shared, u, stratum, mult));
        }
        separate(pts);
        for (auto& p : pts)
            if (!box || inside(p, *box)) out.points.push_back(std::move(p));
        return out;
    }
    throw std::runtime_error("solve_system: no generic shear found");
}

bool is_squarefree(const Polynomial& f) {
    if (f.is_zero()) return false;
    if (!is_affine(f)) throw std::invalid_argument("is_squarefree expects an affine polynomial");
    if (f.degree() <= 1) return true;
    const BiPoly F = elim::to_bipoly(f, 1, 2);
    for (long lambda : shear_sequence()) {
        BiPoly Fs = elim::shear(F, lambda);
        if (!lc_constant(Fs)) continue;
        return !elim::resultant(Fs, d_dv(Fs)).empty();
    }
    throw std::runtime_error("is_squarefree: no generic shear found");
}

SolutionSet singular_points(const Polynomial& f) {
    if (!is_squarefree(f)) throw std::invalid_argument("singular_points: the curve polynomial is not square-free");
    if (f.degree() <= 1) return {};
    Polynomial fx = partial(f, 1), fy = partial(f, 2);
    return solve_system(f, fx * fx + fy * fy);
}

std::optional<std::size_t> locate(const CertifiedPoint& s_in, std::vector<CertifiedPoint>& cands) {
    CertifiedPoint s = s_in;
    for (int iter = 0; iter < 400; ++iter) {
        std::vector<std::size_t> hits;
        for (std::size_t i = 0; i < cands.size(); ++i)
            if (cands[i].box().intersects(s.box())) hits.push_back(i);
        if (hits.empty()) return std::nullopt;
        if (hits.size() == 1) return hits.front();
        Rational w = s.box().width();
        for (auto i : hits) w = std::max(w, cands[i].box().width());
        w /= 2;
        if (sgn(w) == 0) throw std::logic_error("locate: coincident exact candidates");
        s = s.refined(w);
        for (auto i : hits) cands[i] = cands[i].refined(w);
    }
    throw std::runtime_error("locate: could not separate candidates");
}

}  // namespace polars
