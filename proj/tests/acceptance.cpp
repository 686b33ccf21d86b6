// Acceptance run: one PASS/FAIL line per criterion with its time budget.

#include "polars/corpus.hpp"
#include "polars/jobs.hpp"
#include "polars/parse.hpp"
#include "polars/projective.hpp"
#include "polars/singular.hpp"
#include "polars/topology.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

using namespace polars;

namespace {

Polynomial P(const char* s) { return parse(s); }

struct Outcome {
    bool ok = true;
    std::string detail;
};

// collects failure reasons; the first few are kept for the summary line
struct Checker {
    Outcome out;
    int failures = 0;
    void require(bool cond, const std::string& what) {
        if (cond) return;
        if (failures++ < 3) out.detail += (out.detail.empty() ? "" : "; ") + what;
        out.ok = false;
    }
};

// double evaluation by the term map, independent of the library's evaluators
struct DPoly {
    std::vector<std::tuple<int, int, double>> terms;
    explicit DPoly(const Polynomial& p) {
        for (const auto& [m, c] : p.terms()) terms.emplace_back(m.exps[1], m.exps[2], c.get_d());
    }
    double operator()(double x, double y) const {
        double px[16] = {1}, py[16] = {1};
        for (int k = 1; k < 16; ++k) px[k] = px[k - 1] * x, py[k] = py[k - 1] * y;
        double s = 0;
        for (auto [i, j, c] : terms) s += c * (i < 16 ? px[i] : std::pow(x, i)) * (j < 16 ? py[j] : std::pow(y, j));
        return s;
    }
};

// Real roots of (f, g) in a square by sign scan on an n x n grid: cells where both
// change sign at the corners, clustered, then polished by Newton's method.
std::vector<std::pair<double, double>> sign_scan(const Polynomial& f, const Polynomial& g, double lo, double hi, int n) {
    const DPoly F(f), G(g), Fx(partial(f, 1)), Fy(partial(f, 2)), Gx(partial(g, 1)), Gy(partial(g, 2));
    const double h = (hi - lo) / n;
    std::vector<signed char> sf((n + 1) * (n + 1)), sg((n + 1) * (n + 1));
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) {
            const double x = lo + i * h, y = lo + j * h;
            sf[j * (n + 1) + i] = F(x, y) > 0 ? 1 : -1;
            sg[j * (n + 1) + i] = G(x, y) > 0 ? 1 : -1;
        }
    const auto mixed = [&](const std::vector<signed char>& s, int i, int j) {
        const int a = s[j * (n + 1) + i] + s[j * (n + 1) + i + 1] + s[(j + 1) * (n + 1) + i] + s[(j + 1) * (n + 1) + i + 1];
        return a != 4 && a != -4;
    };
    std::vector<std::pair<int, int>> cells;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            if (mixed(sf, i, j) && mixed(sg, i, j)) cells.emplace_back(i, j);
    std::vector<std::pair<double, double>> roots;
    for (auto [i, j] : cells) {
        double x = lo + (i + 0.5) * h, y = lo + (j + 0.5) * h;
        bool ok = false;
        for (int it = 0; it < 60; ++it) {
            const double a = Fx(x, y), b = Fy(x, y), c = Gx(x, y), d = Gy(x, y), det = a * d - b * c;
            if (det == 0) break;
            const double fv = F(x, y), gv = G(x, y);
            const double dx = (fv * d - gv * b) / det, dy = (a * gv - c * fv) / det;
            x -= dx;
            y -= dy;
            if (std::abs(dx) + std::abs(dy) < 1e-14 * (1 + std::abs(x) + std::abs(y))) {
                ok = true;
                break;
            }
        }
        if (!ok || std::hypot(x - (lo + (i + 0.5) * h), y - (lo + (j + 0.5) * h)) > 3 * h) continue;
        bool dup = false;
        for (auto [u, v] : roots) dup = dup || std::hypot(u - x, v - y) < 1e-8;
        if (!dup) roots.emplace_back(x, y);
    }
    return roots;
}

bool box_holds(const Box& b, double x, double y, double slack = 1e-12) {
    return b.x.lo.get_d() - slack <= x && x <= b.x.hi.get_d() + slack && b.y.lo.get_d() - slack <= y &&
           y <= b.y.hi.get_d() + slack;
}

const Rational micro = make_rational(1, 1000000);

std::vector<Verdict> verdicts(const CoverageReport& r) {
    std::vector<Verdict> v;
    for (const auto& c : r.components) v.push_back(c.verdict);
    return v;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
    Checker c;
    const auto& e = corpus_entry("ex1");
    Polynomial f = e.polynomial();
    ComponentMap m = component_map(f, e.box, e.resolution);
    c.require(m.components().size() == 3, "expected 3 components, got " + std::to_string(m.components().size()));
    for (const auto& mc : m.components()) c.require(mc.compact, "component touches the box");

    const Polynomial g = dehomogenize(classical_polar(homogenize(f), ProjPoint(0, 0, 1)));
    SolutionSet w = solve_system(f, g);
    auto sing = classify_all(f);
    c.require(sing.empty(), "ex1 has singular points");
    exclude_singular(w, sing);
    c.require(w.points.size() == 6, "expected 6 witnesses, got " + std::to_string(w.points.size()));
    CoverageReport cov = verify_coverage(f, w, sing, m, {PolarKind::Classical, std::nullopt});
    for (const auto& cc : cov.components) {
        c.require(cc.verdict == Verdict::Covered, "component not Covered");
        c.require(cc.witnesses.size() == 2, "component without exactly 2 witnesses");
    }
    auto oracle = sign_scan(f, g, -5, 5, 2000);
    c.require(oracle.size() == 6, "grid oracle found " + std::to_string(oracle.size()) + " points");
    for (const auto& p : w.points) {
        CertifiedPoint q = p.refined(micro);
        int hits = 0;
        for (auto [x, y] : oracle) hits += box_holds(q.box(), x, y);
        c.require(q.box().width() <= micro && hits == 1, "witness box at width 1e-6 does not hold one oracle point");
    }
    if (c.out.ok) c.out.detail = "3 compact components, 6 witnesses (2 each), Covered x3, oracle match at 1e-6";
    return c.out;
}

Outcome criterion2() {
    Checker c;
    const auto& e = corpus_entry("ex1");
    Polynomial f = e.polynomial();
    ComponentMap m = component_map(f, e.box, e.resolution);
    const Quadric q = Quadric::standard();
    const ProjPoint lperp = polar_point(q, ProjLine::at_infinity());
    const Polynomial g = dehomogenize(reciprocal_polar(homogenize(f), q, ProjPoint(1, 0, 0)));
    SolutionSet w = solve_system(f, g);
    exclude_singular(w, {});
    CoverageReport cov = verify_coverage(f, w, {}, m, {PolarKind::Reciprocal, lperp});
    for (const auto& cc : cov.components) c.require(cc.verdict == Verdict::Covered, "component not Covered");
    c.require(cov.components.size() == 3, "expected 3 components");
    c.require(cov.hypotheses_met(), "reciprocal hypotheses unmet");

    const PolyMatrix2 mm = reciprocal_minor_matrix(f, P("X1^2+X2^2"));
    const DPoly F(f), Fx(partial(f, 1)), Fy(partial(f, 2));
    for (const auto& p : w.points) {
        CertifiedPoint r = p.refined(micro);
        const std::vector<Interval> box{r.box().x, r.box().y};
        // rank <= 1: the single 2-minor vanishes somewhere in the box
        const Interval det = eval_interval(mm[0][0], box) * eval_interval(mm[1][1], box) -
                             eval_interval(mm[0][1], box) * eval_interval(mm[1][0], box);
        c.require(det.contains_zero(), "minor rank condition fails at a witness");
        // local extremum: step along the tangent both ways, return to the curve, compare
        auto [x, y] = r.approx();
        const double tx = -Fy(x, y), ty = Fx(x, y), n = std::hypot(tx, ty);
        const double d0 = x * x + y * y;
        int above = 0, below = 0;
        for (int s : {-1, 1}) {
            double u = x + s * 1e-3 * tx / n, v = y + s * 1e-3 * ty / n;
            for (int it = 0; it < 50; ++it) {
                const double fv = F(u, v), gx = Fx(u, v), gy = Fy(u, v), g2 = gx * gx + gy * gy;
                u -= fv * gx / g2;
                v -= fv * gy / g2;
            }
            (u * u + v * v > d0 ? above : below)++;
        }
        c.require(above == 2 || below == 2, "witness is not a local extremum of the distance");
    }
    if (c.out.ok)
        c.out.detail = std::to_string(w.points.size()) + " witnesses, Covered x3, minor vanishes and distance extremal at each";
    return c.out;
}

Outcome criterion3() {
    Checker c;
    JobSpec s;
    s.corpus = "ex4";
    Report bad = cmd_reciprocal(s);
    c.require(bad.exit_code == 1 && bad.error.find("L^perp") != std::string::npos, "standard quadric not rejected");
    s.center = RationalPair(1, 0);
    Report good = cmd_reciprocal(s);
    c.require(parse(good.quadric) == P("2*X0^2-2*X0*X1+X1^2+X2^2"), "recentred quadric is " + good.quadric);
    c.require(quadric_for_center(affine_point(1, 0)).polynomial() == P("2*X0^2-2*X0*X1+X1^2+X2^2"),
              "quadric_for_center(1,0) differs");
    c.require(good.components.size() == 2, "expected 2 components");
    for (const auto& cc : good.components) c.require(cc.verdict == "Covered", "component not Covered");
    if (c.out.ok) c.out.detail = "origin rejected; centre (1,0) gives 2*X0^2-2*X0*X1+X1^2+X2^2, Covered x2";
    return c.out;
}

Outcome criterion4() {
    Checker c;
    const auto& e = corpus_entry("ex5");
    Polynomial f = e.polynomial();
    SolutionSet s = singular_points(f);
    c.require(s.points.size() == 4, "expected 4 singular points, got " + std::to_string(s.points.size()));
    const double r = std::sqrt(3.0) / 2;
    const std::vector<std::pair<double, double>> oracle{{3.5, 2 - r}, {3.5, 2 + r}, {4.5, 2 - r}, {4.5, 2 + r}};
    for (const auto& p : s.points) {
        CertifiedPoint q = p.refined(micro);
        int hits = 0;
        for (auto [x, y] : oracle) hits += box_holds(q.box(), x, y, 1e-9);
        c.require(hits == 1, "singular point box misses the circle/line oracle");
    }
    auto sing = classify_all(f);
    for (const auto& x : sing) c.require(x.kind == SingularKind::Cusp, "singular point not a Cusp");

    ComponentMap m = component_map(f, e.box, e.resolution);
    const Quadric q = Quadric::standard();
    const Polynomial g = dehomogenize(reciprocal_polar(homogenize(f), q, ProjPoint(1, 0, 0)));
    SolutionSet w = solve_system(f, g);
    exclude_singular(w, sing);
    CoverageReport cov = verify_coverage(f, w, sing, m, {PolarKind::Reciprocal, polar_point(q, ProjLine::at_infinity())});
    for (const auto& cc : cov.components)
        c.require(cc.verdict == Verdict::OnlySingularWitnesses, "component verdict " + to_string(cc.verdict));
    if (c.out.ok)
        c.out.detail = "4 cusps at (7/2|9/2, 2+-sqrt(3)/2); " + std::to_string(cov.components.size()) +
                       " components, all OnlySingularWitnesses";
    return c.out;
}

Outcome criterion5() {
    Checker c;
    const auto& e = corpus_entry("counterexample-h");
    Polynomial h = e.polynomial();
    ComponentMap m = component_map(h, e.box, e.resolution);
    c.require(m.components().size() == 4, "expected 4 components");
    for (const auto& mc : m.components()) c.require(mc.compact, "non-compact component");

    auto sing = classify_all(h);
    c.require(sing.size() == 8, "expected 8 singular points");
    const Direction plus = Direction::normalized(QuadSurd(Rational(3)), QuadSurd(Rational(0), Rational(1), 3));
    const Direction minus = Direction::normalized(QuadSurd(Rational(3)), QuadSurd(Rational(0), Rational(-1), 3));
    int np = 0, nm = 0;
    for (const auto& s : sing) {
        c.require(s.kind == SingularKind::Cusp, "singular point not a Cusp");
        if (!s.exact || s.factors.size() != 1 || !s.factors[0].line) {
            c.require(false, "cusp without an exact tangent");
            continue;
        }
        const Direction& d = *s.factors[0].line;
        const bool near_origin = s.exact->x.to_double() < 2;
        // tangent line is normal to the radius of the circle through the cusp
        const QuadSurd cx(Rational(near_origin ? 0 : 4)), cy(Rational(near_origin ? 0 : 2));
        c.require(d == Direction::normalized(s.exact->x - cx, s.exact->y - cy), "cusp tangent is not the circle tangent");
        if (near_origin) {
            np += d == plus;
            nm += d == minus;
        }
    }
    c.require(np == 2 && nm == 2, "unit-circle cusps do not carry (3 : sqrt(3)) and (3 : -sqrt(3)) twice each");

    int worst = 0;
    for (int k = 0; k < 360; ++k) {
        const double t = k * std::numbers::pi / 360;
        const long a = std::lround(1000 * std::cos(t)), b = std::lround(1000 * std::sin(t));
        const Polynomial g = dehomogenize(classical_polar(homogenize(h), ProjPoint(0, a, b)));
        SolutionSet w = solve_system(h, g);
        exclude_singular(w, sing);
        CoverageReport cov = verify_coverage(h, w, sing, m, {PolarKind::Classical, std::nullopt});
        const int covered = static_cast<int>(cov.count(Verdict::Covered));
        worst = std::max(worst, covered);
        c.require(covered < 4, "direction (" + std::to_string(a) + "," + std::to_string(b) + ") covers all four");
    }
    if (c.out.ok)
        c.out.detail = "4 compact components, 8 cusps with exact tangents (3 : +-sqrt(3)); 360 directions, at most " +
                       std::to_string(worst) + "/4 Covered";
    return c.out;
}

Polynomial random_curve(std::mt19937& rng, int d) {
    std::uniform_int_distribution<int> coef(-9, 9);
    Polynomial f(2);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; i + j <= d; ++j) {
            Monomial mono;
            mono.exps = {0, static_cast<unsigned>(i), static_cast<unsigned>(j)};
            int v = coef(rng);
            if (i + j == d && i == d && v == 0) v = 1;
            f.add_term(mono, v);
        }
    return f;
}

Outcome criterion6() {
    Checker c;
    std::mt19937 rng(60601);
    std::uniform_int_distribution<int> dir(-5, 5);
    int done = 0;
    std::size_t most_c = 0, most_r = 0;
    while (done < 50) {
        const int d = 3 + done % 3;
        Polynomial f = random_curve(rng, d);
        if (!is_squarefree(f)) continue;
        int a = dir(rng), b = dir(rng);
        if (a == 0 && b == 0) b = 1;
        const Polynomial F = homogenize(f);
        const Polynomial pc = classical_polar(F, ProjPoint(0, a, b));
        const Polynomial pr = reciprocal_polar(F, Quadric::standard(), ProjPoint(1, 0, 0));
        c.require(pc.degree() == d - 1, "classical polar degree is not d-1");
        c.require(pr.degree() <= d, "reciprocal polar degree exceeds d");
        try {
            SolutionSet wc = solve_system(f, dehomogenize(pc));
            SolutionSet wr = solve_system(f, dehomogenize(pr));
            c.require(wc.points.size() <= static_cast<std::size_t>(d * (d - 1)), "classical witnesses exceed d(d-1)");
            c.require(wr.points.size() <= static_cast<std::size_t>(d * d), "reciprocal witnesses exceed d^2");
            most_c = std::max(most_c, wc.points.size());
            most_r = std::max(most_r, wr.points.size());
        } catch (const CommonComponentError&) {
            continue;  // a factor shared with its polar: not a curve this check applies to
        }
        ++done;
    }
    if (c.out.ok)
        c.out.detail = "50 curves of degree 3-5; largest witness counts " + std::to_string(most_c) + " (classical), " +
                       std::to_string(most_r) + " (reciprocal)";
    return c.out;
}

Outcome criterion7() {
    Checker c;
    std::mt19937 rng(70707);
    std::uniform_int_distribution<int> deg(1, 4);
    int systems = 0, roots = 0;
    double solver_secs = 0;
    while (systems < 100) {
        Polynomial f = random_curve(rng, deg(rng)), g = random_curve(rng, deg(rng));
        if (f.degree() + g.degree() < 3) continue;
        SolutionSet s;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            s = solve_system(f, g);
        } catch (const CommonComponentError&) {
            continue;
        }
        solver_secs += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        ++systems;
        auto oracle = sign_scan(f, g, -4, 4, 2000);
        const double inner = 3.99;
        const auto inside = [&](double x, double y) { return std::abs(x) < inner && std::abs(y) < inner; };
        std::vector<CertifiedPoint> pts;
        for (const auto& p : s.points) {
            CertifiedPoint q = p.refined(micro);
            auto [x, y] = q.approx();
            if (inside(x, y)) pts.push_back(q);
        }
        std::size_t matched = 0;
        for (auto [x, y] : oracle) {
            if (!inside(x, y)) continue;
            int hits = 0;
            for (const auto& q : pts) hits += box_holds(q.box(), x, y, 1e-9);
            c.require(hits == 1, "oracle root (" + std::to_string(x) + "," + std::to_string(y) + ") not in one box");
            matched += hits == 1;
        }
        c.require(matched == pts.size(), "solver box without an oracle root");
        roots += static_cast<int>(pts.size());
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.1f", solver_secs);
    if (c.out.ok)
        c.out.detail = "100 systems of degree <= 4, " + std::to_string(roots) + " roots in [-4,4]^2 agree; solver " + buf + " s";
    return c.out;
}

Outcome criterion8() {
    Checker c;
    std::mt19937 rng(80808);
    std::uniform_int_distribution<int> n(-9, 9);
    const auto rnd = [&] { return make_rational(n(rng), 1 + rng() % 5); };
    const auto point = [&] {
        for (;;) {
            Triple t{rnd(), rnd(), rnd()};
            if (sgn(t[0]) || sgn(t[1]) || sgn(t[2])) return ProjPoint(t);
        }
    };
    static const char* monos[] = {"X0^2", "X1^2", "X2^2", "X0*X1", "X0*X2", "X1*X2"};
    int triples = 0;
    while (triples < 1000) {
        Polynomial qp(3);
        for (const char* mono : monos) qp += rnd() * parse(mono).as_projective();
        if (qp.degree() != 2 || !qp.is_homogeneous()) continue;
        Quadric q;
        try {
            q = Quadric::from_polynomial(qp);
        } catch (const std::invalid_argument&) {
            continue;
        }
        const ProjPoint a = point(), b = point();
        c.require(polar_point(q, polar_line(q, a)) == a, "A^perp^perp != A");
        const ProjLine l(point().c);
        c.require(polar_line(q, polar_point(q, l)) == l, "L^perp^perp != L");
        c.require(incident(a, polar_line(q, b)) == incident(b, polar_line(q, a)), "incidence not reciprocal");
        // a point of B's polar line is conjugate to B
        const ProjLine pb = polar_line(q, b);
        const Triple on = sgn(pb.c[2]) ? Triple{pb.c[2], 0, -pb.c[0]} : Triple{0, 0, 1};
        c.require(incident(b, polar_line(q, ProjPoint(on))), "conjugacy fails");
        ++triples;
    }
    if (c.out.ok) c.out.detail = "1000 random (Q, A, B): involution both ways and incidence reciprocity";
    return c.out;
}

Outcome criterion9() {
    Checker c;
    for (const char* id : {"ex2", "ex3"}) {
        const auto& e = corpus_entry(id);
        Polynomial f = e.polynomial();
        auto sing = classify_all(f);
        c.require(sing.size() == 2, std::string(id) + ": expected 2 singular points");
        for (const auto& s : sing)
            c.require(s.kind == SingularKind::OrdinaryRealMultiple && s.multiplicity == 2,
                      std::string(id) + ": singular point is not an ordinary double point");
        ComponentMap m = component_map(f, e.box, e.resolution);
        c.require(m.components().size() == 2, std::string(id) + ": expected 2 components");
        if (std::string(id) == "ex2") {
            const Polynomial g = dehomogenize(classical_polar(homogenize(f), ProjPoint(0, 0, 1)));
            SolutionSet w = solve_system(f, g);
            exclude_singular(w, sing);
            CoverageReport cov = verify_coverage(f, w, sing, m, {PolarKind::Classical, std::nullopt});
            for (auto v : verdicts(cov)) c.require(v == Verdict::Covered, "ex2 component not Covered");
            for (const auto& mc : m.components()) c.require(mc.compact, "ex2 component not compact");
        } else {
            const Quadric q = Quadric::standard();
            const Polynomial g = dehomogenize(reciprocal_polar(homogenize(f), q, ProjPoint(1, 0, 0)));
            SolutionSet w = solve_system(f, g, e.box);
            exclude_singular(w, sing);
            CoverageReport cov =
                verify_coverage(f, w, sing, m, {PolarKind::Reciprocal, polar_point(q, ProjLine::at_infinity())});
            for (auto v : verdicts(cov)) c.require(v == Verdict::Covered, "ex3 component not Covered");
            bool flagged = false;
            for (const auto& ch : cov.checklist)
                if (ch.name == "components compact in box") flagged = ch.status == CheckStatus::Fails && !ch.required;
            c.require(flagged, "ex3 non-compactness not flagged");
            c.require(cov.hypotheses_met(), "ex3 reciprocal hypotheses unmet");
        }
    }
    if (c.out.ok)
        c.out.detail = "2 ordinary double points each; ex2 classical Covered x2; ex3 reciprocal Covered x2, non-compact flagged";
    return c.out;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double budget;  // seconds; 0 = none stated
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, "ex1 classical polar coverage", 30, criterion1},
        {2, "ex1 reciprocal polar coverage", 60, criterion2},
        {3, "ex4 recentred quadric", 30, criterion3},
        {4, "ex5 cusps and reciprocal coverage", 300, criterion4},
        {5, "counterexample h", 900, criterion5},
        {6, "degree and Bezout bounds", 120, criterion6},
        {7, "solver vs sign-scan oracle", 120, criterion7},
        {8, "polarity involution and incidence", 0, criterion8},
        {9, "ex2 and ex3 double points and coverage", 300, criterion9},
    };
    int failed = 0;
    for (const auto& cr : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = cr.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cr.budget > 0 && secs > cr.budget) {
            o.ok = false;
            o.detail += " (over budget)";
        }
        char timing[64];
        if (cr.budget > 0)
            std::snprintf(timing, sizeof timing, "%.1f s / %.0f s", secs, cr.budget);
        else
            std::snprintf(timing, sizeof timing, "%.1f s", secs);
        std::printf("%s %d %s: %s [%s]\n", o.ok ? "PASS" : "FAIL", cr.id, cr.name, o.detail.c_str(), timing);
        std::fflush(stdout);
        failed += !o.ok;
    }
    return failed == 0 ? 0 : 1;
}
