#include "polars/topology.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace polars {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double down(double x) { return std::nextafter(x, -kInf); }
double up(double x) { return std::nextafter(x, kInf); }

// Double interval, rounded outward by one ulp after every operation.
struct FI {
    double lo = 0, hi = 0;
};

FI operator+(FI a, FI b) { return {down(a.lo + b.lo), up(a.hi + b.hi)}; }
FI operator*(FI a, FI b) {
    const double p[] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {down(*std::min_element(p, p + 4)), up(*std::max_element(p, p + 4))};
}

FI enclose(const Rational& r) {
    const double d = r.get_d();
    return {down(d), up(d)};
}

bool has_zero(FI a) { return a.lo <= 0 && a.hi >= 0; }

// f as a dense table c[j][i] of X1^i X2^j, evaluated by nested Horner.
struct Dense {
    std::vector<std::vector<FI>> c;
    std::vector<std::vector<double>> d;

    explicit Dense(const Polynomial& f) {
        const int dx = std::max(0, f.degree_in(1)), dy = std::max(0, f.degree_in(2));
        c.assign(dy + 1, std::vector<FI>(dx + 1));
        d.assign(dy + 1, std::vector<double>(dx + 1, 0.0));
        for (const auto& [m, v] : f.terms()) {
            c[m.exps[2]][m.exps[1]] = enclose(v);
            d[m.exps[2]][m.exps[1]] = v.get_d();
        }
    }

    FI eval(FI x, FI y) const {
        FI acc{0, 0};
        for (std::size_t j = c.size(); j-- > 0;) {
            FI row{0, 0};
            for (std::size_t i = c[j].size(); i-- > 0;) row = row * x + c[j][i];
            acc = acc * y + row;
        }
        return acc;
    }

    double eval(double x, double y) const {
        double acc = 0;
        for (std::size_t j = d.size(); j-- > 0;) {
            double row = 0;
            for (std::size_t i = d[j].size(); i-- > 0;) row = row * x + d[j][i];
            acc = acc * y + row;
        }
        return acc;
    }
};

// Taylor shift of a[0..d] to s0: afterwards a[i] is the coefficient of (s - s0)^i.
void shift(std::vector<FI>& a, FI s0) {
    const std::size_t d = a.size();
    for (std::size_t k = 0; k + 1 < d; ++k)
        for (std::size_t i = d - 1; i-- > k;) a[i] = a[i] + s0 * a[i + 1];
}

// Cell test on g(s, t) = f(cx + hx s, cy + hy t) / scale over [-1, 1]^2, cells with
// dyadic centres. Naive Horner rejects cheaply; survivors get the full Taylor form.
struct CellTest {
    Dense g;

    explicit CellTest(const Polynomial& p) : g(p) {}

    bool carrying(double s0, double t0, double r) const {
        const FI S{s0 - r, s0 + r}, T{t0 - r, t0 + r};
        if (!has_zero(g.eval(S, T))) return false;
        std::vector<std::vector<FI>> a = g.c;
        for (auto& row : a) shift(row, FI{s0, s0});
        const std::size_t nx = a.front().size();
        std::vector<FI> col(a.size());
        for (std::size_t i = 0; i < nx; ++i) {
            for (std::size_t j = 0; j < a.size(); ++j) col[j] = a[j][i];
            shift(col, FI{t0, t0});
            for (std::size_t j = 0; j < a.size(); ++j) a[j][i] = col[j];
        }
        const std::size_t n = std::max(nx, a.size());
        std::vector<FI> pw(n);
        double rk = 1;
        for (std::size_t k = 0; k < n; ++k) {
            pw[k] = k == 0 ? FI{1, 1} : (k % 2 ? FI{-rk, rk} : FI{0, rk});
            rk = up(rk * r);
        }
        FI acc = a[0][0];
        for (std::size_t j = 0; j < a.size(); ++j)
            for (std::size_t i = 0; i < nx; ++i)
                if (i || j) acc = acc + a[j][i] * (pw[i] * pw[j]);
        return has_zero(acc);
    }
};

// f on the box rescaled exactly to [-1, 1]^2 and normalised to unit largest coefficient.
Polynomial unit_chart(const Polynomial& f, const Box& b) {
    const Rational hx = b.x.width() / 2, hy = b.y.width() / 2;
    const Polynomial t = translate(f, b.x.midpoint(), b.y.midpoint());
    Polynomial g(2);
    Rational big = 0;
    for (const auto& [m, c] : t.terms()) {
        const Rational v = c * power(hx, m.exps[1]) * power(hy, m.exps[2]);
        g.add_term(m, v);
        if (abs(v) > big) big = abs(v);
    }
    return sgn(big) ? scale(g, 1 / big) : g;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Box ComponentMap::cell_box(int i, int j) const {
    const Rational w = box_.x.width() / res_, h = box_.y.width() / res_;
    return {Interval(box_.x.lo + w * i, box_.x.lo + w * (i + 1)), Interval(box_.y.lo + h * j, box_.y.lo + h * (j + 1))};
}

std::size_t ComponentMap::carrying_cells() const {
    return static_cast<std::size_t>(std::count_if(labels_.begin(), labels_.end(), [](int l) { return l >= 0; }));
}

std::vector<std::pair<int, int>> ComponentMap::cells_of(int id) const {
    std::vector<std::pair<int, int>> out;
    for (int j = 0; j < res_; ++j)
        for (int i = 0; i < res_; ++i)
            if (label(i, j) == id) out.emplace_back(i, j);
    return out;
}

ComponentMap component_map(const Polynomial& f, const Box& box, int resolution) {
    if (resolution < 1 || (resolution & (resolution - 1)) != 0)
        throw std::invalid_argument("component_map: resolution must be a power of two");
    if (f.is_zero()) throw std::invalid_argument("component_map of the zero polynomial");
    ComponentMap map;
    map.box_ = box;
    map.res_ = resolution;
    if (sgn(box.x.width()) <= 0 || sgn(box.y.width()) <= 0) throw std::invalid_argument("component_map: empty box");
    const CellTest test(unit_chart(f, box));

    std::vector<char> on(static_cast<std::size_t>(resolution) * resolution, 0);
    struct Node {
        int step, i, j;  // cell [i, i + step) x [j, j + step) in units of 1/(2^extra res)
    };
    // true if some subcell of (i, j) at `extra` further levels survives the test
    const auto survives = [&](int i, int j, int extra) {
        const int n = resolution << extra;
        std::vector<Node> stack{{1 << extra, i << extra, j << extra}};
        while (!stack.empty()) {
            const Node c = stack.back();
            stack.pop_back();
            const double r = static_cast<double>(c.step) / n;
            if (!test.carrying(-1 + (2.0 * c.i + c.step) / n, -1 + (2.0 * c.j + c.step) / n, r)) continue;
            if (c.step == 1) return true;
            const int h = c.step / 2;
            for (int dj : {h, 0})
                for (int di : {h, 0}) stack.push_back({h, c.i + di, c.j + dj});
        }
        return false;
    };

    std::vector<Node> stack{{resolution, 0, 0}};
    while (!stack.empty()) {
        const Node n = stack.back();
        stack.pop_back();
        const double r = static_cast<double>(n.step) / resolution;
        if (!test.carrying(-1 + (2.0 * n.i + n.step) / resolution, -1 + (2.0 * n.j + n.step) / resolution, r)) continue;
        if (n.step == 1) {
            on[static_cast<std::size_t>(n.j) * resolution + n.i] = 1;
            continue;
        }
        const int h = n.step / 2;
        for (int dj : {h, 0})
            for (int di : {h, 0}) stack.push_back({h, n.i + di, n.j + dj});
    }

    const auto idx = [&](int i, int j) { return static_cast<std::size_t>(j) * resolution + i; };
    const auto label = [&] {
        UnionFind uf(on.size());
        for (int j = 0; j < resolution; ++j)
            for (int i = 0; i < resolution; ++i) {
                if (!on[idx(i, j)]) continue;
                if (i + 1 < resolution && on[idx(i + 1, j)])
                    uf.unite(static_cast<int>(idx(i, j)), static_cast<int>(idx(i + 1, j)));
                if (j + 1 < resolution && on[idx(i, j + 1)])
                    uf.unite(static_cast<int>(idx(i, j)), static_cast<int>(idx(i, j + 1)));
            }
        // ids in order of first appearance scanning columns left to right
        map.labels_.assign(on.size(), -1);
        map.components_.clear();
        std::vector<int> id_of_root(on.size(), -1);
        for (int i = 0; i < resolution; ++i)
            for (int j = 0; j < resolution; ++j) {
                if (!on[idx(i, j)]) continue;
                const int root = uf.find(static_cast<int>(idx(i, j)));
                if (id_of_root[root] < 0) {
                    id_of_root[root] = static_cast<int>(map.components_.size());
                    map.components_.push_back({id_of_root[root], 0, true});
                }
                MapComponent& c = map.components_[id_of_root[root]];
                map.labels_[idx(i, j)] = c.id;
                ++c.cells;
                if (i == 0 || j == 0 || i == resolution - 1 || j == resolution - 1) c.compact = false;
            }
    };
    label();

    // Small components are often cells where f nearly touches zero. Drop a cell only when
    // every subcell six levels down is excluded.
    constexpr std::size_t kSmall = 64;
    constexpr int kExtra = 6;
    bool dropped = false;
    for (int i = 0; i < resolution; ++i)
        for (int j = 0; j < resolution; ++j) {
            const int l = map.labels_[idx(i, j)];
            if (l < 0 || map.components_[l].cells > kSmall) continue;
            if (!survives(i, j, kExtra)) {
                on[idx(i, j)] = 0;
                dropped = true;
            }
        }
    if (dropped) label();
    return map;
}

int assign(const CertifiedPoint& point, const ComponentMap& map) {
    const Box mb = map.box();
    const Rational cell = std::min(Rational(mb.x.width() / map.resolution()), Rational(mb.y.width() / map.resolution()));
    const Rational floor_width = make_rational(1, 1L << 30);
    CertifiedPoint p = point.box().width() > cell / 4 ? point.refined(cell / 4) : point;
    for (;;) {
        const Box& b = p.box();
        if (!b.intersects(mb)) throw AssignmentError(AssignmentError::Kind::NotOnCurve, "point lies outside the map box");
        const double w = mb.x.width().get_d() / map.resolution(), h = mb.y.width().get_d() / map.resolution();
        const auto clampi = [&](double v) { return std::clamp(static_cast<int>(std::floor(v)), 0, map.resolution() - 1); };
        const int i0 = clampi(Rational(b.x.lo - mb.x.lo).get_d() / w - 1), i1 = clampi(Rational(b.x.hi - mb.x.lo).get_d() / w + 1);
        const int j0 = clampi(Rational(b.y.lo - mb.y.lo).get_d() / h - 1), j1 = clampi(Rational(b.y.hi - mb.y.lo).get_d() / h + 1);
        std::vector<int> seen;
        for (int i = i0; i <= i1; ++i)
            for (int j = j0; j <= j1; ++j) {
                const int l = map.label(i, j);
                if (l >= 0 && std::find(seen.begin(), seen.end(), l) == seen.end() && map.cell_box(i, j).intersects(b))
                    seen.push_back(l);
            }
        if (seen.empty()) throw AssignmentError(AssignmentError::Kind::NotOnCurve, "point meets no carrying cell");
        if (seen.size() == 1) return seen.front();
        if (b.width() <= floor_width)
            throw AssignmentError(AssignmentError::Kind::Ambiguous, "point box straddles two components at width 2^-30");
        p = p.refined(b.width() / 4);
    }
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Covered: return "Covered";
        case Verdict::OnlySingularWitnesses: return "OnlySingularWitnesses";
        case Verdict::Uncovered: return "Uncovered";
    }
    return "?";
}

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::Holds: return "holds";
        case CheckStatus::Fails: return "fails";
        case CheckStatus::Unknown: return "unknown";
    }
    return "?";
}

bool CoverageReport::hypotheses_met() const {
    return std::all_of(checklist.begin(), checklist.end(),
                       [](const HypothesisCheck& c) { return !c.required || c.status == CheckStatus::Holds; });
}

bool CoverageReport::all_covered() const { return count(Verdict::Covered) == components.size(); }

std::size_t CoverageReport::count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(components.begin(), components.end(), [v](const ComponentCoverage& c) { return c.verdict == v; }));
}

void exclude_singular(SolutionSet& s, const std::vector<SingularityReport>& singulars) {
    std::vector<char> hit(s.points.size(), 0);
    for (const auto& r : singulars)
        if (auto k = locate(r.location, s.points)) hit[*k] = 1;
    std::vector<CertifiedPoint> kept;
    for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (hit[i])
            s.excluded.push_back({s.points[i], "singular point"});
        else
            kept.push_back(s.points[i]);
    }
    s.points = std::move(kept);
}

CoverageReport verify_coverage(const Polynomial& f, const SolutionSet& witnesses,
                               const std::vector<SingularityReport>& singulars, const ComponentMap& map,
                               const CoverageContext& ctx) {
    CoverageReport rep;
    for (const auto& p : witnesses.points) rep.witnesses.push_back({p, false, -1, ""});
    for (const auto& e : witnesses.excluded)
        if (e.reason == "singular point") rep.witnesses.push_back({e.point, true, -1, ""});

    for (const auto& c : map.components()) rep.components.push_back({c.id, c.compact, {}, {}, Verdict::Uncovered});

    std::size_t unassigned = 0;
    for (std::size_t k = 0; k < rep.witnesses.size(); ++k) {
        Witness& w = rep.witnesses[k];
        try {
            w.component = assign(w.point, map);
            rep.components[w.component].witnesses.push_back(k);
        } catch (const AssignmentError& e) {
            w.note = e.what();
            ++unassigned;
        }
    }
    std::vector<int> sing_comp(singulars.size(), -1);
    for (std::size_t k = 0; k < singulars.size(); ++k) {
        try {
            sing_comp[k] = assign(singulars[k].location, map);
            rep.components[sing_comp[k]].singulars.push_back(k);
        } catch (const AssignmentError&) {
        }
    }

    for (auto& c : rep.components) {
        bool any = false, nonsingular = false;
        for (std::size_t k : c.witnesses) {
            any = true;
            nonsingular = nonsingular || !rep.witnesses[k].singular;
        }
        c.verdict = nonsingular ? Verdict::Covered : any ? Verdict::OnlySingularWitnesses : Verdict::Uncovered;
    }

    // hypothesis checklist
    {
        const bool all_compact = std::all_of(rep.components.begin(), rep.components.end(),
                                             [](const ComponentCoverage& c) { return c.compact; });
        rep.checklist.push_back({"components compact in box", all_compact ? CheckStatus::Holds : CheckStatus::Fails,
                                 ctx.kind == PolarKind::Classical,
                                 all_compact ? "" : "a component reaches the box boundary"});
    }
    {
        std::size_t bad = 0, unknown = 0;
        for (const auto& s : singulars) {
            if (s.kind == SingularKind::Unclassified)
                ++unknown;
            else if (s.kind != SingularKind::OrdinaryRealMultiple)
                ++bad;
        }
        const CheckStatus st = bad ? CheckStatus::Fails : unknown ? CheckStatus::Unknown : CheckStatus::Holds;
        std::string detail;
        if (bad) detail += std::to_string(bad) + " non-ordinary";
        if (unknown) detail += std::string(detail.empty() ? "" : ", ") + std::to_string(unknown) + " unclassified";
        rep.checklist.push_back({"singularities are ordinary real multiple points", st, true, detail});
    }
    {
        // relaxed form: one other singularity per component is tolerated
        bool ok = true, unsure = false;
        for (const auto& c : rep.components) {
            int other = 0;
            for (std::size_t k : c.singulars) {
                if (singulars[k].kind == SingularKind::Unclassified) unsure = true;
                if (singulars[k].kind != SingularKind::OrdinaryRealMultiple) ++other;
            }
            ok = ok && other <= 1;
        }
        if (std::count(sing_comp.begin(), sing_comp.end(), -1) > 0) unsure = true;
        rep.checklist.push_back({"at most one other singularity per component",
                                 !ok ? CheckStatus::Fails : unsure ? CheckStatus::Unknown : CheckStatus::Holds, false,
                                 "reported only; the relaxed conclusion is not verified"});
    }
    if (ctx.kind == PolarKind::Reciprocal) {
        HypothesisCheck c{"L^perp not on the curve", CheckStatus::Unknown, true, ""};
        if (ctx.center && ctx.center->is_affine()) {
            const ProjPoint a = ctx.center->canonical();
            const bool on = sgn(eval_rat(f, std::vector<Rational>{a.c[1], a.c[2]})) == 0;
            c.status = on ? CheckStatus::Fails : CheckStatus::Holds;
            c.detail = "L^perp = " + a.to_string();
        } else if (ctx.center) {
            c.status = CheckStatus::Holds;
            c.detail = "L^perp at infinity";
        }
        rep.checklist.push_back(c);
    }
    rep.checklist.push_back({"witnesses assigned to components", unassigned ? CheckStatus::Unknown : CheckStatus::Holds,
                             false, unassigned ? std::to_string(unassigned) + " unassigned" : ""});
    return rep;
}

double direction_angle(double a, double b) {
    double t = std::atan2(b, a);
    if (t < 0) t += std::numbers::pi;
    if (t >= std::numbers::pi) t -= std::numbers::pi;
    return t;
}

bool AngleArc::contains(double angle, double tol) const {
    if (lo <= hi) return lo - tol <= angle && angle <= hi + tol;
    return angle >= lo - tol || angle <= hi + tol;
}

std::vector<AngleArc> gauss_sector_scan(const Polynomial& f, const ComponentMap& map, int component, int samples) {
    const Dense F(f), Fx(partial(f, 1)), Fy(partial(f, 2));
    const auto cells = map.cells_of(component);
    if (cells.empty() || samples < 1) return {};
    const double cw = map.box().x.width().get_d() / map.resolution();
    const std::size_t stride = std::max<std::size_t>(1, cells.size() / (4 * static_cast<std::size_t>(samples)));

    std::vector<double> angles;
    for (std::size_t k = 0; k < cells.size(); k += stride) {
        const Box b = map.cell_box(cells[k].first, cells[k].second);
        const double x0 = b.x.midpoint().get_d(), y0 = b.y.midpoint().get_d();
        double x = x0, y = y0;
        bool ok = false;
        for (int it = 0; it < 80; ++it) {
            const double v = F.eval(x, y), gx = Fx.eval(x, y), gy = Fy.eval(x, y), n2 = gx * gx + gy * gy;
            if (n2 == 0) break;
            x -= v * gx / n2;
            y -= v * gy / n2;
            if (std::abs(v) <= 1e-12 * std::sqrt(n2)) {
                ok = true;
                break;
            }
        }
        if (!ok || std::hypot(x - x0, y - y0) > 2 * cw) continue;
        const double gx = Fx.eval(x, y), gy = Fy.eval(x, y);
        if (std::hypot(gx, gy) < 1e-9) continue;  // at or next to a singular point
        angles.push_back(direction_angle(gx, gy));
    }
    if (angles.empty()) return {};
    std::sort(angles.begin(), angles.end());

    const double pi = std::numbers::pi;
    const double tol = std::max(0.05, 8 * pi / samples);
    std::vector<std::size_t> gaps;  // arc starts after a large gap
    for (std::size_t k = 0; k < angles.size(); ++k) {
        const double next = k + 1 < angles.size() ? angles[k + 1] : angles[0] + pi;
        if (next - angles[k] > tol) gaps.push_back(k);
    }
    if (gaps.empty()) return {{0, pi}};
    std::vector<AngleArc> arcs;
    for (std::size_t g = 0; g < gaps.size(); ++g) {
        const std::size_t start = (gaps[g] + 1) % angles.size();
        const std::size_t end = gaps[(g + 1) % gaps.size()];
        arcs.push_back({angles[start], angles[end]});
    }
    std::sort(arcs.begin(), arcs.end(), [](const AngleArc& a, const AngleArc& b) { return a.lo < b.lo; });
    return arcs;
}

}  // namespace polars
