#include "polars/jobs.hpp"

#include "polars/parse.hpp"
#include "polars/render.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace polars {

namespace {

const Rational& report_width() {
    static const Rational w = dyadic(1, 24);
    return w;
}

Integer floor_of(const Rational& r) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

Integer ceil_of(const Rational& r) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    return q;
}

std::string pair_string(const RationalPair& p) { return to_string(p.first) + "," + to_string(p.second); }

struct Curve {
    Polynomial f;
    const CorpusEntry* entry = nullptr;
    Box box;
    int resolution = 512;
    std::optional<std::vector<SingularityReport>> sing;
    std::optional<ComponentMap> map;
    std::optional<bool> stable;

    const std::vector<SingularityReport>& singulars() {
        if (!sing) sing = classify_all(f);
        return *sing;
    }
    const ComponentMap& cmap() {
        if (!map) map = component_map(f, box, resolution);
        return *map;
    }
    bool is_stable() {
        if (!stable) stable = component_map(f, box, 2 * resolution).components().size() == cmap().components().size();
        return *stable;
    }
};

Curve load(const JobSpec& spec) {
    if (spec.curve.has_value() == spec.corpus.has_value())
        throw std::invalid_argument("give exactly one of --curve and --corpus");
    Curve c;
    if (spec.corpus) {
        c.entry = &corpus_entry(*spec.corpus);
        c.f = c.entry->polynomial();
        c.box = c.entry->box;
        c.resolution = c.entry->resolution;
    } else {
        c.f = parse(*spec.curve);
        if (c.f.nvars() == 3) {
            if (c.f.degree_in(0) > 0) throw std::invalid_argument("the curve must be affine, in X1 and X2");
            c.f = restrict_affine(c.f);
        }
    }
    if (c.f.degree() < 1) throw std::invalid_argument("the curve polynomial is constant");
    if (!is_squarefree(c.f)) throw std::invalid_argument("the curve polynomial has a repeated factor");
    if (!spec.corpus) c.box = default_box(c.f);
    if (spec.box) c.box = *spec.box;
    if (spec.resolution) c.resolution = *spec.resolution;
    return c;
}

// outward to multiples of 2^-30; back-substituted endpoints are otherwise unreadable
Interval widen_to_dyadic(const Interval& i) {
    constexpr unsigned long e = 30;
    const auto round = [&](const Rational& v, bool up) {
        const Integer n = v.get_num() << e;
        Integer q;
        if (up)
            mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), v.get_den().get_mpz_t());
        else
            mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), v.get_den().get_mpz_t());
        return dyadic(q, e);
    };
    return Interval(round(i.lo, false), round(i.hi, true));
}

PointRecord record(const CertifiedPoint& p) {
    const CertifiedPoint q = p.box().width() > report_width() ? p.refined(report_width()) : p;
    PointRecord r;
    r.box = Box{widen_to_dyadic(q.box().x), widen_to_dyadic(q.box().y)};
    auto [x, y] = q.approx();
    r.x = display_decimal(x);
    r.y = display_decimal(y);
    r.multiplicity_hint = q.multiplicity_hint();
    return r;
}

SingularRecord record(const SingularityReport& s) {
    SingularRecord r;
    r.location = record(s.location);
    r.location.singular = true;
    if (s.exact) {
        r.exact_x = s.exact->x.to_string();
        r.exact_y = s.exact->y.to_string();
    }
    r.multiplicity = s.multiplicity;
    r.kind = to_string(s.kind);
    r.real_branches = s.real_branches;
    for (const auto& fct : s.factors) {
        if (fct.line) {
            r.tangents.push_back(fct.line->to_string());
        } else {
            std::ostringstream os;
            os.precision(6);
            os << "~(" << std::cos(fct.angle) << " : " << std::sin(fct.angle) << ")";
            r.tangents.push_back(os.str());
        }
        r.tangent_multiplicities.push_back(fct.multiplicity);
    }
    r.complex_pairs = s.complex_pairs;
    return r;
}

Report base(const std::string& command, const JobSpec& spec, Curve* c) {
    Report r;
    r.command = command;
    if (spec.corpus) r.corpus = *spec.corpus;
    if (c) {
        r.curve = to_string(c->f);
        r.degree = c->f.degree();
        r.box = c->box;
        r.resolution = c->resolution;
    } else if (spec.curve) {
        r.curve = *spec.curve;
    }
    return r;
}

void fill_components(Report& r, Curve& c, const CoverageReport* cov) {
    const ComponentMap& m = c.cmap();
    r.stable = c.is_stable();
    for (const auto& mc : m.components()) r.components.push_back({mc.id, mc.compact, mc.cells, "", {}, {}});
    if (!cov) return;
    std::vector<int> index(cov->witnesses.size(), -1);  // coverage witness -> report witness
    for (std::size_t k = 0; k < cov->witnesses.size(); ++k) {
        const Witness& w = cov->witnesses[k];
        PointRecord p = record(w.point);
        p.singular = w.singular;
        p.component = w.component;
        if (w.singular) {
            p.reason = "singular point";
            r.excluded.push_back(p);
        } else {
            p.reason = w.note;
            index[k] = static_cast<int>(r.witnesses.size());
            r.witnesses.push_back(p);
        }
    }
    for (const auto& cc : cov->components) {
        ComponentRecord& rc = r.components[cc.id];
        rc.verdict = to_string(cc.verdict);
        for (std::size_t k : cc.witnesses)
            if (index[k] >= 0) rc.witnesses.push_back(index[k]);
        for (std::size_t k : cc.singulars) {
            rc.singular_points.push_back(static_cast<int>(k));
            if (k < r.singular_points.size()) r.singular_points[k].location.component = cc.id;
        }
    }
    for (const auto& ch : cov->checklist) r.checklist.push_back({ch.name, to_string(ch.status), ch.required, ch.detail});
    r.checklist.push_back({"component count stable under refinement", *r.stable ? "holds" : "fails", false,
                           "resolution " + std::to_string(2 * c.resolution)});
    r.exit_code = cov->all_covered() && cov->hypotheses_met() ? 0 : 2;
}

struct PolarRun {
    Report report;
    Polynomial g;
};

template <class F>
Report guarded(const std::string& command, const JobSpec& spec, F&& body) {
    try {
        return body();
    } catch (const std::exception& e) {
        Report r = base(command, spec, nullptr);
        r.error = e.what();
        r.exit_code = 1;
        return r;
    }
}

PolarRun run_polar(Curve& c, const JobSpec& spec) {
    Report r = base("polar", spec, &c);
    const RationalPair d = spec.direction.value_or(RationalPair(0, 1));
    const ProjPoint a(0, d.first, d.second);
    const Flag2D flag(a);
    r.flag_point = flag.point.to_string();
    const Polynomial g = dehomogenize(classical_polar(homogenize(c.f), flag.point));
    r.polar = to_string(g);
    SolutionSet w = solve_system(c.f, g, c.box);
    const auto& sing = c.singulars();
    for (const auto& s : sing) r.singular_points.push_back(record(s));
    exclude_singular(w, sing);
    const CoverageReport cov = verify_coverage(c.f, w, sing, c.cmap(), {PolarKind::Classical, std::nullopt});
    fill_components(r, c, &cov);
    return {r, g};
}

std::optional<RationalPair> suggest_center(const Polynomial& f) {
    // axis points first, then the rest of each square ring
    for (int radius = 1; radius <= 4; ++radius) {
        std::vector<std::pair<int, int>> ring{{radius, 0}, {0, radius}, {-radius, 0}, {0, -radius}};
        for (int x = -radius; x <= radius; ++x)
            for (int y = -radius; y <= radius; ++y)
                if (std::max(std::abs(x), std::abs(y)) == radius && x != 0 && y != 0) ring.emplace_back(x, y);
        for (auto [x, y] : ring)
            if (sgn(eval_rat(f, std::vector<Rational>{Rational(x), Rational(y)})) != 0) return RationalPair(x, y);
    }
    return std::nullopt;
}

PolarRun run_reciprocal(Curve& c, const JobSpec& spec) {
    Report r = base("reciprocal", spec, &c);
    if (spec.center && spec.quadric) throw std::invalid_argument("give at most one of --center and --quadric");
    Quadric q = Quadric::standard();
    if (spec.center)
        q = quadric_for_center(affine_point(spec.center->first, spec.center->second));
    else if (spec.quadric && *spec.quadric != "standard")
        q = Quadric::from_polynomial(parse(*spec.quadric));
    r.quadric = to_string(q.polynomial());
    const ProjPoint lperp = polar_point(q, ProjLine::at_infinity());
    r.center = lperp.to_string();
    if (lperp.is_affine()) {
        const ProjPoint a = lperp.canonical();
        if (sgn(eval_rat(c.f, std::vector<Rational>{a.c[1], a.c[2]})) == 0) {
            r.error = "L^perp " + a.to_string() +
                      " lies on the curve, so no reciprocal polar point of its component is counted; re-centre the "
                      "quadric with quadric_for_center";
            if (auto s = suggest_center(c.f)) r.suggestion = "--center " + pair_string(*s);
            r.exit_code = 1;
            return {r, Polynomial()};
        }
    }
    const Polynomial g = dehomogenize(reciprocal_polar(homogenize(c.f), q, ProjPoint(1, 0, 0)));
    r.polar = to_string(g);
    if (g.is_zero()) throw CommonComponentError("the reciprocal polar vanishes identically on this curve");
    SolutionSet w = solve_system(c.f, g, c.box);
    const auto& sing = c.singulars();
    for (const auto& s : sing) r.singular_points.push_back(record(s));
    exclude_singular(w, sing);
    const CoverageReport cov = verify_coverage(c.f, w, sing, c.cmap(), {PolarKind::Reciprocal, lperp});
    fill_components(r, c, &cov);
    return {r, g};
}

std::string kind_list(const std::vector<SingularityReport>& s) {
    std::string out;
    for (const auto& x : s) out += (out.empty() ? "" : ",") + to_string(x.kind);
    return out.empty() ? "none" : out;
}

void fact(Report& r, const std::string& name, const std::string& expected, const std::string& actual) {
    r.facts.push_back({name, expected, actual, expected == actual});
}

std::string verdicts(const Report& r) {
    std::string out;
    for (const auto& c : r.components) out += (out.empty() ? "" : ",") + (c.verdict.empty() ? "-" : c.verdict);
    return out;
}

std::string repeat(const std::string& s, int n) {
    std::string out;
    for (int i = 0; i < n; ++i) out += (i ? "," : "") + s;
    return out;
}

Report verify_entry(const CorpusEntry& e) {
    JobSpec spec;
    spec.corpus = e.id;
    Curve c = load(spec);
    Report r = base("verify", spec, &c);
    const ExpectedFacts& x = e.facts;
    const ComponentMap& m = c.cmap();
    fact(r, "components", std::to_string(x.components), std::to_string(m.components().size()));
    const bool compact = std::all_of(m.components().begin(), m.components().end(), [](auto& mc) { return mc.compact; });
    fact(r, "all components compact", x.all_compact ? "true" : "false", compact ? "true" : "false");
    fact(r, "stable under refinement", "true", c.is_stable() ? "true" : "false");
    const auto& sing = c.singulars();
    fact(r, "singular points", std::to_string(x.singular_points), std::to_string(sing.size()));
    if (x.singular_kind) fact(r, "singular kinds", repeat(to_string(*x.singular_kind), x.singular_points), kind_list(sing));
    if (x.polar || x.polar_incomplete) {
        Report p = run_polar(c, spec).report;
        if (x.polar) fact(r, "polar verdicts", repeat(to_string(*x.polar), x.components), verdicts(p));
        if (x.polar_incomplete) {
            const bool all = std::all_of(p.components.begin(), p.components.end(),
                                         [](auto& pc) { return pc.verdict == "Covered"; });
            fact(r, "polar covers every component", "false", all ? "true" : "false");
        }
    }
    if (x.origin_on_curve) {
        Report p = run_reciprocal(c, spec).report;
        fact(r, "reciprocal about the origin rejected", "true", p.exit_code == 1 && !p.error.empty() ? "true" : "false");
    }
    if (x.reciprocal) {
        JobSpec rs = spec;
        if (x.center) rs.center = *x.center;
        Report p = run_reciprocal(c, rs).report;
        fact(r, "reciprocal verdicts", repeat(to_string(*x.reciprocal), x.components), verdicts(p));
    }
    r.exit_code = std::all_of(r.facts.begin(), r.facts.end(), [](auto& f) { return f.ok; }) ? 0 : 2;
    return r;
}

}  // namespace

Box default_box(const Polynomial& f) {
    std::optional<Box> hull;
    for (int v : {1, 2}) {
        const Polynomial d = partial(f, v);
        if (d.is_zero() || d.is_constant()) continue;
        try {
            for (const auto& p : solve_system(f, d).points) {
                const Box& b = p.box();
                hull = hull ? Box{Interval(std::min(hull->x.lo, b.x.lo), std::max(hull->x.hi, b.x.hi)),
                                  Interval(std::min(hull->y.lo, b.y.lo), std::max(hull->y.hi, b.y.hi))}
                            : b;
            }
        } catch (const CommonComponentError&) {
        }
    }
    if (!hull) hull = Box{Interval(0, 0), Interval(0, 0)};
    return {Interval(Rational(floor_of(hull->x.lo) - 1), Rational(ceil_of(hull->x.hi) + 1)),
            Interval(Rational(floor_of(hull->y.lo) - 1), Rational(ceil_of(hull->y.hi) + 1))};
}

Report cmd_polar(const JobSpec& spec) {
    return guarded("polar", spec, [&] {
        Curve c = load(spec);
        return run_polar(c, spec).report;
    });
}

Report cmd_reciprocal(const JobSpec& spec) {
    return guarded("reciprocal", spec, [&] {
        Curve c = load(spec);
        return run_reciprocal(c, spec).report;
    });
}

Report cmd_singular(const JobSpec& spec) {
    return guarded("singular", spec, [&] {
        Curve c = load(spec);
        Report r = base("singular", spec, &c);
        for (const auto& s : c.singulars()) r.singular_points.push_back(record(s));
        return r;
    });
}

Report cmd_components(const JobSpec& spec) {
    return guarded("components", spec, [&] {
        Curve c = load(spec);
        Report r = base("components", spec, &c);
        fill_components(r, c, nullptr);
        return r;
    });
}

Report cmd_verify(const JobSpec& spec) {
    return guarded("verify", spec, [&] {
        if (!spec.corpus) throw std::invalid_argument("verify needs --corpus <id>|all");
        if (*spec.corpus != "all") return verify_entry(corpus_entry(*spec.corpus));
        Report r;
        r.command = "verify";
        r.corpus = "all";
        for (const auto& e : corpus()) {
            JobSpec one;
            one.corpus = e.id;
            r.entries.push_back(guarded("verify", one, [&] { return verify_entry(e); }));
            r.exit_code = std::max(r.exit_code, r.entries.back().exit_code);
        }
        return r;
    });
}

std::string cmd_render(const JobSpec& spec, Report* report) {
    Curve c = load(spec);
    std::string overlay = spec.overlay;
    if (overlay.empty()) overlay = spec.center || spec.quadric ? "reciprocal" : spec.direction ? "polar" : "none";
    if (overlay != "none" && overlay != "polar" && overlay != "reciprocal")
        throw std::invalid_argument("unknown overlay '" + overlay + "'");

    Report r = base("render", spec, &c);
    Polynomial g;
    if (overlay != "none") {
        PolarRun run = overlay == "polar" ? run_polar(c, spec) : run_reciprocal(c, spec);
        if (!run.report.error.empty()) throw std::runtime_error(run.report.error);
        r = run.report;
        r.command = "render";
        g = run.g;
    } else {
        for (const auto& s : c.singulars()) r.singular_points.push_back(record(s));
        fill_components(r, c, nullptr);
    }
    std::optional<ComponentMap> gm;
    std::vector<SvgLayer> layers{{&c.cmap(), "#1f77b4"}};
    if (!g.is_zero() && g.degree() > 0) {
        gm = component_map(g, c.box, c.resolution);
        layers.push_back({&*gm, "#ff7f0e"});
    }
    std::vector<PointRecord> marks;
    for (const auto& s : r.singular_points) marks.push_back(s.location);
    const std::string title = (spec.corpus ? *spec.corpus : r.curve) + (overlay == "none" ? "" : " with " + overlay + " curve");
    if (report) *report = r;
    return render_svg(layers, r.witnesses, marks, title);
}

}  // namespace polars
