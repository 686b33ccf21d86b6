#include <doctest.h>

#include "polars/corpus.hpp"
#include "polars/parse.hpp"
#include "polars/topology.hpp"

#include <cmath>
#include <numbers>
#include <random>

using namespace polars;

namespace {

Polynomial P(const char* s) { return parse(s); }

Box square(long lo, long hi) { return {Interval(Rational(lo), Rational(hi)), Interval(Rational(lo), Rational(hi))}; }

CertifiedPoint single(const Polynomial& f, const Polynomial& g) {
    auto s = solve_system(f, g);
    REQUIRE(s.points.size() == 1);
    return s.points[0];
}

std::pair<double, double> centroid(const ComponentMap& m, int id) {
    double sx = 0, sy = 0;
    auto cells = m.cells_of(id);
    for (auto [i, j] : cells) {
        auto c = m.cell_box(i, j).center();
        sx += c.first.get_d();
        sy += c.second.get_d();
    }
    return {sx / cells.size(), sy / cells.size()};
}

}  // namespace

TEST_CASE("unit circle map and assignment") {
    Polynomial c = P("X1^2+X2^2-1");
    ComponentMap m = component_map(c, square(-2, 2), 128);
    REQUIRE(m.components().size() == 1);
    CHECK(m.components()[0].compact);
    auto s = solve_system(c, P("2*X2"));
    REQUIRE(s.points.size() == 2);
    for (const auto& p : s.points) CHECK(assign(p, m) == 0);

    CHECK_THROWS_AS(component_map(c, square(-2, 2), 100), std::invalid_argument);
    try {
        assign(single(P("X1"), P("X2")), m);
        FAIL("origin is not on the circle");
    } catch (const AssignmentError& e) {
        CHECK(e.kind == AssignmentError::Kind::NotOnCurve);
    }
    CHECK_THROWS_AS(assign(single(P("X1-10"), P("X2")), m), AssignmentError);
}

TEST_CASE("curve points lie in carrying cells") {
    // rational points ((1-t^2)/(1+t^2), 2t/(1+t^2)) on a scaled, shifted circle
    Polynomial c = P("(X1-1/3)^2+(X2+1/5)^2-4");
    ComponentMap m = component_map(c, square(-3, 3), 256);
    std::mt19937 rng(3);
    int checked = 0;
    for (int k = 0; k < 300; ++k) {
        const Rational t = make_rational(static_cast<long>(rng() % 2001) - 1000, 1 + rng() % 97);
        const Rational x = Rational(1, 3) * 1 + 2 * (1 - t * t) / (1 + t * t);
        const Rational y = Rational(-1, 5) + 4 * t / (1 + t * t);
        REQUIRE(eval_rat(c, std::vector<Rational>{x, y}) == 0);
        bool found = false;
        for (int i = 0; i < m.resolution() && !found; ++i)
            for (int j = 0; j < m.resolution() && !found; ++j)
                if (m.carrying(i, j) && m.cell_box(i, j).x.contains(x) && m.cell_box(i, j).y.contains(y)) found = true;
        CHECK(found);
        ++checked;
    }
    CHECK(checked == 300);
}

TEST_CASE("corpus component counts are stable under refinement") {
    for (const auto& e : corpus()) {
        CAPTURE(e.id);
        Polynomial f = e.polynomial();
        ComponentMap a = component_map(f, e.box, e.resolution);
        ComponentMap b = component_map(f, e.box, 2 * e.resolution);
        CHECK(a.components().size() == static_cast<std::size_t>(e.facts.components));
        CHECK(b.components().size() == a.components().size());
        bool all_compact = true;
        for (const auto& c : a.components()) all_compact = all_compact && c.compact;
        CHECK(all_compact == e.facts.all_compact);
        // the cover at 2R lies inside the cover at R and has strictly smaller area
        CHECK(b.carrying_cells() < 4 * a.carrying_cells());
        for (int i = 0; i < b.resolution(); ++i)
            for (int j = 0; j < b.resolution(); ++j)
                if (b.carrying(i, j)) REQUIRE(a.carrying(i / 2, j / 2));
    }
}

TEST_CASE("ex1 classical polar covers every component") {
    const auto& e = corpus_entry("ex1");
    Polynomial f = e.polynomial();
    ComponentMap m = component_map(f, e.box, e.resolution);
    SolutionSet w = solve_system(f, partial(f, 2));
    exclude_singular(w, {});
    CoverageReport r = verify_coverage(f, w, {}, m, {PolarKind::Classical, std::nullopt});
    REQUIRE(r.components.size() == 3);
    for (const auto& c : r.components) {
        CHECK(c.verdict == Verdict::Covered);
        CHECK(c.witnesses.size() == 2);
    }
    CHECK(r.all_covered());
    CHECK(r.hypotheses_met());
}

TEST_CASE("verdicts distinguish singular witnesses") {
    // nodal cubic: the loop's only horizontal-tangent polar point besides smooth ones
    Polynomial f = P("X2^2-X1^2*(X1+1)");
    ComponentMap m = component_map(f, square(-2, 2), 256);
    REQUIRE(m.components().size() == 1);
    auto sing = classify_all(f);
    REQUIRE(sing.size() == 1);
    CHECK(sing[0].kind == SingularKind::OrdinaryRealMultiple);

    // polar direction (1:0): fx = 0 holds at the node and at the loop's leftmost point
    SolutionSet w = solve_system(f, partial(f, 1));
    const std::size_t total = w.points.size();
    exclude_singular(w, sing);
    CHECK(w.excluded.size() == 1);
    CHECK(w.points.size() + 1 == total);
    CoverageReport r = verify_coverage(f, w, sing, m, {PolarKind::Classical, std::nullopt});
    CHECK(r.components[0].verdict == Verdict::Covered);

    // only the singular witness left
    SolutionSet only;
    only.excluded = w.excluded;
    r = verify_coverage(f, only, sing, m, {PolarKind::Classical, std::nullopt});
    CHECK(r.components[0].verdict == Verdict::OnlySingularWitnesses);
    r = verify_coverage(f, SolutionSet{}, sing, m, {PolarKind::Classical, std::nullopt});
    CHECK(r.components[0].verdict == Verdict::Uncovered);
    CHECK_FALSE(r.hypotheses_met());  // unbounded branch reaches the box edge
}

TEST_CASE("reciprocal checklist rejects a centre on the curve") {
    Polynomial f = P("X1^2-X2*(X2+1)*(X2+2)");
    ComponentMap m = component_map(f, square(-4, 4), 256);
    CoverageReport r = verify_coverage(f, SolutionSet{}, {}, m, {PolarKind::Reciprocal, ProjPoint(1, 0, 0)});
    bool seen = false;
    for (const auto& c : r.checklist)
        if (c.name == "L^perp not on the curve") {
            seen = true;
            CHECK(c.status == CheckStatus::Fails);
        }
    CHECK(seen);
    r = verify_coverage(f, SolutionSet{}, {}, m, {PolarKind::Reciprocal, ProjPoint(1, 1, 0)});
    for (const auto& c : r.checklist)
        if (c.name == "L^perp not on the curve") CHECK(c.status == CheckStatus::Holds);
}

TEST_CASE("gauss sectors") {
    Polynomial c = P("X1^2+X2^2-1");
    ComponentMap m = component_map(c, square(-2, 2), 256);
    auto arcs = gauss_sector_scan(c, m, 0, 400);
    REQUIRE(arcs.size() == 1);
    CHECK(arcs[0].lo == 0);
    CHECK(arcs[0].hi == doctest::Approx(std::numbers::pi));

    const auto& e = corpus_entry("counterexample-h");
    Polynomial h = e.polynomial();
    ComponentMap mh = component_map(h, e.box, e.resolution);
    REQUIRE(mh.components().size() == 4);
    const double deg = std::numbers::pi / 180;
    const AngleArc lower{150 * deg, 30 * deg}, upper{60 * deg, 120 * deg};
    for (const auto& comp : mh.components()) {
        const bool is_lower = centroid(mh, comp.id).second < 1;
        const AngleArc& sector = is_lower ? lower : upper;
        auto got = gauss_sector_scan(h, mh, comp.id, 300);
        REQUIRE_FALSE(got.empty());
        for (const auto& a : got) {
            CHECK(sector.contains(a.lo, 0.03));
            CHECK(sector.contains(a.hi, 0.03));
        }
        bool through = false;  // sector contains (1:0) resp. (0:1)
        for (const auto& a : got) through = through || a.contains(is_lower ? 0.0 : 90 * deg, 0.03);
        CHECK(through);
    }
}

TEST_CASE("a few directions on h never cover all four components") {
    const auto& e = corpus_entry("counterexample-h");
    Polynomial h = e.polynomial();
    ComponentMap m = component_map(h, e.box, e.resolution);
    auto sing = classify_all(h);
    REQUIRE(sing.size() == 8);
    for (auto [a, b] : {std::pair{0, 1}, std::pair{1, 0}, std::pair{1, 1}, std::pair{3, -2}, std::pair{-1, 8}}) {
        CAPTURE(a);
        CAPTURE(b);
        SolutionSet w = solve_system(h, Rational(a) * partial(h, 1) + Rational(b) * partial(h, 2));
        exclude_singular(w, sing);
        CoverageReport r = verify_coverage(h, w, sing, m, {PolarKind::Classical, std::nullopt});
        CHECK(r.count(Verdict::Covered) < 4);
        // whatever is covered lies on one side: both lower or both upper components
        int lower = 0, upper = 0;
        for (const auto& c : r.components)
            if (c.verdict == Verdict::Covered) (centroid(m, c.id).second < 1 ? lower : upper)++;
        CHECK((lower == 0 || upper == 0));
    }
}
