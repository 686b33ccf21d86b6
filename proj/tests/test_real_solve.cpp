#include <doctest.h>

#include "polars/elim.hpp"
#include "polars/parse.hpp"
#include "polars/solve.hpp"

#include <chrono>
#include <cmath>
#include <random>

using namespace polars;

namespace {

Polynomial P(const char* s) { return parse(s); }

const char* kF1 =
    "X1^6+3*X1^4*X2^2-12*X1^4*X2+7*X1^4+3*X1^2*X2^4-24*X1^2*X2^3+66*X1^2*X2^2-132*X1^2*X2+136*X1^2+X2^6-12*X2^5+"
    "59*X2^4-132*X2^3+84*X2^2+144*X2-143";

bool holds(const CertifiedPoint& p, double x, double y, double tol = 1e-9) {
    const Box& b = p.box();
    return b.x.lo.get_d() - tol <= x && x <= b.x.hi.get_d() + tol && b.y.lo.get_d() - tol <= y && y <= b.y.hi.get_d() + tol;
}

Interval eval_box(const Polynomial& p, const Box& b) { return eval_interval(p, std::vector<Interval>{b.x, b.y}); }

}  // namespace

TEST_CASE("univariate squarefree and isolation") {
    CHECK(squarefree(P("(X1-1)^2*(X1+2)")) == P("X1^2+X1-2"));
    CHECK(squarefree(P("2*X1^2-2")) == P("X1^2-1"));
    auto r = isolate_roots(P("X1^2-1"));
    REQUIRE(r.size() == 2);
    CHECK(r[0].interval.contains(Rational(-1)));
    CHECK(r[1].interval.contains(Rational(1)));
    CHECK(isolate_roots(P("X1^2+1")).empty());
    CHECK_THROWS(isolate_roots(Polynomial()));
}

TEST_CASE("isolation with an extra rational root") {
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> c(-20, 20);
    for (int t = 0; t < 40; ++t) {
        Polynomial p = P("X1^5") + Rational(c(rng)) * P("X1^3") + Rational(c(rng)) * P("X1") + Polynomial::constant(c(rng));
        const Rational root = make_rational(c(rng), 1 + rng() % 7);
        auto before = isolate_roots(p);
        bool already = false;
        for (auto& iv : before)
            if (iv.interval.contains(root) && eval_rat(p, std::vector<Rational>{root, Rational(0)}) == 0) already = true;
        auto after = isolate_roots(p * (P("X1") - Polynomial::constant(root)));
        CHECK(after.size() == before.size() + (already ? 0 : 1));
        int containing = 0;
        for (auto& iv : after) containing += iv.interval.contains(root);
        CHECK(containing == 1);
    }
}

TEST_CASE("f1 resultant has six real roots") {
    Polynomial f1 = P(kF1);
    Polynomial r = resultant(f1, partial(f1, 2), 2);
    CHECK(r.degree() <= 30);
    auto roots = isolate_roots(r);
    CHECK(roots.size() == 6);
    // oracle: sign scan of the square-free resultant on a fine grid
    Polynomial sq = squarefree(r);
    int changes = 0;
    Rational prev = eval_rat(sq, std::vector<Rational>{Rational(-6), Rational(0)});
    for (int i = -5999; i <= 6000; ++i) {
        Rational x = make_rational(i, 1000);
        Rational v = eval_rat(sq, std::vector<Rational>{x, Rational(0)});
        if (sgn(v) * sgn(prev) < 0 || sgn(v) == 0) ++changes;
        if (sgn(v) != 0) prev = v;
    }
    CHECK(changes == 6);
}

TEST_CASE("circle and line") {
    auto s = solve_system(P("X1^2+X2^2-1"), P("2*X2"));
    REQUIRE(s.points.size() == 2);
    CHECK(holds(s.points[0], -1, 0));
    CHECK(holds(s.points[1], 1, 0));
}

TEST_CASE("common component") {
    // centred circle and its distance minor, which vanishes identically
    CHECK_THROWS_AS(solve_system(P("X1^2+X2^2-1"), P("(X1^2+X2^2-1)*(X1-3)")), CommonComponentError);
    CHECK_THROWS_AS(solve_system(P("X1*X2-1"), P("2*X1*X2-2")), CommonComponentError);
}

TEST_CASE("example 1 polar points") {
    Polynomial f1 = P(kF1);
    auto s = solve_system(f1, partial(f1, 2));
    REQUIRE(s.points.size() == 6);
    for (auto& p : s.points) {
        CertifiedPoint q = refine(p, Rational(1, 1000000));
        CHECK(q.box().width() <= Rational(1, 1000000));
        CHECK(eval_box(f1, q.box()).contains_zero());
        CHECK(eval_box(partial(f1, 2), q.box()).contains_zero());
        CHECK(p.multiplicity_hint() == 1);
        // idempotent
        CHECK(refine(q, Rational(1, 1000000)).box() == q.box());
    }
}

TEST_CASE("refine to small width") {
    auto s = solve_system(P("X1^2+X2^2-1"), P("X2"));
    CertifiedPoint q = refine(s.points[1], Rational(1, 1024));
    CHECK(q.box().width() <= Rational(1, 1024));
    CHECK(q.box().x.contains(Rational(1)));
}

TEST_CASE("tangency multiplicity and sheared systems") {
    // parabola tangent to a line: double root
    auto s = solve_system(P("X2-X1^2"), P("X2"));
    REQUIRE(s.points.size() == 1);
    CHECK(s.points[0].multiplicity_hint() == 2);
    // vertical line needs a shear
    auto t = solve_system(P("X1-1/3"), P("X1^2+X2^2-4"));
    REQUIRE(t.points.size() == 2);
    CHECK(holds(t.points[0], 1.0 / 3, -std::sqrt(4 - 1.0 / 9), 1e-6));
    // two points sharing an X1 coordinate
    auto u = solve_system(P("X1^2+X2^2-2"), P("X1-1"));
    REQUIRE(u.points.size() == 2);
    // box restriction
    Box b{Interval(Rational(0), Rational(2)), Interval(Rational(0), Rational(2))};
    CHECK(solve_system(P("X1^2+X2^2-2"), P("X1-1"), b).points.size() == 1);
}

TEST_CASE("singular points") {
    CHECK(singular_points(P("X1^2+X2^2-1")).points.empty());
    auto node = singular_points(P("X1*X2"));
    REQUIRE(node.points.size() == 1);
    CHECK(holds(node.points[0], 0, 0));
    CHECK_THROWS_AS(singular_points(P("(X1-X2)^2*(X1+1)")), std::invalid_argument);
    CHECK(is_squarefree(P("X1*X2*(X1-X2)")));
    CHECK_FALSE(is_squarefree(P("(X1^2+X2^2-1)^2")));
}

TEST_CASE("example 5 singular points") {
    Polynomial f5 = P("((X1-4)^2+(X2-2)^2-1)^2+1/100*((X1-7/2)*(X1-9/2))^3");
    auto s = singular_points(f5);
    REQUIRE(s.points.size() == 4);
    const double h = std::sqrt(3.0) / 2;
    const double xs[] = {3.5, 3.5, 4.5, 4.5}, ys[] = {2 - h, 2 + h, 2 - h, 2 + h};
    for (int i = 0; i < 4; ++i) {
        bool found = false;
        for (auto& p : s.points) found |= holds(refine(p, Rational(1, 1000000)), xs[i], ys[i], 1e-7);
        CHECK(found);
    }
}

TEST_CASE("Bezout and box validity on random systems") {
    std::mt19937 rng(23);
    std::uniform_int_distribution<int> c(-4, 4);
    for (int t = 0; t < 25; ++t) {
        Polynomial f(2), g(2);
        const int d = 1 + t % 4, e = 1 + (t / 4) % 4;
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j) f.add_term(Monomial{{0, unsigned(i), unsigned(j)}}, Rational(c(rng)));
        for (int i = 0; i <= e; ++i)
            for (int j = 0; i + j <= e; ++j) g.add_term(Monomial{{0, unsigned(i), unsigned(j)}}, Rational(c(rng)));
        if (f.degree() < 1 || g.degree() < 1) continue;
        SolutionSet s;
        try {
            s = solve_system(f, g);
        } catch (const CommonComponentError&) {
            continue;
        }
        int mult = 0;
        for (auto& p : s.points) {
            mult += p.multiplicity_hint();
            CHECK(eval_box(f, p.box()).contains_zero());
            CHECK(eval_box(g, p.box()).contains_zero());
        }
        CHECK(static_cast<int>(s.points.size()) <= f.degree() * g.degree());
        CHECK(mult <= f.degree() * g.degree());
        std::vector<CertifiedPoint> fine;
        for (auto& p : s.points) fine.push_back(refine(p, Rational(1, 1 << 20)));
        for (std::size_t i = 0; i < fine.size(); ++i)
            for (std::size_t j = i + 1; j < fine.size(); ++j) CHECK_FALSE(fine[i].box().intersects(fine[j].box()));
    }
}
