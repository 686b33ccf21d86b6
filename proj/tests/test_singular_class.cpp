#include <doctest.h>

#include "polars/parse.hpp"
#include "polars/singular.hpp"

#include <cmath>

using namespace polars;

namespace {

Polynomial P(const char* s) { return parse(s); }

const char* kH =
    "((X1^2+X2^2-1)*((X1-4)^2+(X2-2)^2-1))^2+1/100*((X2-1/2)*(X2+1/2)*(X1-7/2)*(X1-9/2))^3";

SingularityReport only(const Polynomial& f) {
    auto all = classify_all(f);
    REQUIRE(all.size() == 1);
    return all.front();
}

}  // namespace

TEST_CASE("rational tangent cones") {
    CHECK(tangent_cone(P("X1*X2"), Rational(0), Rational(0)) == P("X1*X2"));
    CHECK(tangent_cone(P("X2^2-X1^3"), Rational(0), Rational(0)) == P("X2^2"));
    CHECK(tangent_cone(P("(X1-1)*(X2-2)"), Rational(1), Rational(2)) == P("X1*X2"));
    CHECK_THROWS_AS(tangent_cone(P("X1^2+X2^2-1"), Rational(1), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(tangent_cone(P("X1*X2"), Rational(1), Rational(1)), std::invalid_argument);
}

TEST_CASE("surd arithmetic") {
    QuadSurd r3(Rational(0), Rational(1), 3);
    CHECK((r3 * r3) == QuadSurd(Rational(3)));
    CHECK(r3.to_string() == "sqrt(3)");
    CHECK((r3 / QuadSurd(Rational(2))).to_string() == "sqrt(3)/2");
    CHECK(surd_sqrt(Rational(12)).to_string() == "2*sqrt(3)");
    CHECK(surd_sqrt(Rational(3, 4)).to_string() == "sqrt(3)/2");
    CHECK((QuadSurd(Rational(1)) - r3).sign() < 0);
    CHECK_THROWS(r3 + QuadSurd(Rational(0), Rational(1), 5));
    CHECK(Direction::normalized(r3, QuadSurd(Rational(1))).to_string() == "(3 : sqrt(3))");
    CHECK(Direction::normalized(QuadSurd(Rational(-3)), r3).line() == "V(3*X1-sqrt(3)*X2)");
}

TEST_CASE("node, cusp, tacnode, acnode") {
    auto node = only(P("X1*X2"));
    CHECK(node.kind == SingularKind::OrdinaryRealMultiple);
    CHECK(node.multiplicity == 2);
    CHECK(node.factors.size() == 2);

    auto cusp = only(P("X2^2-X1^3"));
    CHECK(cusp.kind == SingularKind::Cusp);
    REQUIRE(cusp.factors.size() == 1);
    CHECK(cusp.factors[0].multiplicity == 2);
    CHECK(cusp.factors[0].line->to_string() == "(0 : 1)");

    auto tac = only(P("(X2-X1^2)*(X2+X1^2)"));
    CHECK(tac.kind == SingularKind::NonOrdinary);
    CHECK(tac.real_branches == 2);

    auto acnode = only(P("X1^2+X2^2-X1^3"));
    CHECK(acnode.kind == SingularKind::NonOrdinary);
    CHECK(acnode.real_branches == 0);
    CHECK(acnode.complex_pairs == 1);
}

TEST_CASE("triple points") {
    auto t = only(P("X1*X2*(X1-X2)"));
    CHECK(t.kind == SingularKind::OrdinaryRealMultiple);
    CHECK(t.multiplicity == 3);
    CHECK(t.real_branches == 3);
    // one real tangent and a conjugate pair: not ordinary real
    auto u = only(P("X1*(X1^2+X2^2)+X1^4+X2^4"));
    CHECK(u.multiplicity == 3);
    CHECK(u.complex_pairs == 1);
    CHECK(u.kind == SingularKind::NonOrdinary);
}

TEST_CASE("transversal intersection of smooth curves is a node") {
    auto all = classify_all(P("(X1^2+X2^2-2)*(X2-1)"));
    for (auto& s : all) CHECK(s.kind == SingularKind::OrdinaryRealMultiple);
}

TEST_CASE("translation invariance") {
    Polynomial f = P("X2^2-X1^2*(X1+1)");
    Polynomial g = translate(f, Rational(-3), Rational(5, 2));  // g(X) = f(X - c)
    auto a = only(f), b = only(g);
    CHECK(a.kind == b.kind);
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) CHECK(*a.factors[i].line == *b.factors[i].line);
    CHECK(b.exact->x == QuadSurd(Rational(3)));
}

TEST_CASE("gauss direction") {
    ExactPoint p{QuadSurd(Rational(1)), QuadSurd(Rational(0))};
    CHECK(gauss_direction(P("X1^2+X2^2-1"), p).to_string() == "(1 : 0)");
    ExactPoint q{QuadSurd(Rational(1)), QuadSurd(Rational(1))};
    CHECK(gauss_direction(P("X2-X1^2"), q) == Direction::normalized(QuadSurd(Rational(-2)), QuadSurd(Rational(1))));
    CHECK_THROWS(gauss_direction(P("X1*X2"), ExactPoint{QuadSurd(Rational(0)), QuadSurd(Rational(0))}));
}

TEST_CASE("counterexample cusps") {
    Polynomial h = P(kH);
    auto all = classify_all(h);
    REQUIRE(all.size() == 8);
    const QuadSurd r3(Rational(0), Rational(1), 3);
    int near_origin = 0;
    for (auto& s : all) {
        CHECK(s.kind == SingularKind::Cusp);
        REQUIRE(s.exact);
        REQUIRE(s.factors.size() == 1);
        if (s.exact->x.to_double() < 2) {
            ++near_origin;
            // tangent at (x, y) on the unit circle is normal to (x, y): x*u + y*v
            CHECK(*s.factors[0].line == Direction::normalized(s.exact->x, s.exact->y));
        }
    }
    CHECK(near_origin == 4);
}
