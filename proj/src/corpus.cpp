#include "polars/corpus.hpp"

#include "polars/parse.hpp"

#include <stdexcept>

namespace polars {

namespace {

Box square(long x0, long x1, long y0, long y1) {
    return {Interval(Rational(x0), Rational(x1)), Interval(Rational(y0), Rational(y1))};
}

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> c;
    {
        CorpusEntry e{"ex1",
                      "X1^6+3*X1^4*X2^2-12*X1^4*X2+7*X1^4+3*X1^2*X2^4-24*X1^2*X2^3+66*X1^2*X2^2-132*X1^2*X2+136*X1^2+"
                      "X2^6-12*X2^5+59*X2^4-132*X2^3+84*X2^2+144*X2-143",
                      "smooth sextic with three compact ovals", square(-5, 5, -5, 5), 512, {}};
        e.facts.components = 3;
        e.facts.polar = Verdict::Covered;
        e.facts.reciprocal = Verdict::Covered;
        c.push_back(e);
    }
    {
        CorpusEntry e{"ex2", "((X1+2)*X2-(X1+2)^6-X2^6)*(X1*X2-X1^6-X2^6)+1/100*X2^6",
                      "two compact components, one ordinary double point on each", square(-4, 2, -2, 2), 512, {}};
        e.facts.components = 2;
        e.facts.singular_points = 2;
        e.facts.singular_kind = SingularKind::OrdinaryRealMultiple;
        e.facts.polar = Verdict::Covered;
        c.push_back(e);
    }
    {
        CorpusEntry e{"ex3", "144-24*X2^2-88*X1^2+X2^4-X1^6+17*X1^4-14*X2^2*X1^2+1/100*X2^6",
                      "two non-compact components, one ordinary double point on each", square(-6, 6, -6, 6), 512, {}};
        e.facts.components = 2;
        e.facts.all_compact = false;
        e.facts.singular_points = 2;
        e.facts.singular_kind = SingularKind::OrdinaryRealMultiple;
        e.facts.reciprocal = Verdict::Covered;
        c.push_back(e);
    }
    {
        CorpusEntry e{"ex4", "X1^2-X2*(X2+1)*(X2+2)",
                      "cubic through the origin: an oval and an unbounded branch", square(-4, 4, -4, 4), 512, {}};
        e.facts.components = 2;
        e.facts.all_compact = false;
        e.facts.reciprocal = Verdict::Covered;
        e.facts.origin_on_curve = true;
        e.facts.center = std::pair<Rational, Rational>(1, 0);
        c.push_back(e);
    }
    {
        CorpusEntry e{"ex5", "((X1-4)^2+(X2-2)^2-1)^2+1/100*((X1-7/2)*(X1-9/2))^3",
                      "four cusps; the reciprocal polar meets the real curve only there", square(2, 6, 0, 4), 512, {}};
        e.facts.components = 2;
        e.facts.singular_points = 4;
        e.facts.singular_kind = SingularKind::Cusp;
        e.facts.reciprocal = Verdict::OnlySingularWitnesses;
        c.push_back(e);
    }
    {
        CorpusEntry e{"counterexample-h",
                      "((X1^2+X2^2-1)*((X1-4)^2+(X2-2)^2-1))^2+1/100*((X2-1/2)*(X2+1/2)*(X1-7/2)*(X1-9/2))^3",
                      "four compact components with two cusps each; no direction covers all four",
                      square(-3, 7, -3, 7), 1024, {}};
        e.facts.components = 4;
        e.facts.singular_points = 8;
        e.facts.singular_kind = SingularKind::Cusp;
        e.facts.polar_incomplete = true;
        c.push_back(e);
    }
    {
        CorpusEntry e{"circles-f", "(X1^2+X2^2-1)*((X1-4)^2+(X2-2)^2-1)", "two disjoint circles", square(-3, 7, -3, 7),
                      512, {}};
        e.facts.components = 2;
        e.facts.polar = Verdict::Covered;
        // the unit circle is centred at the origin, so recentre
        e.facts.reciprocal = Verdict::Covered;
        e.facts.center = std::pair<Rational, Rational>(2, 0);
        c.push_back(e);
    }
    {
        CorpusEntry e{"lines-g", "(X2-1/2)*(X2+1/2)*(X1-7/2)*(X1-9/2)", "four lines crossing in four nodes",
                      square(2, 6, -2, 2), 512, {}};
        e.facts.components = 1;
        e.facts.all_compact = false;
        e.facts.singular_points = 4;
        e.facts.singular_kind = SingularKind::OrdinaryRealMultiple;
        c.push_back(e);
    }
    return c;
}

}  // namespace

Polynomial CorpusEntry::polynomial() const { return parse(text); }

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = build();
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& id) {
    for (const auto& e : corpus())
        if (e.id == id) return e;
    throw std::invalid_argument("unknown corpus id '" + id + "'");
}

}  // namespace polars
