#pragma once

// Built-in example curves with the facts the tool is expected to reproduce for them.

#include "polars/polynomial.hpp"
#include "polars/singular.hpp"
#include "polars/solve.hpp"
#include "polars/topology.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace polars {

struct ExpectedFacts {
    int components = 0;
    bool all_compact = true;
    int singular_points = 0;
    std::optional<SingularKind> singular_kind;  // shared by every singular point
    std::optional<Verdict> polar;               // on every component, default direction
    bool polar_incomplete = false;              // some component is not Covered
    std::optional<Verdict> reciprocal;          // on every component, with `center` if set
    bool origin_on_curve = false;               // reciprocal about the origin is rejected
    std::optional<std::pair<Rational, Rational>> center;
};

struct CorpusEntry {
    std::string id;
    std::string text;
    std::string note;
    Box box;
    int resolution = 512;
    ExpectedFacts facts;

    Polynomial polynomial() const;
};

const std::vector<CorpusEntry>& corpus();
/// Throws std::invalid_argument for an unknown id.
const CorpusEntry& corpus_entry(const std::string& id);

}  // namespace polars
