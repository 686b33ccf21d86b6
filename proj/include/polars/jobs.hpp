#pragma once

// The tool's commands as library calls: each turns a JobSpec into a Report.

#include "polars/corpus.hpp"
#include "polars/projective.hpp"
#include "polars/report.hpp"

#include <optional>
#include <string>
#include <utility>

namespace polars {

using RationalPair = std::pair<Rational, Rational>;

struct JobSpec {
    std::optional<std::string> curve;   // polynomial text
    std::optional<std::string> corpus;  // corpus id ("all" for verify)
    std::optional<RationalPair> direction;  // flag point (0 : a : b); default (0 : 0 : 1)
    std::optional<RationalPair> center;     // reciprocal: quadric_for_center
    std::optional<std::string> quadric;     // "standard" or a quadratic form
    std::optional<Box> box;
    std::optional<int> resolution;
    std::string overlay;  // render: "", "polar" or "reciprocal"
};

/// Bounding box of the real solutions of (f, fx) and (f, fy), padded by 1.
Box default_box(const Polynomial& f);

Report cmd_polar(const JobSpec& spec);
Report cmd_reciprocal(const JobSpec& spec);
Report cmd_singular(const JobSpec& spec);
Report cmd_components(const JobSpec& spec);
/// Checks the expected facts of one corpus entry, or of all with corpus "all".
Report cmd_verify(const JobSpec& spec);
/// SVG of the curve cover, the requested polar overlay and the witness points.
std::string cmd_render(const JobSpec& spec, Report* report = nullptr);

}  // namespace polars
