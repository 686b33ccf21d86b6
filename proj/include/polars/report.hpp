#pragma once

// Structured job report and its JSON form. Exact quantities (box endpoints, polynomials,
// surds) are strings; decimals are display values rounded to 12 significant digits.

#include "polars/solve.hpp"

#include <optional>
#include <string>
#include <vector>

namespace polars {

struct PointRecord {
    Box box;
    double x = 0, y = 0;
    int multiplicity_hint = 1;
    bool singular = false;
    int component = -1;
    std::string reason;  // exclusion or assignment note

    friend bool operator==(const PointRecord&, const PointRecord&) = default;
};

struct SingularRecord {
    PointRecord location;
    std::optional<std::string> exact_x, exact_y;
    int multiplicity = 2;
    std::string kind;
    int real_branches = -1;
    std::vector<std::string> tangents;  // "(3 : -sqrt(3))"
    std::vector<int> tangent_multiplicities;
    int complex_pairs = 0;

    friend bool operator==(const SingularRecord&, const SingularRecord&) = default;
};

struct ComponentRecord {
    int id = 0;
    bool compact = true;
    std::size_t cells = 0;
    std::string verdict;  // empty when no coverage was computed
    std::vector<int> witnesses;
    std::vector<int> singular_points;

    friend bool operator==(const ComponentRecord&, const ComponentRecord&) = default;
};

struct CheckRecord {
    std::string name;
    std::string status;
    bool required = true;
    std::string detail;

    friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct FactRecord {
    std::string name;
    std::string expected;
    std::string actual;
    bool ok = false;

    friend bool operator==(const FactRecord&, const FactRecord&) = default;
};

struct Report {
    std::string command;
    std::string corpus;  // empty for --curve input
    std::string curve;
    int degree = 0;
    std::string flag_point;  // classical polar
    std::string quadric;     // reciprocal polar
    std::string center;      // L^perp
    std::string polar;       // generator of the polar curve, affine
    std::optional<Box> box;
    int resolution = 0;
    std::optional<bool> stable;  // same component count at twice the resolution

    std::vector<PointRecord> witnesses;
    std::vector<PointRecord> excluded;
    std::vector<SingularRecord> singular_points;
    std::vector<ComponentRecord> components;
    std::vector<CheckRecord> checklist;
    std::vector<FactRecord> facts;
    std::vector<Report> entries;  // verify over several corpus entries

    std::string error;
    std::string suggestion;
    int exit_code = 0;

    friend bool operator==(const Report&, const Report&) = default;
};

std::string serialize(const Report& r);
/// Throws std::invalid_argument on malformed input.
Report parse_report(const std::string& text);

/// Rounds to 12 significant digits.
double display_decimal(double v);

}  // namespace polars
