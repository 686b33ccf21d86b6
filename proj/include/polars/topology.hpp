#pragma once

// Connected components of a real affine curve inside a box, by interval subdivision,
// and per-component coverage of the curve by points of a polar variety.
//
// Cells are tested with outward-rounded double intervals, so every curve point in the
// box lies in a carrying cell. Component counts are only claimed stable under one
// refinement: an interval cover can merge ovals that pass close to each other.

#include "polars/polynomial.hpp"
#include "polars/projective.hpp"
#include "polars/singular.hpp"
#include "polars/solve.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polars {

struct MapComponent {
    int id = 0;
    std::size_t cells = 0;
    bool compact = true;  // false when the component reaches the box boundary
};

class ComponentMap {
public:
    const Box& box() const { return box_; }
    int resolution() const { return res_; }
    const std::vector<MapComponent>& components() const { return components_; }

    /// Component id of cell (i, j) (column i along X1, row j along X2), -1 if empty.
    int label(int i, int j) const { return labels_[static_cast<std::size_t>(j) * res_ + i]; }
    bool carrying(int i, int j) const { return label(i, j) >= 0; }
    Box cell_box(int i, int j) const;
    std::size_t carrying_cells() const;
    /// Cell indices (i, j) of a component in row-major order.
    std::vector<std::pair<int, int>> cells_of(int id) const;

private:
    friend ComponentMap component_map(const Polynomial&, const Box&, int);

    Box box_;
    int res_ = 0;
    std::vector<int> labels_;
    std::vector<MapComponent> components_;
};

/// resolution must be a power of two. Throws std::invalid_argument otherwise.
ComponentMap component_map(const Polynomial& f, const Box& box, int resolution);

class AssignmentError : public std::runtime_error {
public:
    enum class Kind { NotOnCurve, Ambiguous };
    AssignmentError(Kind k, const std::string& what) : std::runtime_error(what), kind(k) {}
    Kind kind;
};

/// Component holding a point of the curve. The point is refined below the cell size,
/// and further down to 2^-30 while its box straddles two components.
int assign(const CertifiedPoint& point, const ComponentMap& map);

enum class Verdict { Covered, OnlySingularWitnesses, Uncovered };
std::string to_string(Verdict v);

enum class PolarKind { Classical, Reciprocal };

enum class CheckStatus { Holds, Fails, Unknown };
std::string to_string(CheckStatus s);

struct HypothesisCheck {
    std::string name;
    CheckStatus status = CheckStatus::Unknown;
    bool required = true;  // informational lines do not gate the exit status
    std::string detail;
};

struct Witness {
    CertifiedPoint point;
    bool singular = false;
    int component = -1;  // -1 when assignment failed
    std::string note;
};

struct ComponentCoverage {
    int id = 0;
    bool compact = true;
    std::vector<std::size_t> witnesses;  // indices into CoverageReport::witnesses
    std::vector<std::size_t> singulars;  // indices into the singular reports
    Verdict verdict = Verdict::Uncovered;
};

struct CoverageReport {
    std::vector<Witness> witnesses;
    std::vector<ComponentCoverage> components;
    std::vector<HypothesisCheck> checklist;

    bool hypotheses_met() const;
    bool all_covered() const;
    std::size_t count(Verdict v) const;
};

struct CoverageContext {
    PolarKind kind = PolarKind::Classical;
    std::optional<ProjPoint> center;  // L^perp, reciprocal only
};

/// Moves the points of `s` that are singular points of f into s.excluded with the reason
/// "singular point". The singular points must solve the same system as s.
void exclude_singular(SolutionSet& s, const std::vector<SingularityReport>& singulars);

/// Per-component verdicts. `witnesses.points` are the nonsingular polar points; entries of
/// `witnesses.excluded` with reason "singular point" count as singular witnesses.
CoverageReport verify_coverage(const Polynomial& f, const SolutionSet& witnesses,
                               const std::vector<SingularityReport>& singulars, const ComponentMap& map,
                               const CoverageContext& ctx);

/// Closed arc [lo, hi] of directions on the projective circle, angles in [0, pi); an arc
/// with lo > hi wraps through 0.
struct AngleArc {
    double lo = 0;
    double hi = 0;
    bool contains(double angle, double tol = 0) const;
};

/// Sampled Gauss directions (fx : fy) along a component, merged into arcs. Not certified.
std::vector<AngleArc> gauss_sector_scan(const Polynomial& f, const ComponentMap& map, int component, int samples);

/// Angle in [0, pi) of the direction (a : b).
double direction_angle(double a, double b);

}  // namespace polars
