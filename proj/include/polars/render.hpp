#pragma once

#include "polars/report.hpp"
#include "polars/topology.hpp"

#include <string>
#include <vector>

namespace polars {

struct SvgLayer {
    const ComponentMap* map = nullptr;
    std::string color;
};

/// SVG 1.1 drawing of cell covers (in order) with witness and singular markers on top.
/// The viewport is fixed by the box of the first layer.
std::string render_svg(const std::vector<SvgLayer>& layers, const std::vector<PointRecord>& witnesses,
                       const std::vector<PointRecord>& singular, const std::string& title);

}  // namespace polars
