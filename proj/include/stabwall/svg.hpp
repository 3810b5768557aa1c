#pragma once

#include <string>
#include <vector>

#include "stabwall/enumerate.hpp"

namespace stabwall {

// Wall diagram over the (s, t) half-plane. The only floating point in the
// library lives here: semicircles, vertical lines, an optional boundary
// polyline and marked points are projected through the documented viewport
// (s in [s_min, s_max] -> x in [40, 760], t in [0, t_max] -> y in [560, 40],
// coordinates rounded to 4 decimals).
struct PlotInput {
    Rat s_min, s_max;
    Rat t2_max;
    std::vector<Wall> walls;
    std::vector<std::pair<double, double>> boundary_polyline;  // (s, t) samples
    std::vector<std::pair<double, double>> points;             // (s, t)
};

std::string render_svg(const PlotInput& in);

}  // namespace stabwall
