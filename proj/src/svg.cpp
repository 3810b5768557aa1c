#include "stabwall/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace stabwall {

namespace {

double to_d(const Rat& q) {
    return numerator(q).convert_to<double>() / denominator(q).convert_to<double>();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

std::string render_svg(const PlotInput& in) {
    const double x0 = 40.0, x1 = 760.0, y0 = 560.0, y1 = 40.0;
    const double s_lo = to_d(in.s_min), s_hi = to_d(in.s_max);
    const double t_max = std::sqrt(to_d(in.t2_max));
    const double sx = (x1 - x0) / (s_hi - s_lo);
    const double sy = (y0 - y1) / t_max;
    auto px = [&](double s) { return x0 + (s - s_lo) * sx; };
    auto py = [&](double t) { return y0 - t * sy; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" "
          "viewBox=\"0 0 800 600\">\n";
    os << "<!-- viewport: s in [" << rat_str(in.s_min) << ", " << rat_str(in.s_max)
       << "] -> x in [40, 760]; t in [0, " << fmt(t_max)
       << "] -> y in [560, 40]; 4-decimal rounding -->\n";
    // axes
    os << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x1) << "\" y2=\""
       << fmt(y0) << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    if (s_lo <= 0.0 && s_hi >= 0.0)
        os << "<line x1=\"" << fmt(px(0.0)) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(px(0.0))
           << "\" y2=\"" << fmt(y1) << "\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
    for (const Wall& w : in.walls) {
        if (w.kind == Wall::Kind::VerticalLine) {
            double s = to_d(w.line_s);
            if (s < s_lo || s > s_hi) continue;
            os << "<line x1=\"" << fmt(px(s)) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(px(s))
               << "\" y2=\"" << fmt(y1) << "\" stroke=\"crimson\" stroke-width=\"1\"/>\n";
        } else if (w.kind == Wall::Kind::Circle) {
            double c = to_d(w.center_s);
            double r = std::sqrt(to_d(w.radius2));
            // draw the upper semicircle via an elliptical arc in plot space
            double xa = px(c - r), xb = px(c + r);
            os << "<path d=\"M " << fmt(xa) << " " << fmt(y0) << " A " << fmt(r * sx) << " "
               << fmt(r * sy) << " 0 0 1 " << fmt(xb) << " " << fmt(y0)
               << "\" fill=\"none\" stroke=\"crimson\" stroke-width=\"1\"/>\n";
        }
    }
    if (in.boundary_polyline.size() >= 2) {
        os << "<polyline fill=\"none\" stroke=\"steelblue\" stroke-width=\"1\" points=\"";
        bool first = true;
        for (const auto& [s, t] : in.boundary_polyline) {
            if (!first) os << " ";
            first = false;
            os << fmt(px(s)) << "," << fmt(py(t));
        }
        os << "\"/>\n";
    }
    for (const auto& [s, t] : in.points)
        os << "<circle cx=\"" << fmt(px(s)) << "\" cy=\"" << fmt(py(t))
           << "\" r=\"3\" fill=\"black\"/>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace stabwall
