/*
   Copyright 2026 The convexq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <sstream>

#include "convexq/cli.hpp"

namespace convexq::cli {

namespace {

constexpr std::int64_t kScale = 32;
constexpr std::int64_t kMargin = 16;

}  // namespace

std::string render_svg(const ChainPolygon& poly) {
    const auto& spec = poly.spec();
    const std::int64_t width = spec.i() * kScale + 2 * kMargin;
    const std::int64_t height = spec.j() * kScale + 2 * kMargin;
    // Lattice y grows upward; SVG y grows downward.
    auto px = [](std::int64_t x) { return kMargin + x * kScale; };
    auto py = [&](std::int64_t y) { return kMargin + (spec.j() - y) * kScale; };
    auto point_list = [&](std::span<const LatticePoint> pts) {
        std::string s;
        for (const auto& p : pts) {
            if (!s.empty()) s += ' ';
            s += std::to_string(px(p.x)) + "," + std::to_string(py(p.y));
        }
        return s;
    };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "  <title>" << to_string(poly) << "</title>\n";

    const auto tri = spec.vertex_cycle();
    svg << "  <polygon class=\"triangle\" points=\"" << point_list(tri)
        << "\" fill=\"none\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
    if (!poly.is_segment()) {
        svg << "  <polygon class=\"chain\" points=\"" << point_list(poly.vertices())
            << "\" fill=\"#9ecae1\" fill-opacity=\"0.6\" stroke=\"#08519c\" stroke-width=\"2\"/>\n";
    }
    svg << "  <line class=\"hypotenuse\" x1=\"" << px(0) << "\" y1=\"" << py(0) << "\" x2=\"" << px(spec.i())
        << "\" y2=\"" << py(spec.j()) << "\" stroke=\"#cb181d\" stroke-width=\"3\"/>\n";
    for (const auto& p : triangle_interior_points(spec)) {
        const char* fill = poly.contains_closed(p) ? "#08519c" : "#969696";
        svg << "  <circle class=\"interior\" cx=\"" << px(p.x) << "\" cy=\"" << py(p.y) << "\" r=\"3\" fill=\"" << fill
            << "\"/>\n";
    }
    for (const auto& v : poly.vertices()) {
        svg << "  <circle class=\"vertex\" cx=\"" << px(v.x) << "\" cy=\"" << py(v.y)
            << "\" r=\"4.5\" fill=\"#08519c\"/>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace convexq::cli
