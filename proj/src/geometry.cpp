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

#include "convexq/geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace convexq {

namespace {

std::int64_t edge_gcd(LatticePoint a, LatticePoint b) {
    return std::gcd(std::llabs(b.x - a.x), std::llabs(b.y - a.y));
}

// p on the closed segment [a, b].
bool on_segment(LatticePoint a, LatticePoint b, LatticePoint p) {
    if (orientation(a, b, p) != 0) return false;
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

}  // namespace

std::string to_string(LatticePoint p) {
    return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

// ---------------------------------------------------------------------------
// TriangleSpec

TriangleSpec::TriangleSpec(std::int64_t i, std::int64_t j) : i_(i), j_(j) {
    if (i < 1 || j < 1) {
        throw std::invalid_argument("triangle needs i >= 1 and j >= 1, got i=" + std::to_string(i) +
                                    " j=" + std::to_string(j));
    }
}

TriangleSpec TriangleSpec::from_i_n(std::int64_t i, std::int64_t n) {
    if (i < 1 || i >= n) {
        throw std::invalid_argument("expected 1 <= i < n, got i=" + std::to_string(i) + " n=" + std::to_string(n));
    }
    return TriangleSpec(i, n - i);
}

std::int64_t TriangleSpec::gcd_ij() const noexcept { return std::gcd(i_, j_); }

bool TriangleSpec::strictly_interior(LatticePoint p) const noexcept {
    return j_ * p.x - i_ * p.y > 0 && p.y > 0 && p.x < i_;
}

std::vector<LatticePoint> TriangleSpec::vertex_cycle() const { return {origin(), corner(), apex()}; }

// ---------------------------------------------------------------------------
// ChainPolygon

ChainPolygon::ChainPolygon(TriangleSpec spec, std::vector<LatticePoint> vertices)
    : spec_(spec), vertices_(std::move(vertices)) {
    if (vertices_.size() < 2) throw std::invalid_argument("chain needs at least two vertices");
    if (vertices_.front() != spec_.origin()) throw std::invalid_argument("chain must start at (0,0)");
    if (vertices_.back() != spec_.apex()) {
        throw std::invalid_argument("chain must end at " + to_string(spec_.apex()));
    }
    for (std::size_t m = 0; m + 1 < vertices_.size(); ++m) {
        const LatticePoint e = vertices_[m + 1] - vertices_[m];
        if (e.x < 1 || e.y < 1) {
            throw std::invalid_argument("chain edge " + to_string(e) + " must have dx >= 1 and dy >= 1");
        }
        if (m > 0) {
            const LatticePoint prev = vertices_[m] - vertices_[m - 1];
            // slope(e) > slope(prev)  <=>  e.y * prev.x > prev.y * e.x
            if (cross(prev, e) <= 0) throw std::invalid_argument("chain slopes must strictly increase");
            if (!spec_.strictly_interior(vertices_[m])) {
                throw std::invalid_argument("intermediate vertex " + to_string(vertices_[m]) +
                                            " is not strictly inside the triangle");
            }
        }
    }
}

ChainPolygon ChainPolygon::hypotenuse(TriangleSpec spec) { return ChainPolygon(spec, {spec.origin(), spec.apex()}); }

bool ChainPolygon::contains_closed(LatticePoint p) const noexcept {
    if (is_segment()) return on_segment(vertices_.front(), vertices_.back(), p);
    // The cycle chain + closing hypotenuse is counterclockwise.
    for (std::size_t m = 0; m + 1 < vertices_.size(); ++m) {
        if (orientation(vertices_[m], vertices_[m + 1], p) < 0) return false;
    }
    return orientation(vertices_.back(), vertices_.front(), p) >= 0;
}

bool ChainPolygon::contains_strict(LatticePoint p) const noexcept {
    if (is_segment()) return false;
    for (std::size_t m = 0; m + 1 < vertices_.size(); ++m) {
        if (orientation(vertices_[m], vertices_[m + 1], p) <= 0) return false;
    }
    return orientation(vertices_.back(), vertices_.front(), p) > 0;
}

std::string to_string(const ChainPolygon& poly) {
    std::string out;
    for (const auto& v : poly.vertices()) {
        if (!out.empty()) out += "-";
        out += to_string(v);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Counting

std::int64_t segment_lattice_count(LatticePoint p, LatticePoint r) {
    if (p == r) throw std::invalid_argument("degenerate segment at " + to_string(p));
    return edge_gcd(p, r) + 1;
}

std::int64_t doubled_area(const ChainPolygon& poly) {
    const auto v = poly.vertices();
    std::int64_t sum = 0;
    for (std::size_t m = 0; m < v.size(); ++m) {
        sum += cross(v[m], v[(m + 1) % v.size()]);
    }
    return sum;
}

std::int64_t boundary_count(const ChainPolygon& poly) {
    const auto v = poly.vertices();
    if (poly.is_segment()) return segment_lattice_count(v.front(), v.back());
    std::int64_t sum = 0;
    for (std::size_t m = 0; m < v.size(); ++m) {
        sum += edge_gcd(v[m], v[(m + 1) % v.size()]);
    }
    return sum;
}

std::int64_t interior_count(const ChainPolygon& poly) {
    if (poly.is_segment()) return 0;
    const auto& spec = poly.spec();
    std::int64_t count = 0;
    for (std::int64_t x = 0; x <= spec.i(); ++x) {
        for (std::int64_t y = 0; y <= spec.j(); ++y) {
            if (poly.contains_strict({x, y})) ++count;
        }
    }
    return count;
}

std::vector<LatticePoint> triangle_interior_points(const TriangleSpec& spec) {
    std::vector<LatticePoint> out;
    for (std::int64_t x = 1; x < spec.i(); ++x) {
        for (std::int64_t y = 1; y < spec.j(); ++y) {
            if (spec.strictly_interior({x, y})) out.push_back({x, y});
        }
    }
    return out;
}

std::int64_t u_count(const ChainPolygon& poly) {
    const auto pts = triangle_interior_points(poly.spec());
    return std::count_if(pts.begin(), pts.end(), [&](LatticePoint p) { return !poly.contains_closed(p); });
}

PolygonStats polygon_stats(const ChainPolygon& poly) {
    PolygonStats s;
    s.k = static_cast<std::int64_t>(poly.edge_count());
    s.vertex_count = static_cast<std::int64_t>(poly.vertex_count());
    s.interior = interior_count(poly);
    s.boundary = boundary_count(poly);
    s.area2 = doubled_area(poly);
    s.u = u_count(poly);
    return s;
}

ChainPolygon convex_hull_chain(std::span<const LatticePoint> chosen, const TriangleSpec& spec) {
    std::vector<LatticePoint> pts;
    pts.reserve(chosen.size() + 2);
    pts.push_back(spec.origin());
    for (const auto& p : chosen) {
        if (!spec.strictly_interior(p)) {
            throw std::invalid_argument("hull input " + to_string(p) + " is not strictly inside the triangle");
        }
        pts.push_back(p);
    }
    pts.push_back(spec.apex());
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    // Andrew's monotone chain, lower half only: every input lies strictly
    // below the hypotenuse, so the upper hull is the hypotenuse itself.
    std::vector<LatticePoint> hull;
    for (const auto& p : pts) {
        while (hull.size() >= 2 && orientation(hull[hull.size() - 2], hull.back(), p) <= 0) hull.pop_back();
        hull.push_back(p);
    }
    return ChainPolygon(spec, std::move(hull));
}

bool pick_check(const ChainPolygon& poly) {
    if (poly.is_segment()) throw std::domain_error("Pick's relation does not apply to the 2-gon");
    return doubled_area(poly) == 2 * interior_count(poly) + boundary_count(poly) - 2;
}

// ---------------------------------------------------------------------------
// Generic polygons

LatticeCounts lattice_counts(std::span<const LatticePoint> cycle) {
    if (cycle.size() < 3) throw std::invalid_argument("polygon cycle needs at least three vertices");
    const std::size_t size = cycle.size();
    LatticeCounts counts;
    std::int64_t signed_area2 = 0;
    for (std::size_t m = 0; m < size; ++m) {
        const LatticePoint a = cycle[m];
        const LatticePoint b = cycle[(m + 1) % size];
        if (a == b) throw std::invalid_argument("repeated vertex " + to_string(a) + " in polygon cycle");
        signed_area2 += cross(a, b);
        counts.boundary += edge_gcd(a, b);
    }
    counts.area2 = std::llabs(signed_area2);

    auto [xmin, xmax] = std::minmax_element(cycle.begin(), cycle.end(),
                                            [](LatticePoint a, LatticePoint b) { return a.x < b.x; });
    auto [ymin, ymax] = std::minmax_element(cycle.begin(), cycle.end(),
                                            [](LatticePoint a, LatticePoint b) { return a.y < b.y; });
    for (std::int64_t x = xmin->x; x <= xmax->x; ++x) {
        for (std::int64_t y = ymin->y; y <= ymax->y; ++y) {
            const LatticePoint p{x, y};
            bool boundary = false;
            bool inside = false;
            for (std::size_t m = 0; m < size && !boundary; ++m) {
                const LatticePoint a = cycle[m];
                const LatticePoint b = cycle[(m + 1) % size];
                if (on_segment(a, b, p)) {
                    boundary = true;
                    break;
                }
                // Crossing test for the rightward ray from p, half-open in y.
                if ((a.y > p.y) != (b.y > p.y)) {
                    const std::int64_t lhs = (p.x - a.x) * (b.y - a.y);
                    const std::int64_t rhs = (p.y - a.y) * (b.x - a.x);
                    if (b.y > a.y ? lhs < rhs : lhs > rhs) inside = !inside;
                }
            }
            if (!boundary && inside) ++counts.interior;
        }
    }
    return counts;
}

bool pick_check(std::span<const LatticePoint> cycle) {
    const auto c = lattice_counts(cycle);
    return c.area2 == 2 * c.interior + c.boundary - 2;
}

}  // namespace convexq
