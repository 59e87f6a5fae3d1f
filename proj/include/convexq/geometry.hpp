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

#ifndef CONVEXQ_GEOMETRY_HPP
#define CONVEXQ_GEOMETRY_HPP

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

// Lattice-geometry kernel. Everything here is exact integer arithmetic.

namespace convexq {

struct LatticePoint {
    std::int64_t x = 0;
    std::int64_t y = 0;

    friend constexpr auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

constexpr LatticePoint operator+(LatticePoint a, LatticePoint b) noexcept { return {a.x + b.x, a.y + b.y}; }
constexpr LatticePoint operator-(LatticePoint a, LatticePoint b) noexcept { return {a.x - b.x, a.y - b.y}; }

/// z-component of the cross product a × b.
constexpr std::int64_t cross(LatticePoint a, LatticePoint b) noexcept { return a.x * b.y - a.y * b.x; }

/// Positive when c lies to the left of the directed line a -> b, zero when collinear.
constexpr std::int64_t orientation(LatticePoint a, LatticePoint b, LatticePoint c) noexcept {
    return cross(b - a, c - a);
}

std::string to_string(LatticePoint p);

/// The right triangle with vertices (0,0), (i,0), (i,j); n = i + j.
class TriangleSpec {
   public:
    /// Throws std::invalid_argument unless i >= 1 and j >= 1.
    TriangleSpec(std::int64_t i, std::int64_t j);

    /// Builds the triangle for the pair (i, n) with j = n - i; requires 1 <= i < n.
    static TriangleSpec from_i_n(std::int64_t i, std::int64_t n);

    std::int64_t i() const noexcept { return i_; }
    std::int64_t j() const noexcept { return j_; }
    std::int64_t n() const noexcept { return i_ + j_; }
    std::int64_t gcd_ij() const noexcept;

    LatticePoint origin() const noexcept { return {0, 0}; }
    LatticePoint corner() const noexcept { return {i_, 0}; }
    LatticePoint apex() const noexcept { return {i_, j_}; }

    /// j·x − i·y > 0, y > 0, x < i.
    bool strictly_interior(LatticePoint p) const noexcept;

    /// Counterclockwise vertex cycle (0,0), (i,0), (i,j).
    std::vector<LatticePoint> vertex_cycle() const;

    friend auto operator<=>(const TriangleSpec&, const TriangleSpec&) = default;

   private:
    std::int64_t i_;
    std::int64_t j_;
};

/// A convex lattice polygon inside a triangle, stored as its lower chain from
/// (0,0) to (i,j). The closing edge back along the hypotenuse is implicit; a
/// chain of two vertices is the hypotenuse itself, counted as a 2-gon.
class ChainPolygon {
   public:
    /// Validates every chain invariant; throws std::invalid_argument on violation.
    ChainPolygon(TriangleSpec spec, std::vector<LatticePoint> vertices);

    static ChainPolygon hypotenuse(TriangleSpec spec);

    const TriangleSpec& spec() const noexcept { return spec_; }
    std::span<const LatticePoint> vertices() const noexcept { return vertices_; }

    /// Number of chain edges k (1 for the hypotenuse).
    std::size_t edge_count() const noexcept { return vertices_.size() - 1; }
    /// v(P): k + 1, which is 2 for the hypotenuse.
    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    bool is_segment() const noexcept { return vertices_.size() == 2; }

    /// Membership in the closed region (boundary included).
    bool contains_closed(LatticePoint p) const noexcept;
    /// Membership in the open interior; always false for the 2-gon.
    bool contains_strict(LatticePoint p) const noexcept;

    friend auto operator<=>(const ChainPolygon&, const ChainPolygon&) = default;

   private:
    TriangleSpec spec_;
    std::vector<LatticePoint> vertices_;
};

std::string to_string(const ChainPolygon& poly);

struct PolygonStats {
    std::int64_t k = 0;
    std::int64_t vertex_count = 0;
    std::int64_t interior = 0;
    std::int64_t boundary = 0;
    std::int64_t area2 = 0;
    std::int64_t u = 0;

    friend bool operator==(const PolygonStats&, const PolygonStats&) = default;
};

/// gcd(|dx|,|dy|) + 1; throws std::invalid_argument when p == r.
std::int64_t segment_lattice_count(LatticePoint p, LatticePoint r);

std::int64_t doubled_area(const ChainPolygon& poly);
std::int64_t boundary_count(const ChainPolygon& poly);
/// Brute-force scan of the bounding box with exact orientation tests.
std::int64_t interior_count(const ChainPolygon& poly);

/// Points strictly inside the triangle, lexicographic by (x, y).
std::vector<LatticePoint> triangle_interior_points(const TriangleSpec& spec);

/// Interior points of the triangle that lie outside the closed region of poly.
std::int64_t u_count(const ChainPolygon& poly);

PolygonStats polygon_stats(const ChainPolygon& poly);

/// Lower hull chain of {(0,0), (i,j)} ∪ chosen. Collinear non-extreme points
/// are dropped. Throws std::invalid_argument for points not strictly inside.
ChainPolygon convex_hull_chain(std::span<const LatticePoint> chosen, const TriangleSpec& spec);

/// Pick's relation on a chain polygon; throws std::domain_error for the 2-gon.
bool pick_check(const ChainPolygon& poly);

// Generic simple lattice polygons given as a closed vertex cycle (any
// orientation, not necessarily convex). Used by oracle checks and for the
// triangle itself.

struct LatticeCounts {
    std::int64_t area2 = 0;
    std::int64_t boundary = 0;
    std::int64_t interior = 0;
};

/// Throws std::invalid_argument for fewer than three vertices or repeated consecutive vertices.
LatticeCounts lattice_counts(std::span<const LatticePoint> cycle);

bool pick_check(std::span<const LatticePoint> cycle);

}  // namespace convexq

#endif
