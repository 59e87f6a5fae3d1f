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

#ifndef CONVEXQ_ENUMERATION_HPP
#define CONVEXQ_ENUMERATION_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "convexq/geometry.hpp"

namespace convexq {

/// One step (a, b) of a slope-bounded composition, 1 <= a < b.
struct DStep {
    std::int64_t a = 0;
    std::int64_t b = 0;
    friend auto operator<=>(const DStep&, const DStep&) = default;
};

/// One edge vector (x, y) of a convex chain, x, y >= 1.
struct CStep {
    std::int64_t x = 0;
    std::int64_t y = 0;
    friend auto operator<=>(const CStep&, const CStep&) = default;
};

/// Pairs (a_l, b_l) summing to (i, n) with 1 > a_1/b_1 > ... > a_k/b_k > 0.
struct CompositionD {
    std::vector<DStep> steps;
    std::size_t k() const noexcept { return steps.size(); }
    friend auto operator<=>(const CompositionD&, const CompositionD&) = default;
};

/// Pairs (x_l, y_l) summing to (i, j) with y_1/x_1 < ... < y_k/x_k.
struct CompositionC {
    std::vector<CStep> steps;
    std::size_t k() const noexcept { return steps.size(); }
    friend auto operator<=>(const CompositionC&, const CompositionC&) = default;
};

std::string to_string(const CompositionD& d);
std::string to_string(const CompositionC& c);

bool is_valid(const CompositionD& d, std::int64_t i, std::int64_t n);
bool is_valid(const CompositionC& c, std::int64_t i, std::int64_t j);

// Order: grouped by increasing k, then lexicographic in the steps (a DFS that
// tries first coordinates in increasing order, then second coordinates).

/// Every element of D = ⋃ D_k; throws std::invalid_argument unless 1 <= i < n.
std::vector<CompositionD> enumerate_D(std::int64_t i, std::int64_t n);
/// Every element of C = ⋃ C_k; throws std::invalid_argument unless i, j >= 1.
std::vector<CompositionC> enumerate_C(std::int64_t i, std::int64_t j);

CompositionC d_to_c(const CompositionD& d);
CompositionD c_to_d(const CompositionC& c);

/// Σ_{l1<l2} (a_{l1} b_{l2} − a_{l2} b_{l1}).
std::int64_t cross_sum(const CompositionD& d);
std::int64_t cross_sum(const CompositionC& c);
/// Σ gcd(a_l, b_l).
std::int64_t gcd_sum(const CompositionD& d);
std::int64_t gcd_sum(const CompositionC& c);

/// Partial sums of c as a chain. Throws std::invalid_argument if the sums do not match spec.
ChainPolygon composition_to_polygon(const CompositionC& c, const TriangleSpec& spec);
CompositionC polygon_to_composition(const ChainPolygon& poly);

/// All convex chains of the triangle, in the order of enumerate_C.
std::vector<ChainPolygon> enumerate_polygons(const TriangleSpec& spec);

}  // namespace convexq

#endif
