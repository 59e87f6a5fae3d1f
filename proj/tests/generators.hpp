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

// Hand-rolled generators for property tests.

#ifndef CONVEXQ_TESTS_GENERATORS_HPP
#define CONVEXQ_TESTS_GENERATORS_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "convexq/geometry.hpp"
#include "convexq/polyalgebra.hpp"
#include "oracles.hpp"

namespace gen {

/// A random convex chain built from edge vectors: draw up to max_edges vectors
/// with coordinates in [1, max_step], sort by slope, and merge equal slopes.
inline convexq::ChainPolygon random_convex_chain(std::mt19937_64& rng, int max_edges = 7, int max_step = 6) {
    std::uniform_int_distribution<int> count(1, max_edges);
    std::uniform_int_distribution<std::int64_t> coord(1, max_step);
    std::vector<convexq::LatticePoint> edges(static_cast<std::size_t>(count(rng)));
    for (auto& e : edges) e = {coord(rng), coord(rng)};
    std::sort(edges.begin(), edges.end(), [](auto a, auto b) { return a.y * b.x < b.y * a.x; });
    std::vector<convexq::LatticePoint> merged;
    for (const auto& e : edges) {
        if (!merged.empty() && merged.back().y * e.x == e.y * merged.back().x) {
            merged.back() = merged.back() + e;
        } else {
            merged.push_back(e);
        }
    }
    std::vector<convexq::LatticePoint> vertices{{0, 0}};
    for (const auto& e : merged) vertices.push_back(vertices.back() + e);
    const auto apex = vertices.back();
    return convexq::ChainPolygon(convexq::TriangleSpec(apex.x, apex.y), std::move(vertices));
}

inline std::vector<oracle::Pair> as_pairs(std::span<const convexq::LatticePoint> pts) {
    std::vector<oracle::Pair> out;
    for (const auto& p : pts) out.emplace_back(p.x, p.y);
    return out;
}

/// Random integer with up to `digits` decimal digits, either sign.
inline convexq::Integer random_big(std::mt19937_64& rng, int digits) {
    std::uniform_int_distribution<int> d(0, 9);
    std::string s = std::bernoulli_distribution(0.5)(rng) ? "-" : "";
    s += std::to_string(1 + d(rng) % 9);
    for (int m = 1; m < digits; ++m) s += std::to_string(d(rng));
    return convexq::Integer(s);
}

template <class Poly>
Poly random_poly(std::mt19937_64& rng, std::int64_t min_exp, std::int64_t max_exp, int terms, int digits) {
    std::uniform_int_distribution<std::int64_t> e(min_exp, max_exp);
    Poly p;
    for (int t = 0; t < terms; ++t) p.add_term(e(rng), random_big(rng, digits));
    return p;
}

}  // namespace gen

#endif
