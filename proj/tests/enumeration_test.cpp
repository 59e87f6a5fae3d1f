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

#include <doctest.h>

#include <set>

#include "convexq/enumeration.hpp"
#include "oracles.hpp"

using namespace convexq;

namespace {

std::vector<oracle::Steps> as_steps(const std::vector<CompositionD>& ds) {
    std::vector<oracle::Steps> out;
    for (const auto& d : ds) {
        oracle::Steps s;
        for (const auto& st : d.steps) s.emplace_back(st.a, st.b);
        out.push_back(s);
    }
    return out;
}

std::vector<oracle::Steps> as_steps(const std::vector<CompositionC>& cs) {
    std::vector<oracle::Steps> out;
    for (const auto& c : cs) {
        oracle::Steps s;
        for (const auto& st : c.steps) s.emplace_back(st.x, st.y);
        out.push_back(s);
    }
    return out;
}

template <class T>
std::set<T> as_set(const std::vector<T>& v) {
    return {v.begin(), v.end()};
}

CompositionD D(std::vector<DStep> s) { return CompositionD{std::move(s)}; }
CompositionC C(std::vector<CStep> s) { return CompositionC{std::move(s)}; }

}  // namespace

TEST_CASE("enumerate_D examples") {
    CHECK(enumerate_D(1, 2) == std::vector<CompositionD>{D({{1, 2}})});
    CHECK(enumerate_D(2, 4) == std::vector<CompositionD>{D({{2, 4}})});
    CHECK(enumerate_D(2, 5) == std::vector<CompositionD>{D({{2, 5}}), D({{1, 2}, {1, 3}})});
    // frozen values agree with the brute-force filter
    CHECK(oracle::brute_D(1, 2).size() == 1);
    CHECK(oracle::brute_D(2, 4).size() == 1);
    CHECK(oracle::brute_D(2, 5).size() == 2);
    CHECK_THROWS_AS(enumerate_D(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_D(0, 3), std::invalid_argument);
}

TEST_CASE("enumerate_C examples") {
    CHECK(enumerate_C(1, 1) == std::vector<CompositionC>{C({{1, 1}})});
    CHECK(enumerate_C(2, 3) == std::vector<CompositionC>{C({{2, 3}}), C({{1, 1}, {1, 2}})});
    CHECK(enumerate_C(3, 4) ==
          std::vector<CompositionC>{C({{3, 4}}), C({{1, 1}, {2, 3}}), C({{2, 1}, {1, 3}}), C({{2, 2}, {1, 2}})});
    CHECK(oracle::brute_C(3, 4).size() == 4);
    CHECK_THROWS_AS(enumerate_C(0, 1), std::invalid_argument);
}

TEST_CASE("enumerations match brute force as sets and never repeat") {
    for (std::int64_t n = 2; n <= 10; ++n) {
        for (std::int64_t i = 1; i < n; ++i) {
            const auto ds = enumerate_D(i, n);
            const auto brute = oracle::brute_D(i, n);
            CHECK(as_set(ds).size() == ds.size());
            CHECK(as_set(as_steps(ds)) == as_set(brute));
            for (const auto& d : ds) CHECK(is_valid(d, i, n));
        }
    }
    for (std::int64_t i = 1; i <= 8; ++i) {
        for (std::int64_t j = 1; j <= 8; ++j) {
            const auto cs = enumerate_C(i, j);
            CHECK(as_set(cs).size() == cs.size());
            CHECK(as_set(as_steps(cs)) == as_set(oracle::brute_C(i, j)));
        }
    }
}

TEST_CASE("enumeration is grouped by k") {
    const auto cs = enumerate_C(6, 7);
    for (std::size_t m = 1; m < cs.size(); ++m) CHECK(cs[m - 1].k() <= cs[m].k());
}

TEST_CASE("d_to_c / c_to_d") {
    CHECK(d_to_c(D({{2, 5}})) == C({{2, 3}}));
    CHECK(d_to_c(D({{1, 2}, {1, 3}})) == C({{1, 1}, {1, 2}}));
    for (const auto& d : enumerate_D(3, 7)) CHECK(c_to_d(d_to_c(d)) == d);
}

TEST_CASE("property: bijection, cross-sum and gcd-sum preservation") {
    for (std::int64_t n = 2; n <= 10; ++n) {
        for (std::int64_t i = 1; i < n; ++i) {
            const auto ds = enumerate_D(i, n);
            const auto cs = enumerate_C(i, n - i);
            REQUIRE(ds.size() == cs.size());
            std::set<CompositionC> images;
            for (const auto& d : ds) {
                const auto c = d_to_c(d);
                CHECK(is_valid(c, i, n - i));
                CHECK(c_to_d(c) == d);
                CHECK(cross_sum(c) == cross_sum(d));
                CHECK(gcd_sum(c) == gcd_sum(d));
                images.insert(c);
            }
            CHECK(images == as_set(cs));
            for (const auto& c : cs) CHECK(d_to_c(c_to_d(c)) == c);
        }
    }
}

TEST_CASE("composition to polygon") {
    const TriangleSpec t23(2, 3), t34(3, 4);
    CHECK(composition_to_polygon(C({{2, 3}}), t23) == ChainPolygon::hypotenuse(t23));
    CHECK(composition_to_polygon(C({{1, 1}, {1, 2}}), t23) == ChainPolygon(t23, {{0, 0}, {1, 1}, {2, 3}}));
    CHECK(composition_to_polygon(C({{2, 1}, {1, 3}}), t34) == ChainPolygon(t34, {{0, 0}, {2, 1}, {3, 4}}));
    CHECK_THROWS_AS(composition_to_polygon(C({{1, 1}, {1, 2}}), t34), std::invalid_argument);
    for (const auto& c : enumerate_C(5, 6)) {
        CHECK(polygon_to_composition(composition_to_polygon(c, TriangleSpec(5, 6))) == c);
    }
}

TEST_CASE("enumerate_polygons examples") {
    CHECK(enumerate_polygons(TriangleSpec(1, 1)) == std::vector<ChainPolygon>{ChainPolygon::hypotenuse(TriangleSpec(1, 1))});
    CHECK(enumerate_polygons(TriangleSpec(2, 3)).size() == 2);
    CHECK(enumerate_polygons(TriangleSpec(3, 4)).size() == 4);
}

TEST_CASE("property: polygons are exactly the hulls of interior-point subsets") {
    // Characterization without any hull algorithm: P is the hull of S iff the
    // inner vertices of P are in S and S lies in the closed region of P.
    for (std::int64_t i = 1; i <= 6; ++i) {
        for (std::int64_t j = 1; j <= 6; ++j) {
            const TriangleSpec t(i, j);
            const auto pts = triangle_interior_points(t);
            const auto polys = enumerate_polygons(t);
            std::vector<int> hits(polys.size(), 0);
            for (std::uint32_t mask = 0; mask < (1U << pts.size()); ++mask) {
                std::vector<LatticePoint> chosen;
                for (std::size_t b = 0; b < pts.size(); ++b)
                    if (mask & (1U << b)) chosen.push_back(pts[b]);
                int matches = 0;
                for (std::size_t m = 0; m < polys.size(); ++m) {
                    const auto v = polys[m].vertices();
                    bool ok = std::all_of(v.begin() + 1, v.end() - 1, [&](LatticePoint p) {
                        return std::find(chosen.begin(), chosen.end(), p) != chosen.end();
                    });
                    ok = ok && std::all_of(chosen.begin(), chosen.end(),
                                           [&](LatticePoint p) { return polys[m].contains_closed(p); });
                    if (ok) {
                        ++matches;
                        ++hits[m];
                        CHECK(convex_hull_chain(chosen, t) == polys[m]);
                    }
                }
                CHECK(matches == 1);
            }
            for (int h : hits) CHECK(h >= 1);
        }
    }
}

TEST_CASE("property: doubled exponent formula for every chain") {
    // cross + gcdsum = 2(i(P) + b(P) − 1) − gcd(i, j)
    for (std::int64_t i = 1; i <= 8; ++i) {
        for (std::int64_t j = 1; j <= 8; ++j) {
            const TriangleSpec t(i, j);
            for (const auto& c : enumerate_C(i, j)) {
                const auto poly = composition_to_polygon(c, t);
                CHECK(cross_sum(c) == doubled_area(poly));
                // For the 2-gon the hypotenuse is not counted twice, so only the
                // combined identity holds there.
                if (!poly.is_segment()) CHECK(gcd_sum(c) == boundary_count(poly) - t.gcd_ij());
                CHECK(cross_sum(c) + gcd_sum(c) ==
                      2 * (interior_count(poly) + boundary_count(poly) - 1) - t.gcd_ij());
            }
        }
    }
}
