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

#include <array>
#include <cmath>

#include "convexq/enumeration.hpp"
#include "convexq/montecarlo.hpp"

using namespace convexq;

TEST_CASE("exact probabilities") {
    const TriangleSpec t23(2, 3), t34(3, 4);
    CHECK(exact_prob(ChainPolygon::hypotenuse(t23), Rational(1, 2)) == Rational(1, 2));
    CHECK(exact_prob(ChainPolygon(t23, {{0, 0}, {1, 1}, {2, 3}}), Rational(1, 2)) == Rational(1, 2));
    CHECK(exact_prob(ChainPolygon(t34, {{0, 0}, {2, 1}, {3, 4}}), Rational(1, 3)) == Rational(1, 3));
    CHECK(exact_prob(ChainPolygon::hypotenuse(t34), Rational(1, 3)) == Rational(8, 27));
}

TEST_CASE("property: exact probabilities sum to one") {
    for (std::int64_t i = 1; i <= 8; ++i) {
        for (std::int64_t j = 1; j <= 8; ++j) {
            for (const Rational x : {Rational(1, 3), Rational(1, 2), Rational(2, 3)}) {
                Rational total = 0;
                for (const auto& p : enumerate_polygons(TriangleSpec(i, j))) total += exact_prob(p, x);
                CHECK(total == 1);
            }
        }
    }
}

TEST_CASE("config validation") {
    const TriangleSpec t(2, 3);
    CHECK_THROWS_AS(validate({t, Rational(3, 2), 10, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate({t, Rational(0), 10, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate({t, Rational(1), 10, 0}), std::invalid_argument);
    CHECK_THROWS_AS(validate({t, Rational(1, 2), 0, 0}), std::invalid_argument);
    Rational huge(Integer(1), Integer(Integer(1) << 70));
    CHECK_THROWS_AS(validate({t, huge, 10, 0}), std::invalid_argument);
    CHECK_NOTHROW(validate({t, Rational(1, 2), 1, 0}));
}

TEST_CASE("trial streams are pure functions of (seed, trial)") {
    TrialStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    const auto a1 = a.next(), b1 = b.next(), c1 = c.next(), d1 = d.next();
    CHECK(a1 == b1);
    CHECK(a1 != c1);
    CHECK(a1 != d1);
    CHECK(a.next() == b.next());
}

TEST_CASE("bounded draws are in range and roughly uniform") {
    TrialStream s(1, 2);
    std::array<int, 3> hist{};
    for (int m = 0; m < 30000; ++m) {
        const auto v = s.below(3);
        REQUIRE(v < 3);
        ++hist[v];
    }
    // each bucket expects 10000, sd ~82
    for (int h : hist) CHECK(std::abs(h - 10000) < 500);
    CHECK(s.below(1) == 0);
}

TEST_CASE("single-polygon triangle always yields the hypotenuse") {
    const SimulationConfig config{TriangleSpec(1, 1), Rational(1, 3), 100, 5};
    const auto table = simulate(config);
    CHECK(table.counts.size() == 1);
    CHECK(table.count(ChainPolygon::hypotenuse(TriangleSpec(1, 1))) == 100);
    const auto report = compare(table, config);
    REQUIRE(report.rows.size() == 1);
    CHECK(report.rows[0].empirical == 1.0);
    CHECK(report.rows[0].exact == 1);
    CHECK(report.rows[0].z == 0.0);
    CHECK(report.ok());
}

TEST_CASE("determinism across runs and thread counts") {
    const SimulationConfig config{TriangleSpec(4, 5), Rational(2, 5), 20000, 99};
    const auto one = simulate(config, 1);
    CHECK(simulate(config, 1) == one);
    CHECK(simulate(config, 3) == one);
    CHECK(simulate(config, 8) == one);
    CHECK(one.total() == 20000);
    const SimulationConfig other{TriangleSpec(4, 5), Rational(2, 5), 20000, 100};
    CHECK_FALSE(simulate(other, 1) == one);
}

TEST_CASE("property: every simulated hull is an element of C") {
    for (auto [i, j] : {std::pair{3, 4}, {5, 7}, {6, 6}, {8, 5}}) {
        const SimulationConfig config{TriangleSpec(i, j), Rational(1, 2), 5000, 11};
        const auto report = compare(simulate(config, 2), config);
        CHECK(report.foreign.empty());
        CHECK(report.normalized);
    }
}

TEST_CASE("compare flags a tampered table") {
    const SimulationConfig config{TriangleSpec(2, 3), Rational(1, 2), 10000, 3};
    auto table = simulate(config);
    CHECK(compare(table, config).ok());
    table.counts.clear();
    table.counts[ChainPolygon::hypotenuse(TriangleSpec(2, 3))] = 10000;
    const auto report = compare(table, config);
    CHECK(report.flagged_count == 2);
    CHECK_FALSE(report.ok());

    FrequencyTable foreign;
    foreign.counts[ChainPolygon::hypotenuse(TriangleSpec(3, 3))] = 1;
    CHECK(compare(foreign, config).foreign.size() == 1);
}

TEST_CASE("moderate-size frequencies sit near the exact probabilities") {
    const SimulationConfig config{TriangleSpec(3, 4), Rational(1, 3), 200000, 2026};
    const auto report = compare(simulate(config), config);
    CHECK(report.rows.size() == 4);
    for (const auto& row : report.rows) CHECK(std::abs(row.z) <= 4.0);
    CHECK(report.exact_total == 1);
}
