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

#ifndef CONVEXQ_MONTECARLO_HPP
#define CONVEXQ_MONTECARLO_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "convexq/geometry.hpp"
#include "convexq/polyalgebra.hpp"

namespace convexq {

struct SimulationConfig {
    TriangleSpec spec;
    Rational x;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

/// Throws std::invalid_argument unless 0 < x < 1, trials >= 1, and the
/// denominator of x fits in 64 bits.
void validate(const SimulationConfig& config);

/// Counter-based generator: the stream for (seed, trial) is a pure function of
/// those two numbers, so trials can be run in any order on any thread.
class TrialStream {
   public:
    TrialStream(std::uint64_t seed, std::uint64_t trial) noexcept;

    std::uint64_t next() noexcept;
    /// Uniform on [0, bound) by multiply-shift with rejection; bound >= 1.
    std::uint64_t below(std::uint64_t bound) noexcept;

   private:
    std::uint64_t key_;
    std::uint64_t counter_ = 0;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) noexcept;

struct FrequencyTable {
    std::map<ChainPolygon, std::uint64_t> counts;

    std::uint64_t total() const;
    std::uint64_t count(const ChainPolygon& poly) const;
    void merge(const FrequencyTable& other);

    friend bool operator==(const FrequencyTable&, const FrequencyTable&) = default;
};

/// (1−x)^{u(P)} x^{v(P)−2}.
Rational exact_prob(const ChainPolygon& poly, const Rational& x);

/// One round of the selection process: each interior point of the triangle is
/// kept iff a uniform draw in [0, den(x)) falls below num(x); returns the hull.
ChainPolygon run_trial(const TriangleSpec& spec, std::span<const LatticePoint> interior, const Rational& x,
                       std::uint64_t seed, std::uint64_t trial);

/// Runs config.trials rounds split across `threads` workers. The result
/// depends only on the config, never on the thread count.
FrequencyTable simulate(const SimulationConfig& config, unsigned threads = 1);

struct ComparisonRow {
    ChainPolygon polygon;
    std::uint64_t count = 0;
    double empirical = 0.0;
    Rational exact;
    double sigma = 0.0;  // binomial standard error of the frequency
    double z = 0.0;
    bool flagged = false;
};

struct ComparisonReport {
    std::vector<ComparisonRow> rows;  // one per element of C, enumeration order
    Rational exact_total;
    bool normalized = false;  // exact_total == 1
    double threshold = 4.0;
    std::size_t flagged_count = 0;
    std::vector<ChainPolygon> foreign;  // tallied polygons that are not in C

    bool ok() const { return normalized && flagged_count == 0 && foreign.empty(); }
};

ComparisonReport compare(const FrequencyTable& table, const SimulationConfig& config, double z_threshold = 4.0);

}  // namespace convexq

#endif
