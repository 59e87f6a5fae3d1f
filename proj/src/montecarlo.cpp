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

#include "convexq/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "convexq/enumeration.hpp"

namespace convexq {

namespace {

__extension__ using u128 = unsigned __int128;

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t to_u64(const Integer& z) {
    // unsigned long is 32-bit on LLP64, so avoid mpz_get_ui.
    std::uint64_t out = 0;
    mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, z.get_mpz_t());
    return out;
}

bool fits_u64(const Integer& z) { return z >= 0 && mpz_sizeinbase(z.get_mpz_t(), 2) <= 64; }

}  // namespace

std::uint64_t mix64(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

TrialStream::TrialStream(std::uint64_t seed, std::uint64_t trial) noexcept
    : key_(mix64(seed + kGolden) ^ mix64(trial * kGolden + 0x632BE59BD9B4E019ULL)) {}

std::uint64_t TrialStream::next() noexcept { return mix64(key_ + (++counter_) * kGolden); }

std::uint64_t TrialStream::below(std::uint64_t bound) noexcept {
    // Lemire's nearly divisionless method.
    u128 m = static_cast<u128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            m = static_cast<u128>(next()) * bound;
            low = static_cast<std::uint64_t>(m);
        }
    }
    return static_cast<std::uint64_t>(m >> 64);
}

void validate(const SimulationConfig& config) {
    if (config.x <= 0 || config.x >= 1) {
        throw std::invalid_argument("x must satisfy 0 < x < 1, got " + config.x.get_str());
    }
    if (config.trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (!fits_u64(config.x.get_den())) throw std::invalid_argument("denominator of x must fit in 64 bits");
}

std::uint64_t FrequencyTable::total() const {
    std::uint64_t sum = 0;
    for (const auto& [poly, c] : counts) sum += c;
    return sum;
}

std::uint64_t FrequencyTable::count(const ChainPolygon& poly) const {
    auto it = counts.find(poly);
    return it == counts.end() ? 0 : it->second;
}

void FrequencyTable::merge(const FrequencyTable& other) {
    for (const auto& [poly, c] : other.counts) counts[poly] += c;
}

Rational exact_prob(const ChainPolygon& poly, const Rational& x) {
    const auto u = static_cast<unsigned long>(u_count(poly));
    const auto w = static_cast<unsigned long>(poly.vertex_count() - 2);
    const Rational keep = x;
    const Rational drop = 1 - x;
    Integer num_a, den_a, num_b, den_b;
    mpz_pow_ui(num_a.get_mpz_t(), drop.get_num_mpz_t(), u);
    mpz_pow_ui(den_a.get_mpz_t(), drop.get_den_mpz_t(), u);
    mpz_pow_ui(num_b.get_mpz_t(), keep.get_num_mpz_t(), w);
    mpz_pow_ui(den_b.get_mpz_t(), keep.get_den_mpz_t(), w);
    Rational p(num_a * num_b, den_a * den_b);
    p.canonicalize();
    return p;
}

ChainPolygon run_trial(const TriangleSpec& spec, std::span<const LatticePoint> interior, const Rational& x,
                       std::uint64_t seed, std::uint64_t trial) {
    const std::uint64_t num = to_u64(x.get_num());
    const std::uint64_t den = to_u64(x.get_den());
    TrialStream stream(seed, trial);
    std::vector<LatticePoint> chosen;
    chosen.reserve(interior.size());
    for (const auto& p : interior) {
        if (stream.below(den) < num) chosen.push_back(p);
    }
    return convex_hull_chain(chosen, spec);
}

FrequencyTable simulate(const SimulationConfig& config, unsigned threads) {
    validate(config);
    const auto interior = triangle_interior_points(config.spec);
    const std::uint64_t workers = std::clamp<std::uint64_t>(threads, 1, config.trials);

    std::vector<FrequencyTable> partial(workers);
    auto run_range = [&](std::uint64_t w) {
        const std::uint64_t begin = config.trials * w / workers;
        const std::uint64_t end = config.trials * (w + 1) / workers;
        auto& table = partial[w];
        for (std::uint64_t t = begin; t < end; ++t) {
            ++table.counts[run_trial(config.spec, interior, config.x, config.seed, t)];
        }
    };

    if (workers == 1) {
        run_range(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(run_range, w);
    }

    FrequencyTable result;
    for (const auto& t : partial) result.merge(t);
    return result;
}

ComparisonReport compare(const FrequencyTable& table, const SimulationConfig& config, double z_threshold) {
    validate(config);
    ComparisonReport report;
    report.threshold = z_threshold;
    const auto polygons = enumerate_polygons(config.spec);
    const double trials = static_cast<double>(table.total());

    for (const auto& poly : polygons) {
        ComparisonRow row{poly, table.count(poly), 0.0, exact_prob(poly, config.x), 0.0, 0.0, false};
        report.exact_total += row.exact;
        const double p = row.exact.get_d();
        row.empirical = trials > 0 ? static_cast<double>(row.count) / trials : 0.0;
        row.sigma = trials > 0 ? std::sqrt(p * (1.0 - p) / trials) : 0.0;
        const double diff = row.empirical - p;
        if (row.sigma > 0.0) {
            row.z = diff / row.sigma;
        } else {
            // p is 0 or 1: any deviation is infinitely unlikely.
            row.z = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
        }
        row.flagged = std::abs(row.z) > z_threshold;
        if (row.flagged) ++report.flagged_count;
        report.rows.push_back(std::move(row));
    }
    report.normalized = report.exact_total == 1;

    for (const auto& [poly, c] : table.counts) {
        if (std::find(polygons.begin(), polygons.end(), poly) == polygons.end()) {
            report.foreign.push_back(poly);
        }
    }
    return report;
}

}  // namespace convexq
