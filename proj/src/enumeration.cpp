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

#include "convexq/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace convexq {

namespace {

template <class Steps, class First, class Second>
std::string steps_to_string(const Steps& steps, First first, Second second) {
    std::string out = "(";
    for (std::size_t l = 0; l < steps.size(); ++l) {
        if (l > 0) out += ",";
        out += "(" + std::to_string(first(steps[l])) + "," + std::to_string(second(steps[l])) + ")";
    }
    return out + ")";
}

// Fills exactly `remaining` more steps of a composition of (ri, rj), each
// (p, s) with p, s >= 1 and accepted(prev, p, s) holding against the previous
// step.  `accept_first` filters the opening step.
template <class Step, class Accept, class Emit>
void dfs_steps(std::int64_t ri, std::int64_t rj, std::size_t remaining, std::vector<Step>& prefix,
               const Accept& accepted, const Emit& emit) {
    const auto slack = static_cast<std::int64_t>(remaining) - 1;
    if (remaining == 1) {
        if (accepted(prefix, ri, rj)) {
            prefix.push_back(Step{ri, rj});
            emit(prefix);
            prefix.pop_back();
        }
        return;
    }
    for (std::int64_t p = 1; p <= ri - slack; ++p) {
        for (std::int64_t s = 1; s <= rj - slack; ++s) {
            if (!accepted(prefix, p, s)) continue;
            prefix.push_back(Step{p, s});
            dfs_steps(ri - p, rj - s, remaining - 1, prefix, accepted, emit);
            prefix.pop_back();
        }
    }
}

template <class Steps, class First, class Second>
std::int64_t cross_sum_impl(const Steps& steps, First first, Second second) {
    std::int64_t sum = 0;
    for (std::size_t l1 = 0; l1 < steps.size(); ++l1) {
        for (std::size_t l2 = l1 + 1; l2 < steps.size(); ++l2) {
            sum += first(steps[l1]) * second(steps[l2]) - first(steps[l2]) * second(steps[l1]);
        }
    }
    return sum;
}

constexpr auto d_a = [](const DStep& s) { return s.a; };
constexpr auto d_b = [](const DStep& s) { return s.b; };
constexpr auto c_x = [](const CStep& s) { return s.x; };
constexpr auto c_y = [](const CStep& s) { return s.y; };

}  // namespace

std::string to_string(const CompositionD& d) { return steps_to_string(d.steps, d_a, d_b); }
std::string to_string(const CompositionC& c) { return steps_to_string(c.steps, c_x, c_y); }

bool is_valid(const CompositionD& d, std::int64_t i, std::int64_t n) {
    if (d.steps.empty()) return false;
    std::int64_t sa = 0, sb = 0;
    for (std::size_t l = 0; l < d.steps.size(); ++l) {
        const auto& s = d.steps[l];
        if (s.a < 1 || s.b <= s.a) return false;
        // a_l / b_l < a_{l-1} / b_{l-1}
        if (l > 0 && s.a * d.steps[l - 1].b >= d.steps[l - 1].a * s.b) return false;
        sa += s.a;
        sb += s.b;
    }
    return sa == i && sb == n;
}

bool is_valid(const CompositionC& c, std::int64_t i, std::int64_t j) {
    if (c.steps.empty()) return false;
    std::int64_t sx = 0, sy = 0;
    for (std::size_t l = 0; l < c.steps.size(); ++l) {
        const auto& s = c.steps[l];
        if (s.x < 1 || s.y < 1) return false;
        if (l > 0 && s.y * c.steps[l - 1].x <= c.steps[l - 1].y * s.x) return false;
        sx += s.x;
        sy += s.y;
    }
    return sx == i && sy == j;
}

std::vector<CompositionD> enumerate_D(std::int64_t i, std::int64_t n) {
    if (i < 1 || i >= n) {
        throw std::invalid_argument("expected 1 <= i < n, got i=" + std::to_string(i) + " n=" + std::to_string(n));
    }
    // Each step has a >= 1 and b - a >= 1, so k <= min(i, n - i).
    const auto max_k = static_cast<std::size_t>(std::min(i, n - i));
    auto accepted = [](const std::vector<DStep>& prefix, std::int64_t a, std::int64_t b) {
        if (a >= b) return false;
        if (prefix.empty()) return true;
        const auto& last = prefix.back();
        return a * last.b < last.a * b;
    };
    std::vector<CompositionD> out;
    std::vector<DStep> prefix;
    for (std::size_t k = 1; k <= max_k; ++k) {
        dfs_steps<DStep>(i, n, k, prefix, accepted,
                         [&](const std::vector<DStep>& steps) { out.push_back(CompositionD{steps}); });
    }
    return out;
}

std::vector<CompositionC> enumerate_C(std::int64_t i, std::int64_t j) {
    if (i < 1 || j < 1) {
        throw std::invalid_argument("expected i, j >= 1, got i=" + std::to_string(i) + " j=" + std::to_string(j));
    }
    const auto max_k = static_cast<std::size_t>(std::min(i, j));
    auto accepted = [](const std::vector<CStep>& prefix, std::int64_t x, std::int64_t y) {
        if (prefix.empty()) return true;
        const auto& last = prefix.back();
        return y * last.x > last.y * x;
    };
    std::vector<CompositionC> out;
    std::vector<CStep> prefix;
    for (std::size_t k = 1; k <= max_k; ++k) {
        dfs_steps<CStep>(i, j, k, prefix, accepted,
                         [&](const std::vector<CStep>& steps) { out.push_back(CompositionC{steps}); });
    }
    return out;
}

CompositionC d_to_c(const CompositionD& d) {
    CompositionC c;
    c.steps.reserve(d.steps.size());
    for (const auto& s : d.steps) c.steps.push_back({s.a, s.b - s.a});
    return c;
}

CompositionD c_to_d(const CompositionC& c) {
    CompositionD d;
    d.steps.reserve(c.steps.size());
    for (const auto& s : c.steps) d.steps.push_back({s.x, s.x + s.y});
    return d;
}

std::int64_t cross_sum(const CompositionD& d) { return cross_sum_impl(d.steps, d_a, d_b); }
std::int64_t cross_sum(const CompositionC& c) { return cross_sum_impl(c.steps, c_x, c_y); }

std::int64_t gcd_sum(const CompositionD& d) {
    std::int64_t sum = 0;
    for (const auto& s : d.steps) sum += std::gcd(s.a, s.b);
    return sum;
}

std::int64_t gcd_sum(const CompositionC& c) {
    std::int64_t sum = 0;
    for (const auto& s : c.steps) sum += std::gcd(s.x, s.y);
    return sum;
}

ChainPolygon composition_to_polygon(const CompositionC& c, const TriangleSpec& spec) {
    if (!is_valid(c, spec.i(), spec.j())) {
        throw std::invalid_argument("composition " + to_string(c) + " is not an element of C for i=" +
                                    std::to_string(spec.i()) + " j=" + std::to_string(spec.j()));
    }
    std::vector<LatticePoint> vertices{spec.origin()};
    vertices.reserve(c.steps.size() + 1);
    for (const auto& s : c.steps) vertices.push_back(vertices.back() + LatticePoint{s.x, s.y});
    return ChainPolygon(spec, std::move(vertices));
}

CompositionC polygon_to_composition(const ChainPolygon& poly) {
    const auto v = poly.vertices();
    CompositionC c;
    c.steps.reserve(v.size() - 1);
    for (std::size_t m = 0; m + 1 < v.size(); ++m) {
        const auto e = v[m + 1] - v[m];
        c.steps.push_back({e.x, e.y});
    }
    return c;
}

std::vector<ChainPolygon> enumerate_polygons(const TriangleSpec& spec) {
    const auto comps = enumerate_C(spec.i(), spec.j());
    std::vector<ChainPolygon> out;
    out.reserve(comps.size());
    for (const auto& c : comps) out.push_back(composition_to_polygon(c, spec));
    return out;
}

}  // namespace convexq
