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

// Test-only brute-force oracles. Nothing in here calls the library code paths
// it is used to check: compositions come from unconstrained enumeration plus a
// filter, polynomials are plain std::map<int, long long>, and lattice counts
// come from scanning every grid point.

#ifndef CONVEXQ_TESTS_ORACLES_HPP
#define CONVEXQ_TESTS_ORACLES_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

using Pair = std::pair<std::int64_t, std::int64_t>;
using Steps = std::vector<Pair>;
/// v-exponent -> coefficient, q = v².
using VPoly = std::map<std::int64_t, long long>;

/// Every ordered composition of `total` into exactly k positive parts.
inline std::vector<std::vector<std::int64_t>> compositions(std::int64_t total, std::size_t k) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> cur;
    std::function<void(std::int64_t, std::size_t)> rec = [&](std::int64_t left, std::size_t parts) {
        if (parts == 0) {
            if (left == 0) out.push_back(cur);
            return;
        }
        for (std::int64_t p = 1; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p, parts - 1);
            cur.pop_back();
        }
    };
    rec(total, k);
    return out;
}

/// All k-tuples of pairs whose coordinates are compositions of (first, second),
/// for every k, filtered by `keep`.
inline std::vector<Steps> filtered_pairs(std::int64_t first, std::int64_t second,
                                         const std::function<bool(const Steps&)>& keep) {
    std::vector<Steps> out;
    for (std::size_t k = 1; k <= static_cast<std::size_t>(std::max(first, second)); ++k) {
        for (const auto& xs : compositions(first, k)) {
            for (const auto& ys : compositions(second, k)) {
                Steps s;
                for (std::size_t l = 0; l < k; ++l) s.emplace_back(xs[l], ys[l]);
                if (keep(s)) out.push_back(s);
            }
        }
    }
    return out;
}

/// Elements of D for (i, n): 1 > a1/b1 > ... > ak/bk > 0, slopes compared by cross multiplication.
inline std::vector<Steps> brute_D(std::int64_t i, std::int64_t n) {
    return filtered_pairs(i, n, [](const Steps& s) {
        for (std::size_t l = 0; l < s.size(); ++l) {
            if (!(s[l].first < s[l].second)) return false;
            if (l > 0 && !(s[l].first * s[l - 1].second < s[l - 1].first * s[l].second)) return false;
        }
        return true;
    });
}

/// Elements of C for (i, j): y1/x1 < ... < yk/xk.
inline std::vector<Steps> brute_C(std::int64_t i, std::int64_t j) {
    return filtered_pairs(i, j, [](const Steps& s) {
        for (std::size_t l = 1; l < s.size(); ++l) {
            if (!(s[l - 1].second * s[l].first < s[l].second * s[l - 1].first)) return false;
        }
        return true;
    });
}

inline VPoly vmul(const VPoly& a, const VPoly& b) {
    VPoly out;
    for (const auto& [e1, c1] : a)
        for (const auto& [e2, c2] : b) out[e1 + e2] += c1 * c2;
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

inline void vadd(VPoly& acc, const VPoly& b) {
    for (const auto& [e, c] : b) acc[e] += c;
    std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
}

/// Left-hand side of the main identity summed directly over brute_D.
inline VPoly main_lhs(std::int64_t i, std::int64_t n) {
    VPoly sum;
    for (const auto& s : brute_D(i, n)) {
        const auto k = static_cast<std::int64_t>(s.size());
        std::int64_t cross = 0, g = 0;
        for (std::size_t a = 0; a < s.size(); ++a) {
            g += std::gcd(s[a].first, s[a].second);
            for (std::size_t b = a + 1; b < s.size(); ++b) cross += s[a].first * s[b].second - s[b].first * s[a].second;
        }
        VPoly term{{2 * (1 - k) + cross + g, 1}};
        for (std::int64_t t = 0; t + 1 < k; ++t) term = vmul(term, VPoly{{2, 1}, {0, -1}});
        vadd(sum, term);
    }
    return sum;
}

// --- lattice brute force -------------------------------------------------

inline bool on_closed_segment(Pair a, Pair b, Pair p) {
    // p = a + t (b - a) for rational t in [0, 1]
    const auto dx = b.first - a.first, dy = b.second - a.second;
    const auto px = p.first - a.first, py = p.second - a.second;
    if (px * dy != py * dx) return false;
    const auto dot = px * dx + py * dy;
    return dot >= 0 && dot <= dx * dx + dy * dy;
}

/// Lattice points on the boundary of a closed vertex cycle, by scanning the bounding box.
inline std::int64_t scan_boundary(const std::vector<Pair>& cycle) {
    std::int64_t xmin = cycle[0].first, xmax = xmin, ymin = cycle[0].second, ymax = ymin;
    for (auto [x, y] : cycle) {
        xmin = std::min(xmin, x), xmax = std::max(xmax, x);
        ymin = std::min(ymin, y), ymax = std::max(ymax, y);
    }
    std::int64_t count = 0;
    for (auto x = xmin; x <= xmax; ++x)
        for (auto y = ymin; y <= ymax; ++y)
            for (std::size_t m = 0; m < cycle.size(); ++m)
                if (on_closed_segment(cycle[m], cycle[(m + 1) % cycle.size()], {x, y})) {
                    ++count;
                    break;
                }
    return count;
}

/// Twice the area of a chain polygon below the hypotenuse: area under the
/// hypotenuse minus the trapezoids under the chain.
inline std::int64_t trapezoid_area2(const std::vector<Pair>& chain) {
    const auto [i, j] = chain.back();
    std::int64_t under = 0;
    for (std::size_t m = 0; m + 1 < chain.size(); ++m) {
        under += (chain[m + 1].first - chain[m].first) * (chain[m].second + chain[m + 1].second);
    }
    return i * j - under;
}

/// Interior points of a convex chain polygon: strictly above every chain edge
/// (as a line) and strictly below the hypotenuse.
inline std::int64_t scan_interior(const std::vector<Pair>& chain) {
    if (chain.size() == 2) return 0;
    const auto [i, j] = chain.back();
    std::int64_t count = 0;
    for (std::int64_t x = 0; x <= i; ++x) {
        for (std::int64_t y = 0; y <= j; ++y) {
            if (!(j * x - i * y > 0)) continue;
            bool inside = true;
            for (std::size_t m = 0; m + 1 < chain.size() && inside; ++m) {
                const auto [ax, ay] = chain[m];
                const auto [bx, by] = chain[m + 1];
                inside = (bx - ax) * (y - ay) - (by - ay) * (x - ax) > 0;
            }
            count += inside;
        }
    }
    return count;
}

}  // namespace oracle

#endif
