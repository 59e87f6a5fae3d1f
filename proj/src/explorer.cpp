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

#include "convexq/explorer.hpp"

#include <algorithm>
#include <functional>

#include "convexq/enumeration.hpp"
#include "convexq/polyalgebra.hpp"

namespace convexq {

Signature::Signature(std::vector<SignaturePair> pairs) : pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end(), std::greater<>());
}

bool Signature::contains(SignaturePair p) const { return std::find(pairs_.begin(), pairs_.end(), p) != pairs_.end(); }

Signature Signature::as_set() const {
    auto pairs = pairs_;
    pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
    return Signature(std::move(pairs));
}

std::string to_string(const Signature& sig) {
    std::string out = "{";
    for (std::size_t m = 0; m < sig.pairs().size(); ++m) {
        if (m > 0) out += ",";
        out += "(" + std::to_string(sig.pairs()[m].u) + "," + std::to_string(sig.pairs()[m].w) + ")";
    }
    return out + "}";
}

Signature triangle_signature(std::int64_t m, std::int64_t n) {
    const TriangleSpec spec(m, n);
    std::vector<SignaturePair> pairs;
    for (const auto& poly : enumerate_polygons(spec)) {
        pairs.push_back({u_count(poly), static_cast<std::int64_t>(poly.vertex_count()) - 2});
    }
    return Signature(std::move(pairs));
}

bool is_unit_multiset(const Signature& sig) {
    UnitPoly sum;
    for (const auto& p : sig.pairs()) sum += term_x_pow_times_one_minus_x_pow(p.u, p.w);
    return sum == UnitPoly(1L);
}

SearchCapExceeded::SearchCapExceeded(std::uint64_t nodes)
    : std::runtime_error("search cap hit after " + std::to_string(nodes) + " nodes; results would be incomplete"),
      nodes_(nodes) {}

namespace {

struct SearchState {
    const SearchBounds& bounds;
    std::vector<SignaturePair> universe;
    std::vector<UnitPoly> terms;
    std::vector<std::size_t> chosen;
    std::vector<Signature> found;
    std::uint64_t nodes = 0;
    int zero_u = 0;  // pairs with u = 0
    int zero_w = 0;  // pairs with w = 0
};

// At x = 0 only the u = 0 terms survive and each contributes 1; at x = 1 the
// same holds for w = 0. A unit sum therefore has exactly one pair of each
// kind, and since (0,1) is required it is the only u = 0 pair.
void extend(SearchState& st, std::size_t from, const UnitPoly& sum) {
    if (!st.chosen.empty()) {
        if (sum == UnitPoly(1L) && st.zero_u == 1) {
            std::vector<SignaturePair> pairs;
            for (auto idx : st.chosen) pairs.push_back(st.universe[idx]);
            Signature sig(std::move(pairs));
            if (sig.contains({0, 1})) st.found.push_back(std::move(sig));
        }
    }
    if (static_cast<std::int64_t>(st.chosen.size()) >= st.bounds.max_size) return;

    for (std::size_t idx = from; idx < st.universe.size(); ++idx) {
        const auto p = st.universe[idx];
        if (p.u == 0 && (p.w != 1 || st.zero_u > 0)) continue;
        if (p.w == 0 && st.zero_w > 0) continue;
        if (++st.nodes > st.bounds.node_cap) throw SearchCapExceeded(st.nodes);

        st.chosen.push_back(idx);
        st.zero_u += p.u == 0;
        st.zero_w += p.w == 0;
        extend(st, idx, sum + st.terms[idx]);
        st.zero_u -= p.u == 0;
        st.zero_w -= p.w == 0;
        st.chosen.pop_back();
    }
}

}  // namespace

std::vector<Signature> search_unit_multisets(const SearchBounds& bounds) {
    if (bounds.max_a < 0 || bounds.max_b < 0 || bounds.max_size < 1) {
        throw std::invalid_argument("search bounds need max_a, max_b >= 0 and max_size >= 1");
    }
    SearchState st{bounds, {}, {}, {}, {}, 0, 0, 0};
    if (bounds.max_b < 1) return {};  // (0,1) is out of range

    for (std::int64_t a = bounds.max_a; a >= 0; --a) {
        for (std::int64_t b = bounds.max_b; b >= 0; --b) {
            st.universe.push_back({a, b});
            st.terms.push_back(term_x_pow_times_one_minus_x_pow(a, b));
        }
    }
    extend(st, 0, UnitPoly());

    std::sort(st.found.begin(), st.found.end(), [](const Signature& l, const Signature& r) {
        if (l.size() != r.size()) return l.size() < r.size();
        return l < r;
    });
    st.found.erase(std::unique(st.found.begin(), st.found.end()), st.found.end());
    return st.found;
}

std::vector<std::pair<std::int64_t, std::int64_t>> match_signature(const Signature& sig, std::int64_t max_m,
                                                                   std::int64_t max_n, SignatureMode mode) {
    if (max_m < 1 || max_n < 1) throw std::invalid_argument("match bounds must be >= 1");
    const Signature target = sig.in_mode(mode);
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t m = 1; m <= max_m; ++m) {
        for (std::int64_t n = 1; n <= max_n; ++n) {
            if (triangle_signature(m, n).in_mode(mode) == target) out.emplace_back(m, n);
        }
    }
    return out;
}

}  // namespace convexq
