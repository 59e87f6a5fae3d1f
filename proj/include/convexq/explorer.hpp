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

#ifndef CONVEXQ_EXPLORER_HPP
#define CONVEXQ_EXPLORER_HPP

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace convexq {

/// Exponent pair (u, w) standing for the term x^u (1−x)^w.
struct SignaturePair {
    std::int64_t u = 0;
    std::int64_t w = 0;
    friend auto operator<=>(const SignaturePair&, const SignaturePair&) = default;
};

enum class SignatureMode { multiset, set };

/// Multiset of exponent pairs, kept sorted in decreasing order.
class Signature {
   public:
    Signature() = default;
    explicit Signature(std::vector<SignaturePair> pairs);

    const std::vector<SignaturePair>& pairs() const noexcept { return pairs_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool contains(SignaturePair p) const;
    /// Drops repeated pairs.
    Signature as_set() const;
    Signature in_mode(SignatureMode mode) const { return mode == SignatureMode::set ? as_set() : *this; }

    friend auto operator<=>(const Signature&, const Signature&) = default;

   private:
    std::vector<SignaturePair> pairs_;
};

/// "{(3,0),(2,1),(1,1),(0,1)}"
std::string to_string(const Signature& sig);

/// Multiset {(u(P), v(P)−2)} over every convex chain of the (m, n) triangle.
Signature triangle_signature(std::int64_t m, std::int64_t n);

/// True iff Σ x^u (1−x)^w over the pairs is exactly the constant 1.
bool is_unit_multiset(const Signature& sig);

struct SearchBounds {
    std::int64_t max_a = 1;
    std::int64_t max_b = 1;
    std::int64_t max_size = 1;
    std::uint64_t node_cap = 20'000'000;
};

class SearchCapExceeded : public std::runtime_error {
   public:
    explicit SearchCapExceeded(std::uint64_t nodes);
    std::uint64_t nodes() const noexcept { return nodes_; }

   private:
    std::uint64_t nodes_;
};

/// Every multiset of pairs with u <= max_a, w <= max_b and at most max_size
/// elements that contains (0,1) and sums to 1. Exhaustive; sorted by size,
/// then by pairs. Throws SearchCapExceeded rather than truncating, and
/// std::invalid_argument for negative bounds or max_size < 1.
std::vector<Signature> search_unit_multisets(const SearchBounds& bounds);

/// All (m, n) with 1 <= m <= max_m, 1 <= n <= max_n whose triangle signature equals sig.
std::vector<std::pair<std::int64_t, std::int64_t>> match_signature(const Signature& sig, std::int64_t max_m,
                                                                   std::int64_t max_n,
                                                                   SignatureMode mode = SignatureMode::multiset);

}  // namespace convexq

#endif
