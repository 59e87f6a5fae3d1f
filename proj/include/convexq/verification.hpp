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

#ifndef CONVEXQ_VERIFICATION_HPP
#define CONVEXQ_VERIFICATION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "convexq/enumeration.hpp"
#include "convexq/geometry.hpp"
#include "convexq/polyalgebra.hpp"

namespace convexq {

/// Σ_D (q−1)^{k−1} q^{1−k+(cross+gcdsum)/2}; the exponent is carried doubled.
QHalfPoly lhs_main_via_D(std::int64_t i, std::int64_t n);

/// q^{(ij−n)/2+1}, i.e. v^{i(n−i)−n+2}.
QHalfPoly rhs_main(std::int64_t i, std::int64_t n);

/// Σ_C (q−1)^{k−1} q^{−(k−1)+i(P)+b(P)}.
QHalfPoly lhs_main_via_polygons(const TriangleSpec& spec);

/// q^{(ij−n+gcd(i,j))/2+2}, the closed form of lhs_main_via_polygons.
QHalfPoly rhs_polygon_form(const TriangleSpec& spec);

/// Σ_C x^{u(P)} (1−x)^{v(P)−2}.
UnitPoly mainlem_sum(const TriangleSpec& spec);
/// Σ_C (1−x)^{u(P)} x^{v(P)−2}, the x ↔ 1−x image of mainlem_sum.
UnitPoly mainlem_process_sum(const TriangleSpec& spec);

/// Doubled exponent 2(1−k) + cross + gcdsum of one D-term.
std::int64_t doubled_exponent(const CompositionD& d);
/// Doubled exponent 2(−(k−1) + i(P) + b(P)) of one polygon-form term.
std::int64_t doubled_polygon_exponent(const ChainPolygon& poly);

struct LedgerEntry {
    std::string element;
    std::int64_t doubled_exponent = 0;
    std::size_t k = 0;
};

/// One compared identity. Both sides are kept in canonical text so checks over
/// different polynomial families share one record type.
struct IdentityCheck {
    std::string name;
    std::string lhs;
    std::string rhs;
    bool passed = false;
};

template <class Tag>
IdentityCheck make_check(std::string name, const SparsePoly<Tag>& lhs, const SparsePoly<Tag>& rhs) {
    return IdentityCheck{std::move(name), to_string(lhs), to_string(rhs), lhs == rhs};
}

struct IdentityReport {
    TriangleSpec spec;
    QHalfPoly lhs;
    QHalfPoly rhs;
    bool equal = false;  // lhs == rhs for the main identity
    std::vector<IdentityCheck> checks;
    std::vector<LedgerEntry> ledger;          // one entry per element of D
    std::vector<LedgerEntry> polygon_ledger;  // one entry per element of C

    bool all_passed() const;
    /// Index into checks of the first violated identity, if any.
    std::optional<std::size_t> first_failure() const;
};

/// Runs the five checks for the pair (i, n):
///  1. lhs_main_via_D == rhs_main
///  2. lhs_main_via_polygons == rhs_polygon_form
///  3. mainlem_sum == 1
///  4. mainlem_process_sum == 1
///  5. lhs_main_via_polygons == q^{1+gcd/2} · lhs_main_via_D
/// Throws std::invalid_argument unless 1 <= i < n.
IdentityReport verify_all(std::int64_t i, std::int64_t n);

/// Human-readable multi-line report; includes the ledgers when a check failed
/// or when `with_ledger` is set.
std::string format_report(const IdentityReport& report, bool with_ledger = false);

}  // namespace convexq

#endif
