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

#include "convexq/verification.hpp"

#include <algorithm>
#include <sstream>

namespace convexq {

namespace {

// (q−1)^{k−1} q^{e/2}
QHalfPoly weighted_term(std::size_t k, std::int64_t doubled) {
    return pow(q_minus_one(), k - 1) * q_monomial(doubled);
}

}  // namespace

std::int64_t doubled_exponent(const CompositionD& d) {
    return 2 * (1 - static_cast<std::int64_t>(d.k())) + cross_sum(d) + gcd_sum(d);
}

std::int64_t doubled_polygon_exponent(const ChainPolygon& poly) {
    const auto k = static_cast<std::int64_t>(poly.edge_count());
    return 2 * (-(k - 1) + interior_count(poly) + boundary_count(poly));
}

QHalfPoly lhs_main_via_D(std::int64_t i, std::int64_t n) {
    QHalfPoly sum;
    for (const auto& d : enumerate_D(i, n)) sum += weighted_term(d.k(), doubled_exponent(d));
    return sum;
}

QHalfPoly rhs_main(std::int64_t i, std::int64_t n) {
    if (i < 1 || i >= n) {
        throw std::invalid_argument("expected 1 <= i < n, got i=" + std::to_string(i) + " n=" + std::to_string(n));
    }
    return q_monomial(i * (n - i) - n + 2);
}

QHalfPoly lhs_main_via_polygons(const TriangleSpec& spec) {
    QHalfPoly sum;
    for (const auto& poly : enumerate_polygons(spec)) {
        sum += weighted_term(poly.edge_count(), doubled_polygon_exponent(poly));
    }
    return sum;
}

QHalfPoly rhs_polygon_form(const TriangleSpec& spec) {
    return q_monomial(spec.i() * spec.j() - spec.n() + spec.gcd_ij() + 4);
}

UnitPoly mainlem_sum(const TriangleSpec& spec) {
    UnitPoly sum;
    for (const auto& poly : enumerate_polygons(spec)) {
        sum += term_x_pow_times_one_minus_x_pow(u_count(poly), static_cast<std::int64_t>(poly.vertex_count()) - 2);
    }
    return sum;
}

UnitPoly mainlem_process_sum(const TriangleSpec& spec) {
    UnitPoly sum;
    for (const auto& poly : enumerate_polygons(spec)) {
        // (1−x)^u x^{v−2}
        sum += term_x_pow_times_one_minus_x_pow(static_cast<std::int64_t>(poly.vertex_count()) - 2, u_count(poly));
    }
    return sum;
}

bool IdentityReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const IdentityCheck& c) { return c.passed; });
}

std::optional<std::size_t> IdentityReport::first_failure() const {
    for (std::size_t m = 0; m < checks.size(); ++m) {
        if (!checks[m].passed) return m;
    }
    return std::nullopt;
}

IdentityReport verify_all(std::int64_t i, std::int64_t n) {
    const TriangleSpec spec = TriangleSpec::from_i_n(i, n);
    IdentityReport report{spec, {}, {}, false, {}, {}, {}};

    for (const auto& d : enumerate_D(i, n)) {
        const auto e = doubled_exponent(d);
        report.lhs += weighted_term(d.k(), e);
        report.ledger.push_back({to_string(d), e, d.k()});
    }
    report.rhs = rhs_main(i, n);
    report.equal = report.lhs == report.rhs;

    QHalfPoly via_polygons;
    for (const auto& poly : enumerate_polygons(spec)) {
        const auto e = doubled_polygon_exponent(poly);
        via_polygons += weighted_term(poly.edge_count(), e);
        report.polygon_ledger.push_back({to_string(poly), e, poly.edge_count()});
    }

    report.checks.push_back(make_check("main identity over D", report.lhs, report.rhs));
    report.checks.push_back(make_check("polygon form", via_polygons, rhs_polygon_form(spec)));
    report.checks.push_back(make_check("unit sum x^u (1-x)^(v-2)", mainlem_sum(spec), UnitPoly(1L)));
    report.checks.push_back(make_check("unit sum (1-x)^u x^(v-2)", mainlem_process_sum(spec), UnitPoly(1L)));
    report.checks.push_back(
        make_check("polygon form = q^(1+gcd/2) * D form", via_polygons, q_monomial(2 + spec.gcd_ij()) * report.lhs));
    return report;
}

std::string format_report(const IdentityReport& report, bool with_ledger) {
    std::ostringstream out;
    out << "i=" << report.spec.i() << " n=" << report.spec.n() << " j=" << report.spec.j() << "\n";
    out << "lhs = " << to_string(report.lhs) << "\n";
    out << "rhs = " << to_string(report.rhs) << "\n";
    for (const auto& c : report.checks) {
        out << (c.passed ? "[ok]   " : "[FAIL] ") << c.name;
        if (!c.passed) out << ": " << c.lhs << " != " << c.rhs;
        out << "\n";
    }
    const auto failure = report.first_failure();
    if (failure) out << "first violated check: " << report.checks[*failure].name << "\n";
    if (failure || with_ledger) {
        out << "ledger (D element, doubled exponent, k):\n";
        for (const auto& e : report.ledger) out << "  " << e.element << " " << e.doubled_exponent << " " << e.k << "\n";
        out << "ledger (polygon, doubled exponent, k):\n";
        for (const auto& e : report.polygon_ledger) {
            out << "  " << e.element << " " << e.doubled_exponent << " " << e.k << "\n";
        }
    }
    out << (report.all_passed() ? "all checks pass" : "CHECK FAILED") << "\n";
    return out.str();
}

}  // namespace convexq
