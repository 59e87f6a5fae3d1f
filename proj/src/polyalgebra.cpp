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

#include "convexq/polyalgebra.hpp"

namespace convexq {

namespace {

// Shared renderer: `power` turns an exponent into the variable part ("" for 0).
template <class Tag, class Power>
std::string render(const SparsePoly<Tag>& p, Power power) {
    if (p.is_zero()) return "0";
    std::string out;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        const bool negative = c < 0;
        const Integer mag = negative ? Integer(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const std::string var = power(e);
        if (var.empty()) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += var;
        }
    }
    return out;
}

}  // namespace

QHalfPoly q_monomial(std::int64_t doubled_exponent) { return QHalfPoly::monomial(doubled_exponent); }

QHalfPoly q_minus_one() { return QHalfPoly::monomial(2) - QHalfPoly(1L); }

UnitPoly x_monomial(std::int64_t e) { return UnitPoly::monomial(e); }

UnitPoly term_x_pow_times_one_minus_x_pow(std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw std::domain_error("x^a (1-x)^b needs a, b >= 0");
    UnitPoly out;
    Integer binom = 1;
    for (std::int64_t t = 0; t <= b; ++t) {
        out.add_term(a + t, (t % 2 == 0) ? binom : Integer(-binom));
        // C(b, t+1) = C(b, t) * (b - t) / (t + 1)
        binom = binom * (b - t) / (t + 1);
    }
    return out;
}

std::string to_string(const QHalfPoly& p) {
    return render(p, [](std::int64_t e) -> std::string {
        if (e == 0) return "";
        if (e == 2) return "q";
        if (e % 2 == 0) {
            const auto half = e / 2;
            return half < 0 ? "q^(" + std::to_string(half) + ")" : "q^" + std::to_string(half);
        }
        return "q^(" + std::to_string(e) + "/2)";
    });
}

std::string to_string(const UnitPoly& p) {
    return render(p, [](std::int64_t e) -> std::string {
        if (e == 0) return "";
        if (e == 1) return "x";
        return "x^" + std::to_string(e);
    });
}

}  // namespace convexq
