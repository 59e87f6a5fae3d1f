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

#ifndef CONVEXQ_POLYALGEBRA_HPP
#define CONVEXQ_POLYALGEBRA_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace convexq {

using Integer = mpz_class;
using Rational = mpq_class;

/// Laurent polynomials in v with q = v², so q^{e/2} is stored at exponent e.
struct QHalfTag {
    static constexpr bool allow_negative = true;
};

/// Ordinary polynomials in x.
struct UnitTag {
    static constexpr bool allow_negative = false;
};

/// Sparse univariate polynomial with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so two polynomials are
/// equal exactly when their term maps are.
template <class Tag>
class SparsePoly {
   public:
    using Exponent = std::int64_t;
    using Terms = std::map<Exponent, Integer>;

    SparsePoly() = default;
    SparsePoly(long c) : SparsePoly(Integer(c)) {}  // NOLINT: constants convert implicitly
    SparsePoly(const Integer& c) {                  // NOLINT
        if (c != 0) terms_.emplace(0, c);
    }

    static SparsePoly monomial(Exponent e, const Integer& c = 1) {
        check_exponent(e);
        SparsePoly p;
        if (c != 0) p.terms_.emplace(e, c);
        return p;
    }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    Integer coefficient(Exponent e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    std::optional<Exponent> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.rbegin()->first;
    }
    std::optional<Exponent> low_degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first;
    }

    void add_term(Exponent e, const Integer& c) {
        check_exponent(e);
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SparsePoly& operator+=(const SparsePoly& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, c);
        return *this;
    }
    SparsePoly& operator-=(const SparsePoly& rhs) {
        for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
        return *this;
    }
    SparsePoly& operator*=(const SparsePoly& rhs) { return *this = *this * rhs; }

    friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
    friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
    friend SparsePoly operator-(const SparsePoly& p) {
        SparsePoly out;
        for (const auto& [e, c] : p.terms_) out.terms_.emplace(e, -c);
        return out;
    }
    friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
        SparsePoly out;
        for (const auto& [e1, c1] : lhs.terms_) {
            for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
        }
        return out;
    }
    friend bool operator==(const SparsePoly& lhs, const SparsePoly& rhs) { return lhs.terms_ == rhs.terms_; }

   private:
    static void check_exponent(Exponent e) {
        if constexpr (!Tag::allow_negative) {
            if (e < 0) throw std::domain_error("negative exponent in an ordinary polynomial");
        }
    }

    Terms terms_;
};

using QHalfPoly = SparsePoly<QHalfTag>;
using UnitPoly = SparsePoly<UnitTag>;

/// Repeated squaring; pow(p, 0) is 1.
template <class Tag>
SparsePoly<Tag> pow(SparsePoly<Tag> base, std::uint64_t e) {
    SparsePoly<Tag> result(1L);
    while (e > 0) {
        if (e & 1U) result *= base;
        e >>= 1U;
        if (e > 0) base *= base;
    }
    return result;
}

/// q^{e/2}, i.e. v^e.
QHalfPoly q_monomial(std::int64_t doubled_exponent);
/// q − 1 = v² − 1.
QHalfPoly q_minus_one();
UnitPoly x_monomial(std::int64_t e);
/// x^a (1−x)^b expanded with signed binomial coefficients.
UnitPoly term_x_pow_times_one_minus_x_pow(std::int64_t a, std::int64_t b);

/// Exact value at variable = num/den (for QHalfPoly the variable is v).
/// Throws std::domain_error on a zero denominator, or on num = 0 with negative exponents present.
template <class Tag>
Rational eval_rational(const SparsePoly<Tag>& p, const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("evaluation with zero denominator");
    Rational total = 0;
    for (const auto& [e, c] : p.terms()) {
        const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
        Integer top, bottom;
        mpz_pow_ui(top.get_mpz_t(), num.get_mpz_t(), mag);
        mpz_pow_ui(bottom.get_mpz_t(), den.get_mpz_t(), mag);
        if (e < 0) std::swap(top, bottom);
        if (bottom == 0) throw std::domain_error("negative power of zero");
        Rational term(c * top, bottom);
        term.canonicalize();
        total += term;
    }
    return total;
}

template <class Tag>
Rational eval_rational(const SparsePoly<Tag>& p, const Rational& at) {
    return eval_rational(p, at.get_num(), at.get_den());
}

/// Decreasing exponents, "q^(e/2)" for odd v-exponents, e.g. "q^3 - 2*q^(3/2) + 1".
std::string to_string(const QHalfPoly& p);
/// Decreasing exponents in x, e.g. "-x^3 + x - 1".
std::string to_string(const UnitPoly& p);

}  // namespace convexq

#endif
