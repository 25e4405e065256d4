/*
   Copyright 2026 The odtool Authors

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

#ifndef ODTOOL_RATIONAL_HPP
#define ODTOOL_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace odtool {

/// Exact rational number over 64-bit integers. Arithmetic is overflow-checked
/// and throws std::overflow_error rather than wrapping, so a result is either
/// exact or absent.
class Rational {
   public:
    constexpr Rational() noexcept = default;
    constexpr Rational(std::int64_t n) noexcept : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d);

    [[nodiscard]] constexpr std::int64_t num() const noexcept { return num_; }
    [[nodiscard]] constexpr std::int64_t den() const noexcept { return den_; }
    [[nodiscard]] constexpr bool is_zero() const noexcept { return num_ == 0; }
    [[nodiscard]] constexpr bool is_integer() const noexcept { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend constexpr bool operator==(const Rational&, const Rational&) noexcept = default;
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

    [[nodiscard]] std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

   private:
    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

namespace detail {

[[noreturn]] inline void rational_overflow() { throw std::overflow_error("rational arithmetic overflow"); }

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) rational_overflow();
    return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) rational_overflow();
    return r;
}

}  // namespace detail

inline Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
        n = detail::checked_mul(n, -1);
        d = detail::checked_mul(d, -1);
    }
    const std::int64_t g = std::gcd(n, d);
    num_ = n / g;
    den_ = d / g;
}

inline Rational Rational::operator-() const {
    Rational r;
    r.num_ = detail::checked_mul(num_, -1);
    r.den_ = den_;
    return r;
}

inline Rational& Rational::operator+=(const Rational& rhs) {
    if (den_ == 1 && rhs.den_ == 1) {
        num_ = detail::checked_add(num_, rhs.num_);
        return *this;
    }
    const std::int64_t g = std::gcd(den_, rhs.den_);
    const std::int64_t l = den_ / g;
    *this = Rational(detail::checked_add(detail::checked_mul(num_, rhs.den_ / g), detail::checked_mul(rhs.num_, l)),
                     detail::checked_mul(l, rhs.den_));
    return *this;
}

inline Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

inline Rational& Rational::operator*=(const Rational& rhs) {
    if (den_ == 1 && rhs.den_ == 1) {
        num_ = detail::checked_mul(num_, rhs.num_);
        return *this;
    }
    // cross-cancel first to keep intermediates small
    const std::int64_t g1 = std::gcd(num_, rhs.den_);
    const std::int64_t g2 = std::gcd(rhs.num_, den_);
    const std::int64_t n = detail::checked_mul(num_ / (g1 ? g1 : 1), rhs.num_ / (g2 ? g2 : 1));
    const std::int64_t d = detail::checked_mul(den_ / (g2 ? g2 : 1), rhs.den_ / (g1 ? g1 : 1));
    *this = Rational(n, d);
    return *this;
}

inline Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.num_ == 0) throw std::domain_error("rational division by zero");
    Rational inv;
    inv.num_ = rhs.den_;
    inv.den_ = rhs.num_;
    if (inv.den_ < 0) {
        inv.num_ = detail::checked_mul(inv.num_, -1);
        inv.den_ = detail::checked_mul(inv.den_, -1);
    }
    return *this *= inv;
}

inline std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
    const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
    return l <=> r;
}

inline std::string Rational::to_string() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace odtool

#endif
