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

#include <algorithm>
#include <stdexcept>
#include <string>

#include "odtool/numtheory.hpp"

namespace odtool {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    base %= m;
    for (; e != 0; e >>= 1) {
        if (e & 1U) r = mul_mod(r, base, m);
        base = mul_mod(base, base, m);
    }
    return r;
}

std::int64_t mod_nonneg(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

/// Splits a = p^k * u with p not dividing u.
std::pair<int, std::int64_t> split_power(std::int64_t a, std::int64_t p) {
    int k = 0;
    while (a % p == 0) {
        a /= p;
        ++k;
    }
    return {k, a};
}

/// An integer in the same square class as the rational r.
std::int64_t square_class_integer(const Rational& r) {
    if (r.is_zero()) throw std::invalid_argument("hilbert: zero argument");
    return detail::checked_mul(r.num(), r.den());
}

int sign_pow(int base, std::int64_t e) { return (e % 2 == 0) ? 1 : base; }

int hilbert_odd(std::int64_t a, std::int64_t b, std::int64_t p) {
    const auto [alpha, u] = split_power(a, p);
    const auto [beta, v] = split_power(b, p);
    // (p^alpha u, p^beta v) = (p,p)^(alpha beta) (p,v)^alpha (u,p)^beta (u,v), with (u,v) = 1.
    const int pp = legendre(-1, p);
    return sign_pow(pp, static_cast<std::int64_t>(alpha) * beta) * sign_pow(legendre(v, p), alpha) *
           sign_pow(legendre(u, p), beta);
}

int hilbert_dyadic(std::int64_t a, std::int64_t b) {
    const auto [alpha, u] = split_power(a, 2);
    const auto [beta, v] = split_power(b, 2);
    auto eps = [](std::int64_t x) { return mod_nonneg(x, 4) == 3 ? 1 : 0; };
    auto omega = [](std::int64_t x) {
        const std::int64_t r = mod_nonneg(x, 8);
        return (r == 3 || r == 5) ? 1 : 0;
    };
    const int e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
    return e % 2 == 0 ? 1 : -1;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1U) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

int legendre(std::int64_t r, std::int64_t p) {
    if (p <= 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("legendre: " + std::to_string(p) + " is not an odd prime");
    const std::int64_t rr = mod_nonneg(r, p);
    if (rr == 0) throw std::invalid_argument("legendre: " + std::to_string(p) + " divides " + std::to_string(r));
    const auto up = static_cast<std::uint64_t>(p);
    return pow_mod(static_cast<std::uint64_t>(rr), (up - 1) / 2, up) == 1 ? 1 : -1;
}

int hilbert(const Rational& a, const Rational& b, std::int64_t p) {
    if (p < 2 || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::invalid_argument("hilbert: " + std::to_string(p) + " is not prime");
    const std::int64_t x = square_class_integer(a);
    const std::int64_t y = square_class_integer(b);
    return p == 2 ? hilbert_dyadic(x, y) : hilbert_odd(x, y, p);
}

int s_p(std::span<const std::int64_t> type, std::int64_t p) {
    int s = 1;
    for (std::size_t i = 0; i < type.size(); ++i)
        for (std::size_t j = i + 1; j < type.size(); ++j) s *= hilbert(type[i], type[j], p);
    return s;
}

std::vector<std::int64_t> relevant_primes(std::span<const std::int64_t> type) {
    std::vector<std::int64_t> out{2};
    for (std::int64_t s : type) {
        if (s <= 0) throw std::invalid_argument("relevant_primes: entries must be positive");
        for (std::int64_t q = 2; q * q <= s; ++q) {
            if (s % q != 0) continue;
            out.push_back(q);
            while (s % q == 0) s /= q;
        }
        if (s > 1) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace odtool
