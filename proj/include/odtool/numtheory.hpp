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

#ifndef ODTOOL_NUMTHEORY_HPP
#define ODTOOL_NUMTHEORY_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "odtool/rational.hpp"

namespace odtool {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// Legendre symbol (r/p) by Euler's criterion. Throws std::invalid_argument
/// unless p is an odd prime not dividing r.
int legendre(std::int64_t r, std::int64_t p);

/// p-adic Hilbert symbol of two nonzero rationals. Odd p uses the
/// reduction to Legendre symbols; p = 2 uses the dyadic formula.
int hilbert(const Rational& a, const Rational& b, std::int64_t p);

/// Product of (s_i, s_j)_p over all positions i < j.
int s_p(std::span<const std::int64_t> type, std::int64_t p);

/// 2 together with every odd prime dividing some entry, ascending.
std::vector<std::int64_t> relevant_primes(std::span<const std::int64_t> type);

/// rho(n) = 8c + 2^d where n = 2^(4c+d) * odd.
std::int64_t radon_hurwitz(std::int64_t n);

/// 2a + 2 where n = 2^a * odd: bound on the total number of variables of an amicable design.
std::int64_t wolfe_bound(std::int64_t n);

/// delta indexed by [t mod 4][b].
const std::array<std::array<int, 4>, 4>& delta_table();

/// 8a - t + delta + 1 where n = 2^(4a+b) * odd: bound on the variables of
/// one side of an amicable design whose other side has t variables.
std::int64_t rho_t_bound(std::int64_t n, std::int64_t t);

struct ChainStep {
    /// Stable identifier of the rule applied.
    std::string rule;
    /// Human-readable statement of the step, ASCII only.
    std::string text;
};

struct ExistenceVerdict {
    enum class Status { exists, not_exists, undecided };
    Status status = Status::undecided;
    std::vector<ChainStep> chain;

    /// "exists", "does not exist", "undecided"
    [[nodiscard]] std::string status_string() const;
    /// Numbered chain, one step per line.
    [[nodiscard]] std::string render() const;
};

/// Existence of a rational family of the given type and order. Decided
/// only where the nine-variable criterion for order 16 applies.
ExistenceVerdict rational_family_exists(std::span<const std::int64_t> type, std::int64_t order);

/// Existence of a product design of order n and type (1,1,1; 1,1,1; n-3).
ExistenceVerdict decide_pd133(std::int64_t n);

}  // namespace odtool

#endif
