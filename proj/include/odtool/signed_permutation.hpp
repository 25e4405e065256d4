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

#ifndef ODTOOL_SIGNED_PERMUTATION_HPP
#define ODTOOL_SIGNED_PERMUTATION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "odtool/matrix.hpp"

namespace odtool {

/// Matrix with exactly one nonzero entry, +1 or -1, in every row and column.
/// Row i holds sign(i) in column image(i).
class SignedPermutation {
   public:
    SignedPermutation() = default;
    SignedPermutation(std::vector<std::uint32_t> image, std::vector<std::int8_t> signs);

    static SignedPermutation identity(std::size_t order);
    /// Nothing when `m` is not a signed permutation matrix.
    static std::optional<SignedPermutation> from_matrix(const PolyMatrix& m);

    [[nodiscard]] std::size_t order() const noexcept { return image_.size(); }
    [[nodiscard]] std::uint32_t image(std::size_t row) const { return image_[row]; }
    [[nodiscard]] int sign(std::size_t row) const { return signs_[row]; }

    [[nodiscard]] SignedPermutation transpose() const;
    SignedPermutation operator-() const;
    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
    friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;

    [[nodiscard]] PolyMatrix to_matrix() const;
    /// this * m, computed by permuting and negating rows.
    [[nodiscard]] PolyMatrix apply(const PolyMatrix& m) const;

   private:
    std::vector<std::uint32_t> image_;
    std::vector<std::int8_t> signs_;
};

SignedPermutation kron(const SignedPermutation& a, const SignedPermutation& b);

bool amicable(const SignedPermutation& a, const SignedPermutation& b);
bool antiamicable(const SignedPermutation& a, const SignedPermutation& b);
/// No position is nonzero in both.
bool disjoint(const SignedPermutation& a, const SignedPermutation& b);

}  // namespace odtool

#endif
