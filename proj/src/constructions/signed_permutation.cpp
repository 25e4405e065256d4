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

#include "odtool/signed_permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace odtool {

SignedPermutation::SignedPermutation(std::vector<std::uint32_t> image, std::vector<std::int8_t> signs)
    : image_(std::move(image)), signs_(std::move(signs)) {
    if (image_.size() != signs_.size()) throw std::invalid_argument("signed permutation: size mismatch");
    std::vector<bool> hit(image_.size(), false);
    for (std::size_t i = 0; i < image_.size(); ++i) {
        if (image_[i] >= image_.size() || hit[image_[i]]) throw std::invalid_argument("signed permutation: not a bijection");
        hit[image_[i]] = true;
        if (signs_[i] != 1 && signs_[i] != -1) throw std::invalid_argument("signed permutation: sign must be +-1");
    }
}

SignedPermutation SignedPermutation::identity(std::size_t order) {
    std::vector<std::uint32_t> image(order);
    std::iota(image.begin(), image.end(), 0U);
    return SignedPermutation(std::move(image), std::vector<std::int8_t>(order, 1));
}

std::optional<SignedPermutation> SignedPermutation::from_matrix(const PolyMatrix& m) {
    const std::size_t n = m.order();
    std::vector<std::uint32_t> image(n);
    std::vector<std::int8_t> signs(n);
    std::vector<bool> col_used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t found = 0;
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial& e = m(i, j);
            if (e.is_zero()) continue;
            if (e == Polynomial(1)) {
                signs[i] = 1;
            } else if (e == Polynomial(-1)) {
                signs[i] = -1;
            } else {
                return std::nullopt;
            }
            if (col_used[j]) return std::nullopt;
            col_used[j] = true;
            image[i] = static_cast<std::uint32_t>(j);
            ++found;
        }
        if (found != 1) return std::nullopt;
    }
    return SignedPermutation(std::move(image), std::move(signs));
}

SignedPermutation SignedPermutation::transpose() const {
    std::vector<std::uint32_t> image(order());
    std::vector<std::int8_t> signs(order());
    for (std::size_t i = 0; i < order(); ++i) {
        image[image_[i]] = static_cast<std::uint32_t>(i);
        signs[image_[i]] = signs_[i];
    }
    return SignedPermutation(std::move(image), std::move(signs));
}

SignedPermutation SignedPermutation::operator-() const {
    SignedPermutation out = *this;
    for (auto& s : out.signs_) s = static_cast<std::int8_t>(-s);
    return out;
}

SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.order() != b.order()) throw DimensionMismatch("signed permutation product", a.order(), b.order());
    std::vector<std::uint32_t> image(a.order());
    std::vector<std::int8_t> signs(a.order());
    for (std::size_t i = 0; i < a.order(); ++i) {
        const std::uint32_t mid = a.image_[i];
        image[i] = b.image_[mid];
        signs[i] = static_cast<std::int8_t>(a.signs_[i] * b.signs_[mid]);
    }
    return SignedPermutation(std::move(image), std::move(signs));
}

PolyMatrix SignedPermutation::to_matrix() const {
    PolyMatrix m(order());
    for (std::size_t i = 0; i < order(); ++i) m(i, image_[i]) = Polynomial(signs_[i]);
    return m;
}

PolyMatrix SignedPermutation::apply(const PolyMatrix& m) const {
    if (m.order() != order()) throw DimensionMismatch("signed permutation apply", order(), m.order());
    PolyMatrix out(order());
    for (std::size_t i = 0; i < order(); ++i)
        for (std::size_t j = 0; j < order(); ++j)
            out(i, j) = signs_[i] > 0 ? m(image_[i], j) : -m(image_[i], j);
    return out;
}

SignedPermutation kron(const SignedPermutation& a, const SignedPermutation& b) {
    const std::size_t n = a.order();
    const std::size_t m = b.order();
    std::vector<std::uint32_t> image(n * m);
    std::vector<std::int8_t> signs(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < m; ++k) {
            image[i * m + k] = static_cast<std::uint32_t>(a.image(i) * m + b.image(k));
            signs[i * m + k] = static_cast<std::int8_t>(a.sign(i) * b.sign(k));
        }
    return SignedPermutation(std::move(image), std::move(signs));
}

bool amicable(const SignedPermutation& a, const SignedPermutation& b) { return a * b.transpose() == b * a.transpose(); }

bool antiamicable(const SignedPermutation& a, const SignedPermutation& b) {
    return a * b.transpose() == -(b * a.transpose());
}

bool disjoint(const SignedPermutation& a, const SignedPermutation& b) {
    if (a.order() != b.order()) throw DimensionMismatch("signed permutation disjoint", a.order(), b.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        if (a.image(i) == b.image(i)) return false;
    return true;
}

}  // namespace odtool
