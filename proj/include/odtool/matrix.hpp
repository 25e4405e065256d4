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

#ifndef ODTOOL_MATRIX_HPP
#define ODTOOL_MATRIX_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "odtool/polynomial.hpp"

namespace odtool {

/// Thrown when two matrices of different orders meet in a binary operation.
class DimensionMismatch : public std::invalid_argument {
   public:
    DimensionMismatch(const char* op, std::size_t lhs, std::size_t rhs);
};

/// Square matrix whose entries are polynomials. Zero entries own no heap
/// storage, so large mostly-zero matrices (Gram matrices) stay cheap.
class PolyMatrix {
   public:
    PolyMatrix() = default;
    explicit PolyMatrix(std::size_t order) : order_(order), entries_(order * order) {}
    PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows);

    static PolyMatrix identity(std::size_t order);
    static PolyMatrix from_ints(const std::vector<std::vector<int>>& rows);

    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] const Polynomial& operator()(std::size_t i, std::size_t j) const { return entries_[i * order_ + j]; }
    Polynomial& operator()(std::size_t i, std::size_t j) { return entries_[i * order_ + j]; }

    [[nodiscard]] bool is_zero() const noexcept;
    [[nodiscard]] std::set<VarId> variables() const;
    /// True when every entry is a polynomial of degree at most one with integer coefficients.
    [[nodiscard]] bool is_integer_linear() const noexcept;

    PolyMatrix operator-() const;
    PolyMatrix& operator+=(const PolyMatrix& rhs);
    PolyMatrix& operator-=(const PolyMatrix& rhs);
    PolyMatrix& operator*=(const Polynomial& s);
    friend PolyMatrix operator+(PolyMatrix lhs, const PolyMatrix& rhs) { return lhs += rhs; }
    friend PolyMatrix operator-(PolyMatrix lhs, const PolyMatrix& rhs) { return lhs -= rhs; }
    friend PolyMatrix operator*(const Polynomial& s, PolyMatrix m) { return m *= s; }
    friend PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs);
    friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

    [[nodiscard]] std::string to_string(const VarRegistry& reg) const;

   private:
    std::size_t order_ = 0;
    std::vector<Polynomial> entries_;
};

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix transpose(const PolyMatrix& a);
PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix hadamard_product(const PolyMatrix& a, const PolyMatrix& b);

/// c_ij = a_{(j - i) mod n}
PolyMatrix circ(const std::vector<Polynomial>& first_row);
/// b_ij = a_{(i + j) mod n}
PolyMatrix backcirc(const std::vector<Polynomial>& first_row);

/// Square block matrix from a grid of equally sized blocks.
PolyMatrix block_matrix(const std::vector<std::vector<PolyMatrix>>& blocks);

/// a * b^T. Routed through variable decompositions when both operands are
/// integer-linear; the two routes agree exactly.
PolyMatrix mul_transpose(const PolyMatrix& a, const PolyMatrix& b);
/// a * b^T by plain polynomial arithmetic.
PolyMatrix mul_transpose_direct(const PolyMatrix& a, const PolyMatrix& b);

/// a * a^T.
PolyMatrix gram(const PolyMatrix& a);
PolyMatrix gram_direct(const PolyMatrix& a);

/// q when m == q * I, nothing otherwise.
std::optional<Polynomial> is_scalar_identity(const PolyMatrix& m);

PolyMatrix substitute(const PolyMatrix& a, const std::map<VarId, Polynomial>& assignment);
/// Every variable of `a` replaced by 1.
PolyMatrix substitute_all(const PolyMatrix& a, const Polynomial& value = Polynomial(1));

/// Integer matrix in compressed-row form.
class SparseIntMatrix {
   public:
    SparseIntMatrix() = default;
    explicit SparseIntMatrix(std::size_t order) : order_(order), row_start_(order + 1, 0) {}

    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] std::size_t nonzeros() const noexcept { return cols_.size(); }
    [[nodiscard]] std::int64_t at(std::size_t i, std::size_t j) const;

    /// Entries must be appended row by row with increasing columns.
    void push(std::size_t row, std::size_t col, std::int64_t value);
    void finish();

    [[nodiscard]] std::span<const std::uint32_t> row_cols(std::size_t i) const {
        return {cols_.data() + row_start_[i], row_start_[i + 1] - row_start_[i]};
    }
    [[nodiscard]] std::span<const std::int64_t> row_values(std::size_t i) const {
        return {values_.data() + row_start_[i], row_start_[i + 1] - row_start_[i]};
    }

    friend bool operator==(const SparseIntMatrix&, const SparseIntMatrix&) = default;

   private:
    std::size_t order_ = 0;
    std::size_t filled_rows_ = 0;
    std::vector<std::size_t> row_start_;
    std::vector<std::uint32_t> cols_;
    std::vector<std::int64_t> values_;
};

/// A = sum_v x_v * parts[v] + constant, for a matrix of integer linear forms.
class VarDecomposition {
   public:
    VarDecomposition(std::size_t order, std::map<VarId, SparseIntMatrix> parts, SparseIntMatrix constant);

    [[nodiscard]] std::size_t order() const noexcept { return order_; }
    [[nodiscard]] const std::map<VarId, SparseIntMatrix>& parts() const noexcept { return parts_; }
    [[nodiscard]] const SparseIntMatrix& constant() const noexcept { return constant_; }

    [[nodiscard]] PolyMatrix reassemble() const;

   private:
    std::size_t order_;
    std::map<VarId, SparseIntMatrix> parts_;
    SparseIntMatrix constant_;
};

/// Thrown by decompose_by_variable for an entry that is not an integer linear form.
class NonlinearEntry : public std::invalid_argument {
   public:
    NonlinearEntry(std::size_t row, std::size_t col);
    std::size_t row;
    std::size_t col;
};

VarDecomposition decompose_by_variable(const PolyMatrix& a);

PolyMatrix mul_transpose(const VarDecomposition& a, const VarDecomposition& b);
PolyMatrix gram(const VarDecomposition& a);

}  // namespace odtool

#endif
