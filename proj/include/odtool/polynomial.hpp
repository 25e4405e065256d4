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

#ifndef ODTOOL_POLYNOMIAL_HPP
#define ODTOOL_POLYNOMIAL_HPP

#include <boost/container/small_vector.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "odtool/rational.hpp"

namespace odtool {

/// Index of a commuting variable inside a VarRegistry.
struct VarId {
    std::uint32_t value = 0;
    friend constexpr auto operator<=>(const VarId&, const VarId&) noexcept = default;
};

/// Owns the variable names of a family of polynomials. Ids are dense and
/// never reused; names are unique.
class VarRegistry {
   public:
    static constexpr std::size_t kDefaultCapacity = 1U << 16;

    explicit VarRegistry(std::size_t capacity = kDefaultCapacity) : capacity_(capacity) {}

    /// Id of `name`, creating it if absent.
    VarId intern(std::string_view name);
    /// A brand-new variable whose name starts with `hint`.
    VarId fresh(std::string_view hint);

    [[nodiscard]] std::optional<VarId> find(std::string_view name) const;
    [[nodiscard]] const std::string& name(VarId v) const;
    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
    [[nodiscard]] std::size_t capacity() const noexcept { return capacity_; }

   private:
    VarId add(std::string name);

    std::size_t capacity_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::uint32_t> ids_;
};

/// Thrown when a registry has no room for another variable.
class RegistryExhausted : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct VarPower {
    VarId var;
    std::uint32_t exp = 1;
    friend constexpr bool operator==(const VarPower&, const VarPower&) noexcept = default;
};

/// Product of variable powers, stored sorted by VarId with positive exponents.
class Monomial {
   public:
    Monomial() = default;
    explicit Monomial(VarId v, std::uint32_t exp = 1);

    [[nodiscard]] std::span<const VarPower> powers() const noexcept { return {powers_.data(), powers_.size()}; }
    [[nodiscard]] std::uint32_t degree() const noexcept { return degree_; }
    [[nodiscard]] bool is_one() const noexcept { return powers_.empty(); }
    [[nodiscard]] std::uint32_t exponent(VarId v) const noexcept;

    friend Monomial operator*(const Monomial& lhs, const Monomial& rhs);
    friend bool operator==(const Monomial& lhs, const Monomial& rhs) noexcept {
        return lhs.degree_ == rhs.degree_ && lhs.powers_ == rhs.powers_;
    }

   private:
    boost::container::small_vector<VarPower, 2> powers_;
    std::uint32_t degree_ = 0;
};

/// Graded lexicographic order; variables with smaller ids are more significant.
/// Returns negative, zero or positive.
int grlex_compare(const Monomial& lhs, const Monomial& rhs) noexcept;

struct Term {
    Monomial mono;
    Rational coeff;
    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted by descending grlex order with no zero coefficients,
/// so two polynomials are equal exactly when their term lists are equal.
class Polynomial {
   public:
    Polynomial() = default;
    Polynomial(Rational c);  // NOLINT(google-explicit-constructor)
    Polynomial(std::int64_t c) : Polynomial(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    Polynomial(int c) : Polynomial(Rational(c)) {}           // NOLINT(google-explicit-constructor)

    static Polynomial variable(VarId v, Rational coeff = 1);
    static Polynomial monomial(Monomial m, Rational coeff = 1);
    /// Builds from arbitrary terms; duplicates are combined and zeros dropped.
    static Polynomial from_terms(std::vector<Term> terms);

    [[nodiscard]] std::span<const Term> terms() const noexcept { return terms_; }
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept;
    [[nodiscard]] std::uint32_t degree() const noexcept;
    [[nodiscard]] Rational coefficient(const Monomial& m) const;
    [[nodiscard]] Rational constant_term() const { return coefficient(Monomial{}); }
    void collect_variables(std::set<VarId>& out) const;

    /// If this polynomial is `c * v` for a single variable, returns (v, c).
    [[nodiscard]] std::optional<std::pair<VarId, Rational>> as_scaled_variable() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& c);

    /// this += a * b without materialising the product.
    void add_product(const Polynomial& a, const Polynomial& b);

    friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
    friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
    friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

    [[nodiscard]] Polynomial substitute(const std::map<VarId, Polynomial>& assignment) const;
    [[nodiscard]] std::string to_string(const VarRegistry& reg) const;

   private:
    void add_term(Monomial m, const Rational& c);

    std::vector<Term> terms_;
};

}  // namespace odtool

#endif
