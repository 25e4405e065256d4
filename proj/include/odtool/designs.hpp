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

#ifndef ODTOOL_DESIGNS_HPP
#define ODTOOL_DESIGNS_HPP

#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "odtool/matrix.hpp"

namespace odtool {

/// Claimed type of an orthogonal design: weight i is bound to variable i.
class TypeVector {
   public:
    TypeVector() = default;
    TypeVector(std::vector<std::int64_t> weights, std::vector<VarId> vars);

    [[nodiscard]] std::span<const std::int64_t> weights() const noexcept { return weights_; }
    [[nodiscard]] std::span<const VarId> vars() const noexcept { return vars_; }
    [[nodiscard]] std::size_t size() const noexcept { return vars_.size(); }
    [[nodiscard]] std::int64_t sum() const noexcept;
    [[nodiscard]] std::optional<std::int64_t> weight_of(VarId v) const;

    /// Concatenation; the two variable lists must be disjoint.
    [[nodiscard]] TypeVector concat(const TypeVector& other) const;
    [[nodiscard]] TypeVector renamed(const std::map<VarId, VarId>& mapping) const;

    /// "(a:4, x:10, b:34)"
    [[nodiscard]] std::string to_string(const VarRegistry& reg) const;
    /// "4,10,34"
    [[nodiscard]] std::string weights_string() const;

    friend bool operator==(const TypeVector&, const TypeVector&) = default;

   private:
    std::vector<std::int64_t> weights_;
    std::vector<VarId> vars_;
};

struct Witness {
    std::optional<std::size_t> row;
    std::optional<std::size_t> col;
    std::optional<Polynomial> entry;
    std::string condition;
    /// Variable whose weight disagrees with the claim, for type mismatches.
    std::optional<VarId> var;
};

struct CheckResult {
    std::string name;
    bool passed = false;
};

/// Outcome of a verification. A failing report always carries a witness
/// naming the first violated condition.
struct VerificationReport {
    bool pass = false;
    std::string claim;
    std::optional<Witness> witness;
    /// Every sub-check that was evaluated, in evaluation order.
    std::vector<CheckResult> checks;

    explicit operator bool() const noexcept { return pass; }
    [[nodiscard]] std::string describe(const VarRegistry& reg) const;

    static VerificationReport ok(std::string claim);
    static VerificationReport fail(std::string claim, Witness w);
};

class VerificationFailed : public std::runtime_error {
   public:
    VerificationFailed(VerificationReport report, const VarRegistry& reg);
    VerificationReport report;
};

class OverlappingVariables : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

struct Aod {
    PolyMatrix c;
    PolyMatrix d;
    TypeVector c_type;
    TypeVector d_type;
};

struct ProductDesign {
    PolyMatrix m1;
    PolyMatrix m2;
    PolyMatrix n;
    TypeVector m1_type;
    TypeVector m2_type;
    TypeVector n_type;
};

/// An AOD (C; D1 + D2) whose second side is split off one variable.
struct AodSplit {
    PolyMatrix c;
    PolyMatrix d1;
    PolyMatrix d2;
    TypeVector c_type;
    TypeVector d1_type;
    TypeVector d2_type;
};

/// Splits the D side of `aod` into the part carrying `var` and the rest.
AodSplit split_aod(const Aod& aod, VarId var);

/// Checks, in order: entry shape (0 or +-x for x in t), Gram = q*I, and q = sum c_j x_j^2 per variable.
VerificationReport verify_od(const PolyMatrix& a, const TypeVector& t);
/// The type read off the Gram form, variables in increasing id order.
std::optional<TypeVector> infer_type(const PolyMatrix& a);

VerificationReport is_full(const PolyMatrix& a);
VerificationReport verify_amicable(const PolyMatrix& a, const PolyMatrix& b);
VerificationReport verify_antiamicable(const PolyMatrix& a, const PolyMatrix& b);
VerificationReport verify_disjoint(const PolyMatrix& a, const PolyMatrix& b);
VerificationReport verify_pairwise_amicable(std::span<const PolyMatrix> mats);

/// Throws OverlappingVariables when the two types share a variable.
VerificationReport verify_aod(const PolyMatrix& c, const PolyMatrix& d, const TypeVector& tc, const TypeVector& td);
inline VerificationReport verify_aod(const Aod& aod) { return verify_aod(aod.c, aod.d, aod.c_type, aod.d_type); }

/// Runs every product-design condition; the verdict names the first one that fails.
VerificationReport verify_pd(const PolyMatrix& m1, const PolyMatrix& m2, const PolyMatrix& n, const TypeVector& t1,
                             const TypeVector& t2, const TypeVector& tn);
inline VerificationReport verify_pd(const ProductDesign& pd) {
    return verify_pd(pd.m1, pd.m2, pd.n, pd.m1_type, pd.m2_type, pd.n_type);
}

struct Renamed {
    PolyMatrix matrix;
    std::map<VarId, VarId> mapping;  // old -> new
};

/// Moves every variable of `a` onto a new registry id.
Renamed fresh_vars(const PolyMatrix& a, VarRegistry& reg);
PolyMatrix rename(const PolyMatrix& a, const std::map<VarId, VarId>& mapping);

/// All variables set to 1 after checking that `a` is an OD of type `t`.
PolyMatrix collapse(const PolyMatrix& a, const TypeVector& t, const VarRegistry& reg);

/// [[C, D], [D, -C]]
PolyMatrix aod_to_od(const PolyMatrix& c, const PolyMatrix& d);

}  // namespace odtool

#endif
