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

#include "odtool/designs.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace odtool {

TypeVector::TypeVector(std::vector<std::int64_t> weights, std::vector<VarId> vars)
    : weights_(std::move(weights)), vars_(std::move(vars)) {
    if (weights_.empty()) throw std::invalid_argument("type vector must be nonempty");
    if (weights_.size() != vars_.size()) throw std::invalid_argument("type vector needs one variable per weight");
    for (auto w : weights_)
        if (w <= 0) throw std::invalid_argument("type weights must be positive");
    std::set<VarId> seen(vars_.begin(), vars_.end());
    if (seen.size() != vars_.size()) throw std::invalid_argument("type vector variables must be distinct");
}

std::int64_t TypeVector::sum() const noexcept { return std::accumulate(weights_.begin(), weights_.end(), std::int64_t{0}); }

std::optional<std::int64_t> TypeVector::weight_of(VarId v) const {
    for (std::size_t k = 0; k < vars_.size(); ++k)
        if (vars_[k] == v) return weights_[k];
    return std::nullopt;
}

TypeVector TypeVector::concat(const TypeVector& other) const {
    auto w = weights_;
    auto v = vars_;
    w.insert(w.end(), other.weights_.begin(), other.weights_.end());
    v.insert(v.end(), other.vars_.begin(), other.vars_.end());
    return TypeVector(std::move(w), std::move(v));
}

TypeVector TypeVector::renamed(const std::map<VarId, VarId>& mapping) const {
    auto v = vars_;
    for (auto& x : v)
        if (auto it = mapping.find(x); it != mapping.end()) x = it->second;
    return TypeVector(weights_, std::move(v));
}

std::string TypeVector::to_string(const VarRegistry& reg) const {
    std::string out = "(";
    for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (k) out += ", ";
        out += reg.name(vars_[k]) + ":" + std::to_string(weights_[k]);
    }
    return out + ")";
}

std::string TypeVector::weights_string() const {
    std::string out;
    for (std::size_t k = 0; k < weights_.size(); ++k) out += (k ? "," : "") + std::to_string(weights_[k]);
    return out;
}

VerificationReport VerificationReport::ok(std::string claim) {
    VerificationReport r;
    r.pass = true;
    r.claim = std::move(claim);
    return r;
}

VerificationReport VerificationReport::fail(std::string claim, Witness w) {
    VerificationReport r;
    r.pass = false;
    r.claim = std::move(claim);
    r.witness = std::move(w);
    return r;
}

std::string VerificationReport::describe(const VarRegistry& reg) const {
    std::ostringstream os;
    os << (pass ? "PASS " : "FAIL ") << claim;
    if (witness) {
        os << ": ";
        if (witness->var) os << "variable " << reg.name(*witness->var) << ": ";
        os << witness->condition;
        if (witness->row && witness->col) os << " at (" << *witness->row << ", " << *witness->col << ")";
        if (witness->entry) os << ": " << witness->entry->to_string(reg);
    }
    return os.str();
}

VerificationFailed::VerificationFailed(VerificationReport r, const VarRegistry& reg)
    : std::runtime_error(r.describe(reg)), report(std::move(r)) {}

namespace {

Witness at(std::size_t i, std::size_t j, Polynomial p, std::string condition) {
    return Witness{i, j, std::move(p), std::move(condition), std::nullopt};
}

Witness condition_only(std::string condition) {
    return Witness{std::nullopt, std::nullopt, std::nullopt, std::move(condition), std::nullopt};
}

void require_same_order(const char* op, const PolyMatrix& a, const PolyMatrix& b) {
    if (a.order() != b.order()) throw DimensionMismatch(op, a.order(), b.order());
}

// First (i, j) where G deviates from G(0,0) * I, if any.
std::optional<Witness> scalar_identity_violation(const PolyMatrix& g) {
    for (std::size_t i = 0; i < g.order(); ++i)
        for (std::size_t j = 0; j < g.order(); ++j) {
            if (i == j) {
                if (g(i, i) != g(0, 0)) return at(i, i, g(i, i), "Gram diagonal differs from entry (0, 0)");
            } else if (!g(i, j).is_zero()) {
                return at(i, j, g(i, j), "Gram off-diagonal entry is nonzero");
            }
        }
    return std::nullopt;
}

// A*B^T compared against its own transpose (which is B*A^T) with sign `sign`.
VerificationReport check_product_symmetry(const PolyMatrix& a, const PolyMatrix& b, int sign, std::string claim) {
    require_same_order(sign > 0 ? "verify_amicable" : "verify_antiamicable", a, b);
    const PolyMatrix p = mul_transpose(a, b);
    for (std::size_t i = 0; i < p.order(); ++i)
        for (std::size_t j = i; j < p.order(); ++j) {
            const Polynomial diff = sign > 0 ? p(i, j) - p(j, i) : p(i, j) + p(j, i);
            if (!diff.is_zero())
                return VerificationReport::fail(std::move(claim),
                                                at(i, j, diff,
                                                   sign > 0 ? "(A B^T - B A^T) entry is nonzero"
                                                            : "(A B^T + B A^T) entry is nonzero"));
        }
    return VerificationReport::ok(std::move(claim));
}

bool share_variables(const TypeVector& x, const TypeVector& y) {
    for (VarId v : x.vars())
        if (y.weight_of(v)) return true;
    return false;
}

}  // namespace

VerificationReport verify_od(const PolyMatrix& a, const TypeVector& t) {
    const std::string claim = "OD(" + std::to_string(a.order()) + "; " + t.weights_string() + ")";
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) {
            const Polynomial& e = a(i, j);
            if (e.is_zero()) continue;
            const auto sv = e.as_scaled_variable();
            if (!sv || (sv->second != Rational(1) && sv->second != Rational(-1)))
                return VerificationReport::fail(claim, at(i, j, e, "entry is not 0 or +-variable"));
            if (!t.weight_of(sv->first))
                return VerificationReport::fail(claim, at(i, j, e, "entry uses a variable outside the type"));
        }

    const PolyMatrix g = gram(a);
    if (auto w = scalar_identity_violation(g)) return VerificationReport::fail(claim, std::move(*w));

    const Polynomial& q = g(0, 0);
    for (std::size_t k = 0; k < t.size(); ++k) {
        const VarId v = t.vars()[k];
        const Rational got = q.coefficient(Monomial(v, 2));
        if (got != Rational(t.weights()[k])) {
            Witness w = at(0, 0, q, "weight is " + got.to_string() + ", claimed " + std::to_string(t.weights()[k]));
            w.var = v;
            return VerificationReport::fail(claim, std::move(w));
        }
    }
    return VerificationReport::ok(claim);
}

std::optional<TypeVector> infer_type(const PolyMatrix& a) {
    if (a.order() == 0) return std::nullopt;
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) {
            const Polynomial& e = a(i, j);
            if (e.is_zero()) continue;
            const auto sv = e.as_scaled_variable();
            if (!sv || (sv->second != Rational(1) && sv->second != Rational(-1))) return std::nullopt;
        }
    const auto q = is_scalar_identity(gram(a));
    if (!q || q->is_zero()) return std::nullopt;
    std::vector<std::int64_t> weights;
    std::vector<VarId> vars;
    for (VarId v : a.variables()) {
        const Rational c = q->coefficient(Monomial(v, 2));
        if (!c.is_integer() || c.num() <= 0) return std::nullopt;
        weights.push_back(c.num());
        vars.push_back(v);
    }
    return TypeVector(std::move(weights), std::move(vars));
}

VerificationReport is_full(const PolyMatrix& a) {
    const std::string claim = "full";
    if (a.order() == 0) return VerificationReport::fail(claim, condition_only("empty matrix"));
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j)
            if (a(i, j).is_zero()) return VerificationReport::fail(claim, at(i, j, Polynomial{}, "zero entry"));
    return VerificationReport::ok(claim);
}

VerificationReport verify_amicable(const PolyMatrix& a, const PolyMatrix& b) {
    return check_product_symmetry(a, b, +1, "amicable");
}

VerificationReport verify_antiamicable(const PolyMatrix& a, const PolyMatrix& b) {
    return check_product_symmetry(a, b, -1, "anti-amicable");
}

VerificationReport verify_disjoint(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_order("verify_disjoint", a, b);
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j)
            if (!a(i, j).is_zero() && !b(i, j).is_zero())
                return VerificationReport::fail("disjoint", at(i, j, a(i, j) * b(i, j), "entrywise product is nonzero"));
    return VerificationReport::ok("disjoint");
}

VerificationReport verify_pairwise_amicable(std::span<const PolyMatrix> mats) {
    const std::string claim = "pairwise amicable";
    VerificationReport out = VerificationReport::ok(claim);
    for (std::size_t i = 0; i < mats.size(); ++i)
        for (std::size_t j = i + 1; j < mats.size(); ++j) {
            auto r = verify_amicable(mats[i], mats[j]);
            const std::string name = "amicable(#" + std::to_string(i) + ", #" + std::to_string(j) + ")";
            out.checks.push_back({name, r.pass});
            if (!r.pass) {
                r.witness->condition = name + ": " + r.witness->condition;
                auto f = VerificationReport::fail(claim, *r.witness);
                f.checks = std::move(out.checks);
                return f;
            }
        }
    return out;
}

VerificationReport verify_aod(const PolyMatrix& c, const PolyMatrix& d, const TypeVector& tc, const TypeVector& td) {
    if (share_variables(tc, td)) throw OverlappingVariables("AOD sides must use disjoint variable sets");
    require_same_order("verify_aod", c, d);
    const std::string claim = "AOD(" + std::to_string(c.order()) + "; " + tc.weights_string() + "; " +
                              td.weights_string() + ")";
    VerificationReport out = VerificationReport::ok(claim);
    const std::pair<const char*, VerificationReport> steps[] = {
        {"C is an OD", verify_od(c, tc)},
        {"D is an OD", verify_od(d, td)},
    };
    for (const auto& [name, r] : steps) {
        out.checks.push_back({name, r.pass});
        if (!r.pass) {
            Witness w = *r.witness;
            w.condition = std::string(name) + ": " + w.condition;
            auto f = VerificationReport::fail(claim, std::move(w));
            f.checks = std::move(out.checks);
            return f;
        }
    }
    auto am = verify_amicable(c, d);
    out.checks.push_back({"C D^T = D C^T", am.pass});
    if (!am.pass) {
        Witness w = *am.witness;
        w.condition = "C D^T = D C^T: " + w.condition;
        auto f = VerificationReport::fail(claim, std::move(w));
        f.checks = std::move(out.checks);
        return f;
    }
    return out;
}

VerificationReport verify_pd(const PolyMatrix& m1, const PolyMatrix& m2, const PolyMatrix& n, const TypeVector& t1,
                             const TypeVector& t2, const TypeVector& tn) {
    const std::string claim = "PD(" + std::to_string(m1.order()) + "; " + t1.weights_string() + "; " +
                              t2.weights_string() + "; " + tn.weights_string() + ")";
    if (m1.order() != m2.order() || m1.order() != n.order())
        return VerificationReport::fail(claim, condition_only("matrices have different orders"));
    if (share_variables(t1, t2) || share_variables(t1, tn) || share_variables(t2, tn))
        return VerificationReport::fail(claim, condition_only("M1, M2 and N must use pairwise disjoint variables"));

    std::vector<std::pair<std::string, VerificationReport>> steps;
    steps.emplace_back("M1 is an OD", verify_od(m1, t1));
    steps.emplace_back("M2 is an OD", verify_od(m2, t2));
    steps.emplace_back("N is an OD", verify_od(n, tn));
    steps.emplace_back("(i) M1 * N = 0", verify_disjoint(m1, n));
    steps.emplace_back("(i) M2 * N = 0", verify_disjoint(m2, n));
    steps.emplace_back("(ii) M1 + N is an OD", verify_od(m1 + n, t1.concat(tn)));
    steps.emplace_back("(ii) M2 + N is an OD", verify_od(m2 + n, t2.concat(tn)));
    steps.emplace_back("(iii) M1 M2^T = M2 M1^T", verify_amicable(m1, m2));

    VerificationReport out = VerificationReport::ok(claim);
    std::optional<Witness> first;
    for (const auto& [name, r] : steps) {
        out.checks.push_back({name, r.pass});
        if (!r.pass && !first) {
            first = *r.witness;
            first->condition = name + ": " + first->condition;
        }
    }
    if (first) {
        out.pass = false;
        out.witness = std::move(first);
    }
    return out;
}

AodSplit split_aod(const Aod& aod, VarId var) {
    const auto w = aod.d_type.weight_of(var);
    if (!w) throw std::invalid_argument("split variable is not on the D side of the AOD");
    PolyMatrix d1(aod.d.order());
    for (std::size_t i = 0; i < d1.order(); ++i)
        for (std::size_t j = 0; j < d1.order(); ++j) {
            std::vector<Term> keep;
            for (const Term& t : aod.d(i, j).terms())
                if (t.mono.exponent(var) > 0) keep.push_back(t);
            if (!keep.empty()) d1(i, j) = Polynomial::from_terms(std::move(keep));
        }
    std::vector<std::int64_t> rest_w;
    std::vector<VarId> rest_v;
    for (std::size_t k = 0; k < aod.d_type.size(); ++k)
        if (aod.d_type.vars()[k] != var) {
            rest_w.push_back(aod.d_type.weights()[k]);
            rest_v.push_back(aod.d_type.vars()[k]);
        }
    if (rest_w.empty()) throw std::invalid_argument("D side needs a variable besides the split one");
    return AodSplit{aod.c, d1, aod.d - d1, aod.c_type, TypeVector({*w}, {var}),
                    TypeVector(std::move(rest_w), std::move(rest_v))};
}

PolyMatrix rename(const PolyMatrix& a, const std::map<VarId, VarId>& mapping) {
    std::map<VarId, Polynomial> assignment;
    for (const auto& [from, to] : mapping) assignment.emplace(from, Polynomial::variable(to));
    return substitute(a, assignment);
}

Renamed fresh_vars(const PolyMatrix& a, VarRegistry& reg) {
    std::map<VarId, VarId> mapping;
    for (VarId v : a.variables()) mapping.emplace(v, reg.fresh(reg.name(v)));
    return Renamed{rename(a, mapping), std::move(mapping)};
}

PolyMatrix collapse(const PolyMatrix& a, const TypeVector& t, const VarRegistry& reg) {
    auto r = verify_od(a, t);
    if (!r.pass) throw VerificationFailed(std::move(r), reg);
    return substitute_all(a);
}

PolyMatrix aod_to_od(const PolyMatrix& c, const PolyMatrix& d) { return block_matrix({{c, d}, {d, -c}}); }

}  // namespace odtool
