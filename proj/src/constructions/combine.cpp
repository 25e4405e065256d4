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

#include <numeric>
#include <set>

#include "odtool/constructions.hpp"

namespace odtool {

namespace {

std::int64_t total(std::span<const std::int64_t> w) { return std::accumulate(w.begin(), w.end(), std::int64_t{0}); }

bool keeps_m2(CombineVariant v) { return v == CombineVariant::i || v == CombineVariant::ii; }
bool keeps_n(CombineVariant v) { return v == CombineVariant::i || v == CombineVariant::iii; }

[[noreturn]] void reject(const std::string& what, const VerificationReport& r, const VarRegistry& reg) {
    throw ConstructionError(what + ": " + r.describe(reg), r);
}

}  // namespace

std::string to_string(CombineVariant v) {
    switch (v) {
        case CombineVariant::i: return "i";
        case CombineVariant::ii: return "ii";
        case CombineVariant::iii: return "iii";
        case CombineVariant::iv: return "iv";
    }
    return "?";
}

std::optional<CombineVariant> parse_variant(std::string_view s) {
    if (s == "i") return CombineVariant::i;
    if (s == "ii") return CombineVariant::ii;
    if (s == "iii") return CombineVariant::iii;
    if (s == "iv") return CombineVariant::iv;
    return std::nullopt;
}

std::vector<std::int64_t> combined_weights(std::span<const std::int64_t> pd_m1, std::span<const std::int64_t> pd_m2,
                                           std::span<const std::int64_t> pd_n, std::span<const std::int64_t> aod_c,
                                           std::int64_t v, std::span<const std::int64_t> aod_d2,
                                           CombineVariant variant) {
    std::vector<std::int64_t> out;
    for (std::int64_t a : pd_m1) out.push_back(v * a);
    if (keeps_m2(variant)) {
        const std::int64_t w = total(aod_d2);
        for (std::int64_t b : pd_m2) out.push_back(w * b);
    } else {
        const std::int64_t b = total(pd_m2);
        for (std::int64_t w : aod_d2) out.push_back(w * b);
    }
    if (keeps_n(variant)) {
        const std::int64_t c = total(aod_c);
        for (std::int64_t u : pd_n) out.push_back(c * u);
    } else {
        const std::int64_t u = total(pd_n);
        for (std::int64_t c : aod_c) out.push_back(c * u);
    }
    return out;
}

Od combine_pd_aod(const ProductDesign& pd, const AodSplit& in, CombineVariant variant, VarRegistry& reg) {
    if (auto r = verify_pd(pd); !r.pass) reject("product design", r, reg);
    if (in.d1_type.size() != 1) throw ConstructionError("D1 must carry exactly one variable");
    if (auto r = verify_od(in.d1, in.d1_type); !r.pass) reject("D1", r, reg);
    if (auto r = verify_od(in.d2, in.d2_type); !r.pass) reject("D2", r, reg);
    if (auto r = verify_aod(in.c, in.d1 + in.d2, in.c_type, in.d1_type.concat(in.d2_type)); !r.pass)
        reject("amicable design", r, reg);

    AodSplit aod = in;
    std::set<VarId> pd_vars;
    for (const TypeVector* t : {&pd.m1_type, &pd.m2_type, &pd.n_type})
        for (VarId v : t->vars()) pd_vars.insert(v);
    bool clash = false;
    for (const TypeVector* t : {&in.c_type, &in.d1_type, &in.d2_type})
        for (VarId v : t->vars()) clash = clash || pd_vars.contains(v);
    if (clash) {
        std::map<VarId, VarId> mapping;
        for (const TypeVector* t : {&in.c_type, &in.d1_type, &in.d2_type})
            for (VarId v : t->vars()) mapping.emplace(v, reg.fresh(reg.name(v)));
        aod = AodSplit{rename(in.c, mapping),        rename(in.d1, mapping),        rename(in.d2, mapping),
                       in.c_type.renamed(mapping), in.d1_type.renamed(mapping), in.d2_type.renamed(mapping)};
    }

    const bool m2_vars = keeps_m2(variant);
    const bool n_vars = keeps_n(variant);
    const PolyMatrix d1 = collapse(aod.d1, aod.d1_type, reg);
    const PolyMatrix m2 = m2_vars ? pd.m2 : collapse(pd.m2, pd.m2_type, reg);
    const PolyMatrix d2 = m2_vars ? collapse(aod.d2, aod.d2_type, reg) : aod.d2;
    const PolyMatrix n = n_vars ? pd.n : collapse(pd.n, pd.n_type, reg);
    const PolyMatrix c = n_vars ? collapse(aod.c, aod.c_type, reg) : aod.c;
    PolyMatrix x = kron(pd.m1, d1) + kron(m2, d2) + kron(n, c);

    std::vector<VarId> vars;
    auto append = [&](const TypeVector& t) { vars.insert(vars.end(), t.vars().begin(), t.vars().end()); };
    append(pd.m1_type);
    append(m2_vars ? pd.m2_type : aod.d2_type);
    append(n_vars ? pd.n_type : aod.c_type);
    TypeVector type(combined_weights(pd.m1_type.weights(), pd.m2_type.weights(), pd.n_type.weights(),
                                     aod.c_type.weights(), aod.d1_type.weights()[0], aod.d2_type.weights(), variant),
                    std::move(vars));

    if (auto r = verify_od(x, type); !r.pass) reject("combined design, variant " + to_string(variant), r, reg);
    return Od{std::move(x), std::move(type)};
}

// ---------------------------------------------------------------------------

DoublingPattern classical_doubling() { return {{1, 1, 1, 1, -1, 1, 1, -1}, {1, 1, -1, 1}, false}; }

namespace {

DoublingPattern pattern_from_mask(unsigned mask) {
    DoublingPattern p;
    for (int k = 0; k < 8; ++k) p.c_signs[k] = (mask >> k) & 1U ? -1 : 1;
    for (int k = 0; k < 4; ++k) p.d_signs[k] = (mask >> (8 + k)) & 1U ? -1 : 1;
    p.swap_new = ((mask >> 12) & 1U) != 0;
    return p;
}

Aod assemble_doubling(const DoublingPattern& p, const PolyMatrix& rest, const PolyMatrix& xpart,
                      const PolyMatrix& zpart, const PolyMatrix& d) {
    const PolyMatrix& diag = p.swap_new ? zpart : xpart;
    const PolyMatrix& off = p.swap_new ? xpart : zpart;
    auto side = [&](int s, const PolyMatrix& m) { return s > 0 ? m : -m; };
    const PolyMatrix c11 = side(p.c_signs[0], rest) + side(p.c_signs[1], diag);
    const PolyMatrix c12 = side(p.c_signs[2], rest) + side(p.c_signs[3], off);
    const PolyMatrix c21 = side(p.c_signs[4], rest) + side(p.c_signs[5], off);
    const PolyMatrix c22 = side(p.c_signs[6], rest) + side(p.c_signs[7], diag);
    return Aod{block_matrix({{c11, c12}, {c21, c22}}),
               block_matrix({{side(p.d_signs[0], d), side(p.d_signs[1], d)},
                             {side(p.d_signs[2], d), side(p.d_signs[3], d)}}),
               {},
               {}};
}

Aod double_once(const Aod& in, VarId x, VarRegistry& reg) {
    const std::size_t n = in.c.order();
    PolyMatrix coeff(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) coeff(i, j) = Polynomial(in.c(i, j).coefficient(Monomial(x)));
    const VarId z = reg.fresh(reg.name(x));
    const PolyMatrix xpart = Polynomial::variable(x) * coeff;
    const PolyMatrix zpart = Polynomial::variable(z) * coeff;
    const PolyMatrix rest = in.c - xpart;

    std::vector<std::int64_t> cw, dw;
    std::vector<VarId> cv, dv;
    for (std::size_t k = 0; k < in.c_type.size(); ++k) {
        const VarId v = in.c_type.vars()[k];
        const std::int64_t w = in.c_type.weights()[k];
        if (v == x) {
            cw.insert(cw.end(), {w, w});
            cv.insert(cv.end(), {x, z});
        } else {
            cw.push_back(2 * w);
            cv.push_back(v);
        }
    }
    for (std::size_t k = 0; k < in.d_type.size(); ++k) {
        dw.push_back(2 * in.d_type.weights()[k]);
        dv.push_back(in.d_type.vars()[k]);
    }
    const TypeVector tc(std::move(cw), std::move(cv));
    const TypeVector td(std::move(dw), std::move(dv));

    const DoublingPattern first = classical_doubling();
    auto attempt = [&](const DoublingPattern& p) -> std::optional<Aod> {
        Aod cand = assemble_doubling(p, rest, xpart, zpart, in.d);
        if (!verify_aod(cand.c, cand.d, tc, td).pass) return std::nullopt;
        cand.c_type = tc;
        cand.d_type = td;
        return cand;
    };
    if (auto a = attempt(first)) return std::move(*a);
    for (unsigned mask = 0; mask < (1U << 13); ++mask) {
        const DoublingPattern p = pattern_from_mask(mask);
        if (p.c_signs == first.c_signs && p.d_signs == first.d_signs && p.swap_new == first.swap_new) continue;
        if (auto a = attempt(p)) return std::move(*a);
    }
    throw ConstructionError("no doubling pattern verifies with type (" + tc.weights_string() + "; " +
                            td.weights_string() + ")");
}

}  // namespace

Aod double_aod(const Aod& aod, unsigned t, VarRegistry& reg, std::optional<VarId> split) {
    if (t == 0) throw std::invalid_argument("double_aod: t must be positive");
    if (auto r = verify_aod(aod); !r.pass) reject("input", r, reg);
    VarId x;
    if (split) {
        if (!aod.c_type.weight_of(*split)) throw std::invalid_argument("double_aod: split variable is not on the C side");
        x = *split;
    } else {
        std::size_t best = 0;
        for (std::size_t k = 1; k < aod.c_type.size(); ++k)
            if (aod.c_type.weights()[k] > aod.c_type.weights()[best]) best = k;
        x = aod.c_type.vars()[best];
    }
    Aod cur = aod;
    for (unsigned step = 0; step < t; ++step) cur = double_once(cur, x, reg);
    return cur;
}

}  // namespace odtool
