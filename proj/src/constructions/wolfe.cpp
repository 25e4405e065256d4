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

#include "odtool/constructions.hpp"

namespace odtool {

namespace {

const SignedPermutation& perm_i() {
    static const SignedPermutation m({0, 1}, {1, 1});
    return m;
}
const SignedPermutation& perm_p() {
    static const SignedPermutation m({1, 0}, {1, 1});
    return m;
}
const SignedPermutation& perm_q() {
    static const SignedPermutation m({0, 1}, {1, -1});
    return m;
}
const SignedPermutation& perm_r() {
    static const SignedPermutation m({1, 0}, {1, -1});
    return m;
}

// pre (x) ... (x) pre, middle, post (x) ... (x) post, I_d; empty products are [1].
SignedPermutation chain(const SignedPermutation& pre, unsigned n_pre, const SignedPermutation* middle,
                        const SignedPermutation& post, unsigned n_post, unsigned d) {
    SignedPermutation out = SignedPermutation::identity(1);
    for (unsigned k = 0; k < n_pre; ++k) out = kron(out, pre);
    if (middle) out = kron(out, *middle);
    for (unsigned k = 0; k < n_post; ++k) out = kron(out, post);
    return kron(out, SignedPermutation::identity(d));
}

}  // namespace

WolfeSets wolfe_sets(unsigned s, unsigned d) {
    if (s < 1) throw std::invalid_argument("wolfe_sets: s must be at least 1");
    if (d % 2 == 0) throw std::invalid_argument("wolfe_sets: d must be odd");
    WolfeSets out;
    out.a.push_back(chain(perm_i(), s, nullptr, perm_i(), 0, d));
    out.b.push_back(chain(perm_p(), s, nullptr, perm_p(), 0, d));
    for (unsigned k = 2; k <= s + 1; ++k) {
        out.a.push_back(chain(perm_i(), k - 2, &perm_r(), perm_p(), s - k + 1, d));
        out.b.push_back(chain(perm_i(), k - 2, &perm_q(), perm_p(), s - k + 1, d));
    }
    out.order = out.a.front().order();
    return out;
}

VerificationReport check_wolfe_sets(const WolfeSets& sets) {
    VerificationReport out = VerificationReport::ok("signed permutation sets");
    auto record = [&](std::string name, bool ok) {
        out.checks.push_back({name, ok});
        if (!ok && out.pass) {
            out.pass = false;
            out.witness = Witness{std::nullopt, std::nullopt, std::nullopt, std::move(name), std::nullopt};
        }
    };
    for (const auto* side : {&sets.a, &sets.b}) {
        const char* tag = side == &sets.a ? "A" : "B";
        for (const SignedPermutation& m : *side) record(std::string(tag) + " order", m.order() == sets.order);
        for (std::size_t i = 0; i < side->size(); ++i)
            for (std::size_t j = i + 1; j < side->size(); ++j) {
                const std::string pair = std::string(tag) + std::to_string(i + 1) + ", " + tag + std::to_string(j + 1);
                record("anti-amicable(" + pair + ")", antiamicable((*side)[i], (*side)[j]));
                record("disjoint(" + pair + ")", disjoint((*side)[i], (*side)[j]));
            }
    }
    for (std::size_t i = 0; i < sets.a.size(); ++i)
        for (std::size_t j = 0; j < sets.b.size(); ++j)
            record("amicable(A" + std::to_string(i + 1) + ", B" + std::to_string(j + 1) + ")",
                   amicable(sets.a[i], sets.b[j]));
    return out;
}

Aod512Blocks aod512_blocks(VarRegistry& reg) {
    const WolfeSets sets = wolfe_sets(7, 1);
    const PolyMatrix h = sylvester_hadamard(7);
    const Polynomial half(Rational(1, 2));
    Aod512Blocks out;
    for (int k = 1; k <= 8; ++k) out.x_vars.push_back(reg.fresh("x" + std::to_string(k)));
    for (int k = 1; k <= 8; ++k) out.y_vars.push_back(reg.fresh("y" + std::to_string(k)));

    auto block = [&](const std::vector<SignedPermutation>& side, const std::vector<VarId>& vars, int j) {
        const PolyMatrix first = side[2 * j].apply(h);
        const PolyMatrix second = side[2 * j + 1].apply(h);
        return (half * Polynomial::variable(vars[2 * j])) * (first - second) +
               (half * Polynomial::variable(vars[2 * j + 1])) * (first + second);
    };
    for (int j = 0; j < 4; ++j) {
        out.x.push_back(block(sets.a, out.x_vars, j));
        out.y.push_back(block(sets.b, out.y_vars, j));
    }
    return out;
}

Aod aod512(VarRegistry& reg) {
    const Aod512Blocks bl = aod512_blocks(reg);
    const BaseBlocks bb = base2_blocks();
    const PolyMatrix ii = kron(bb.i, bb.i), ip = kron(bb.i, bb.p), pi = kron(bb.p, bb.i), pp = kron(bb.p, bb.p);
    auto side = [&](const std::vector<PolyMatrix>& m) {
        return kron(ii, m[0]) + kron(ip, m[1]) + kron(pi, m[2]) + kron(pp, m[3]);
    };
    Aod out{side(bl.x), side(bl.y), TypeVector(std::vector<std::int64_t>(8, 64), bl.x_vars),
            TypeVector(std::vector<std::int64_t>(8, 64), bl.y_vars)};
    if (auto r = verify_aod(out); !r.pass) throw ConstructionError("order 512 design: " + r.describe(reg), r);
    if (auto r = is_full(out.c); !r.pass) throw ConstructionError("order 512 design: C is not full", r);
    if (auto r = is_full(out.d); !r.pass) throw ConstructionError("order 512 design: D is not full", r);
    return out;
}

Od od1024(VarRegistry& reg) {
    const Aod a = aod512(reg);
    Od out{aod_to_od(a.c, a.d), a.c_type.concat(a.d_type)};
    if (auto r = verify_od(out.matrix, out.type); !r.pass)
        throw ConstructionError("order 1024 design: " + r.describe(reg), r);
    if (auto r = is_full(out.matrix); !r.pass) throw ConstructionError("order 1024 design is not full", r);
    return out;
}

}  // namespace odtool
