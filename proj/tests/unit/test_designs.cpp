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
#include <numeric>
#include <random>

#include "doctest.h"
#include "odtool/designs.hpp"
#include "odtool/signed_permutation.hpp"

using namespace odtool;

namespace {

struct Fixture {
    VarRegistry reg;
    VarId a = reg.intern("a"), b = reg.intern("b"), c = reg.intern("c"), d = reg.intern("d");
    Polynomial pa = Polynomial::variable(a), pb = Polynomial::variable(b);
    Polynomial pc = Polynomial::variable(c), pd = Polynomial::variable(d);
    PolyMatrix i2 = PolyMatrix::from_ints({{1, 0}, {0, 1}});
    PolyMatrix p2 = PolyMatrix::from_ints({{0, 1}, {1, 0}});
    PolyMatrix q2 = PolyMatrix::from_ints({{1, 0}, {0, -1}});
    PolyMatrix r2 = PolyMatrix::from_ints({{0, 1}, {-1, 0}});

    TypeVector type(std::initializer_list<std::pair<VarId, std::int64_t>> ws) const {
        std::vector<std::int64_t> w;
        std::vector<VarId> v;
        for (auto [var, weight] : ws) {
            v.push_back(var);
            w.push_back(weight);
        }
        return TypeVector(w, v);
    }

    // OD(4; 1,1,1,1)
    PolyMatrix quaternion() const {
        return PolyMatrix{{pa, pb, pc, pd}, {-pb, pa, -pd, pc}, {-pc, pd, pa, -pb}, {-pd, -pc, pb, pa}};
    }
};

SignedPermutation random_signed_permutation(std::mt19937& rng, std::size_t n) {
    std::vector<std::uint32_t> image(n);
    std::iota(image.begin(), image.end(), 0U);
    std::shuffle(image.begin(), image.end(), rng);
    std::vector<std::int8_t> signs(n);
    std::bernoulli_distribution coin;
    for (auto& s : signs) s = coin(rng) ? 1 : -1;
    return SignedPermutation(image, signs);
}

}  // namespace

TEST_CASE("type vector validation and rendering") {
    Fixture f;
    CHECK_THROWS(TypeVector({}, {}));
    CHECK_THROWS(TypeVector({1, 0}, {f.a, f.b}));
    CHECK_THROWS(TypeVector({1, 1}, {f.a, f.a}));
    CHECK_THROWS(TypeVector({1}, {f.a, f.b}));
    const TypeVector t = f.type({{f.a, 4}, {f.b, 10}});
    CHECK(t.sum() == 14);
    CHECK(t.to_string(f.reg) == "(a:4, b:10)");
    CHECK(t.weights_string() == "4,10");
    CHECK(t.weight_of(f.b) == 10);
    CHECK_FALSE(t.weight_of(f.c));
    CHECK(t.concat(f.type({{f.c, 1}})).size() == 3);
    CHECK_THROWS((void)t.concat(f.type({{f.a, 1}})));
}

TEST_CASE("verify_od") {
    Fixture f;
    const PolyMatrix od2{{f.pa, f.pb}, {f.pb, -f.pa}};
    CHECK(verify_od(od2, f.type({{f.a, 1}, {f.b, 1}})).pass);
    CHECK(verify_od(f.quaternion(), f.type({{f.a, 1}, {f.b, 1}, {f.c, 1}, {f.d, 1}})).pass);

    SUBCASE("weight mismatch names the variable") {
        const auto r = verify_od(PolyMatrix{{f.pa, f.pa}, {f.pa, -f.pa}}, f.type({{f.a, 1}, {f.b, 1}}));
        REQUIRE_FALSE(r.pass);
        REQUIRE(r.witness);
        CHECK(r.witness->var == f.a);
        CHECK(r.witness->condition.find("weight is 2") != std::string::npos);
    }
    SUBCASE("zero matrix is not an OD") {
        const auto r = verify_od(PolyMatrix(2), f.type({{f.a, 1}}));
        CHECK_FALSE(r.pass);
        CHECK(r.witness);
    }
    SUBCASE("surplus variable fails on entry shape") {
        const auto r = verify_od(od2, f.type({{f.a, 1}}));
        REQUIRE_FALSE(r.pass);
        CHECK(r.witness->row == 0);
        CHECK(r.witness->col == 1);
    }
    SUBCASE("entries must be 0 or +-variable") {
        CHECK_FALSE(verify_od(PolyMatrix{{2 * f.pa, f.pb}, {f.pb, -2 * f.pa}}, f.type({{f.a, 4}, {f.b, 1}})).pass);
        CHECK_FALSE(verify_od(PolyMatrix{{f.pa + f.pb}}, f.type({{f.a, 1}, {f.b, 1}})).pass);
    }
    SUBCASE("non-orthogonal rows fail on the Gram check") {
        const auto r = verify_od(PolyMatrix{{f.pa, f.pb}, {f.pb, f.pa}}, f.type({{f.a, 1}, {f.b, 1}}));
        REQUIRE_FALSE(r.pass);
        CHECK(r.witness->condition.find("off-diagonal") != std::string::npos);
    }
    CHECK(infer_type(f.quaternion()) == f.type({{f.a, 1}, {f.b, 1}, {f.c, 1}, {f.d, 1}}));
    CHECK_FALSE(infer_type(PolyMatrix{{f.pa, f.pb}, {f.pb, f.pa}}));
}

TEST_CASE("is_full") {
    Fixture f;
    CHECK(is_full(f.quaternion()).pass);
    CHECK_FALSE(is_full(PolyMatrix(3)).pass);
    CHECK_FALSE(is_full(f.pa * f.i2).pass);
}

TEST_CASE("amicability, anti-amicability and disjointness of the order-2 blocks") {
    Fixture f;
    CHECK(verify_amicable(f.p2, f.i2).pass);
    CHECK(verify_amicable(f.q2, f.i2).pass);
    CHECK(verify_amicable(f.r2, f.q2).pass);
    CHECK(verify_amicable(f.p2, f.r2).pass);
    CHECK(verify_antiamicable(f.r2, f.i2).pass);
    CHECK(verify_antiamicable(f.p2, f.q2).pass);
    CHECK_FALSE(verify_amicable(f.r2, f.i2).pass);
    CHECK(verify_disjoint(f.q2, f.r2).pass);
    CHECK(verify_disjoint(f.i2, f.p2).pass);
    CHECK_FALSE(verify_disjoint(f.i2, f.q2).pass);
    CHECK_THROWS_AS(verify_amicable(f.i2, PolyMatrix(3)), DimensionMismatch);

    const std::vector<PolyMatrix> ipr{f.i2, f.p2, f.q2 * f.q2, f.p2 + f.i2};
    CHECK(verify_pairwise_amicable(ipr).pass);
    // P and Q are anti-amicable, so {I, P, Q} is not pairwise amicable.
    const std::vector<PolyMatrix> ipq{f.i2, f.p2, f.q2};
    const auto pq = verify_pairwise_amicable(ipq);
    CHECK_FALSE(pq.pass);
    CHECK(pq.witness->condition.rfind("amicable(#1, #2)", 0) == 0);
    const std::vector<PolyMatrix> ir{f.i2, f.r2};
    const auto r = verify_pairwise_amicable(ir);
    CHECK_FALSE(r.pass);
    CHECK(r.witness);
}

TEST_CASE("verify_aod") {
    Fixture f;
    const PolyMatrix c = f.pa * f.q2 + f.pb * f.p2;
    const PolyMatrix d = f.pc * f.i2 + f.pd * f.r2;
    const TypeVector tc = f.type({{f.a, 1}, {f.b, 1}});
    const TypeVector td = f.type({{f.c, 1}, {f.d, 1}});
    const auto r = verify_aod(c, d, tc, td);
    CHECK(r.pass);
    CHECK(r.checks.size() == 3);
    CHECK(verify_od(aod_to_od(c, d), tc.concat(td)).pass);
    CHECK_THROWS_AS(verify_aod(c, c, tc, tc), OverlappingVariables);

    // OD(2;1,1) against a renamed copy of itself
    const PolyMatrix od2{{f.pa, f.pb}, {f.pb, -f.pa}};
    const auto renamed = fresh_vars(od2, f.reg);
    const auto bad = verify_aod(od2, renamed.matrix, tc, tc.renamed(renamed.mapping));
    REQUIRE_FALSE(bad.pass);
    CHECK(bad.witness->condition.find("C D^T = D C^T") != std::string::npos);
}

TEST_CASE("verify_pd on the order-4 product design and negative cases") {
    Fixture f;
    // PD(4; 1,1,1; 1,1,1; 1) with M1 = b-part of OD(4) pattern, etc.
    const VarId e = f.reg.intern("e"), g = f.reg.intern("g"), h = f.reg.intern("h");
    const Polynomial pe = Polynomial::variable(e), pg = Polynomial::variable(g), ph = Polynomial::variable(h);
    const Polynomial z;
    // M1 and M2 share the off-diagonal pattern of the quaternion OD; N is a on the diagonal.
    const PolyMatrix m1{{z, f.pb, f.pc, f.pd}, {-f.pb, z, -f.pd, f.pc}, {-f.pc, f.pd, z, -f.pb},
                        {-f.pd, -f.pc, f.pb, z}};
    const PolyMatrix m2{{z, pe, pg, ph}, {-pe, z, ph, -pg}, {-pg, -ph, z, pe}, {-ph, pg, -pe, z}};
    const PolyMatrix n = f.pa * PolyMatrix::identity(4);
    const TypeVector t1 = f.type({{f.b, 1}, {f.c, 1}, {f.d, 1}});
    const TypeVector t2 = f.type({{e, 1}, {g, 1}, {h, 1}});
    const TypeVector tn = f.type({{f.a, 1}});
    const auto r = verify_pd(m1, m2, n, t1, t2, tn);
    CHECK(r.pass);
    CHECK(r.checks.size() == 8);

    const auto same = verify_pd(m1, m2, m1, t1, t2, t1);
    CHECK_FALSE(same.pass);

    // N replaced by a renamed copy of M1: condition (i) is the first to fail
    const auto copy = fresh_vars(m1, f.reg);
    const auto r2 = verify_pd(m1, m2, copy.matrix, t1, t2, t1.renamed(copy.mapping));
    REQUIRE_FALSE(r2.pass);
    CHECK(r2.witness->condition.rfind("(i) M1 * N = 0", 0) == 0);
    CHECK_FALSE(r2.checks[3].passed);
}

TEST_CASE("split_aod, rename, collapse") {
    Fixture f;
    const Aod aod{f.pa * f.q2 + f.pb * f.p2, f.pc * f.i2 + f.pd * f.r2, f.type({{f.a, 1}, {f.b, 1}}),
                  f.type({{f.c, 1}, {f.d, 1}})};
    const AodSplit s = split_aod(aod, f.c);
    CHECK(s.d1 == f.pc * f.i2);
    CHECK(s.d2 == f.pd * f.r2);
    CHECK(s.d1_type == f.type({{f.c, 1}}));
    CHECK(s.d2_type == f.type({{f.d, 1}}));
    CHECK_THROWS(split_aod(aod, f.a));

    const auto w = collapse(aod.c, aod.c_type, f.reg);
    CHECK(gram(w) == PolyMatrix::from_ints({{2, 0}, {0, 2}}));
    CHECK_THROWS_AS(collapse(aod.c, f.type({{f.a, 2}, {f.b, 1}}), f.reg), VerificationFailed);

    const PolyMatrix constant = PolyMatrix::from_ints({{1, 2}, {3, 4}});
    CHECK(fresh_vars(constant, f.reg).matrix == constant);
    const auto rn = fresh_vars(aod.d, f.reg);
    for (VarId v : rn.matrix.variables()) CHECK_FALSE(aod.c_type.weight_of(v));
    std::map<VarId, VarId> inverse;
    for (auto [from, to] : rn.mapping) inverse.emplace(to, from);
    CHECK(rename(rn.matrix, inverse) == aod.d);
}

TEST_CASE("verify_od invariance under renaming and signed row/column permutation") {
    Fixture f;
    std::mt19937 rng(7);
    const PolyMatrix q = f.quaternion();
    const TypeVector tq = f.type({{f.a, 1}, {f.b, 1}, {f.c, 1}, {f.d, 1}});
    const PolyMatrix big = aod_to_od(f.pa * f.q2 + f.pb * f.p2, f.pc * f.i2 + f.pd * f.r2);
    const PolyMatrix bigger = kron(q, PolyMatrix::from_ints({{1, 1}, {1, -1}}));
    const TypeVector tbigger = f.type({{f.a, 2}, {f.b, 2}, {f.c, 2}, {f.d, 2}});
    const std::vector<std::pair<PolyMatrix, TypeVector>> designs{{q, tq}, {big, tq}, {bigger, tbigger}};

    for (int round = 0; round < 40; ++round) {
        for (const auto& [m, t] : designs) {
            const auto left = random_signed_permutation(rng, m.order());
            const auto right = random_signed_permutation(rng, m.order());
            const PolyMatrix moved = transpose(right.apply(transpose(left.apply(m))));
            CHECK(verify_od(moved, t).pass);
            const auto rn = fresh_vars(moved, f.reg);
            CHECK(verify_od(rn.matrix, t.renamed(rn.mapping)).pass);
            CHECK_FALSE(verify_od(rn.matrix, t).pass);
            const PolyMatrix w = collapse(moved, t, f.reg);
            CHECK(is_scalar_identity(gram(w)) == Polynomial(t.sum()));
        }
    }
}
