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
#include <random>

#include "doctest.h"
#include "odtool/constructions.hpp"

using namespace odtool;

namespace {

std::string weights(const TypeVector& t) { return t.weights_string(); }

std::vector<std::string> names(const TypeVector& t, const VarRegistry& reg) {
    std::vector<std::string> out;
    for (VarId v : t.vars()) out.push_back(reg.name(v));
    return out;
}

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

TEST_CASE("order-2 base blocks") {
    const BaseBlocks bb = base2_blocks();
    CHECK(bb.i == PolyMatrix::identity(2));
    CHECK(transpose(bb.p) == bb.p);
    CHECK(transpose(bb.r) == -bb.r);
    CHECK(mul_transpose(bb.q, bb.p) == -mul_transpose(bb.p, bb.q));
    CHECK(gram(bb.r) == PolyMatrix::identity(2));
    CHECK(gram(bb.p + bb.q) == PolyMatrix::from_ints({{2, 0}, {0, 2}}));
    CHECK(verify_antiamicable(bb.r, bb.i).pass);
    CHECK(verify_amicable(bb.p, bb.r).pass);
    CHECK(verify_amicable(bb.p, bb.i).pass);
    CHECK(verify_amicable(bb.q, bb.i).pass);
    CHECK(verify_amicable(bb.r, bb.q).pass);
}

TEST_CASE("sylvester hadamard") {
    CHECK(sylvester_hadamard(0) == PolyMatrix::from_ints({{1}}));
    CHECK(gram(sylvester_hadamard(1)) == PolyMatrix::from_ints({{2, 0}, {0, 2}}));
    const PolyMatrix h = sylvester_hadamard(7);
    CHECK(h.order() == 128);
    CHECK(is_scalar_identity(gram(h)) == Polynomial(128));
}

TEST_CASE("aod_2") {
    VarRegistry reg;
    const Aod a = aod_2(reg);
    CHECK(verify_aod(a).pass);
    CHECK(verify_od(aod_to_od(a.c, a.d), a.c_type.concat(a.d_type)).pass);
    CHECK(gram(collapse(a.c, a.c_type, reg)) == PolyMatrix::from_ints({{2, 0}, {0, 2}}));
    CHECK(gram(collapse(a.d, a.d_type, reg)) == PolyMatrix::from_ints({{2, 0}, {0, 2}}));
}

TEST_CASE("block templates satisfy their relations") {
    VarRegistry reg;
    auto one = [&](const char* n) { return PolyMatrix{{Polynomial::variable(reg.intern(n))}}; };
    const BlockInputs in{one("a1"), one("a2"), one("b"), one("c"), one("d"), one("e"), one("f"), one("g")};
    for (Layout layout : {Layout::eight, Layout::twelve}) {
        const LayoutBlocks bl = assemble_layout(layout, in);
        CHECK(bl.m1.order() == layout_blocks(layout));
        const auto r = check_layout_relations(bl);
        CHECK(r.pass);
        CHECK(r.checks.size() == 10);
        // each N row has layout_weight nonzero blocks, M rows have three, and they tile the row
        for (std::size_t i = 0; i < bl.n1.order(); ++i) {
            int n_count = 0, m1_count = 0, m2_count = 0;
            for (std::size_t j = 0; j < bl.n1.order(); ++j) {
                n_count += !bl.n1(i, j).is_zero();
                m1_count += !bl.m1(i, j).is_zero();
                m2_count += !bl.m2(i, j).is_zero();
            }
            CHECK(n_count == layout_weight(layout));
            CHECK(m1_count == 3);
            CHECK(m2_count == 3);
            CHECK(n_count + m1_count == static_cast<int>(layout_blocks(layout)));
        }
    }

    // A sign flip in one block breaks the relations.
    BlockInputs broken = in;
    LayoutBlocks bl = assemble_layout(Layout::eight, broken);
    bl.m1(0, 1) = -bl.m1(0, 1);
    CHECK_FALSE(check_layout_relations(bl).pass);
}

TEST_CASE("order 48 construction from order-3 circulants") {
    VarRegistry reg;
    const BlockInputs in = example_inputs_48(reg);
    const std::vector<PolyMatrix> all{in.a1, in.a2, in.b, in.c, in.d, in.e, in.f, in.g};
    CHECK(verify_pairwise_amicable(all).pass);

    const Aod full = construction_16n(in, AssemblyMode::full);
    CHECK(full.c.order() == 48);
    CHECK(weights(full.c_type) == "4,10,34");
    CHECK(weights(full.d_type) == "4,44");
    CHECK(names(full.c_type, reg) == std::vector<std::string>{"a", "x", "b"});
    CHECK(names(full.d_type, reg) == std::vector<std::string>{"c", "d"});
    CHECK(verify_aod(full).pass);
    CHECK(is_full(full.c).pass);
    CHECK(is_full(full.d).pass);
    CHECK(gram(collapse(full.c, full.c_type, reg)) == Polynomial(48) * PolyMatrix::identity(48));

    const Aod dis = construction_16n(in, AssemblyMode::disjoint);
    CHECK(verify_disjoint(dis.c, dis.d).pass);
    CHECK(hadamard_product(dis.c, dis.d).is_zero());
    CHECK_FALSE(is_full(dis.c).pass);
    CHECK(weights(dis.c_type) == "2,5,17");
    CHECK(weights(dis.d_type) == "2,22");
    CHECK(verify_od(aod_to_od(full.c, full.d), full.c_type.concat(full.d_type)).pass);
}

TEST_CASE("construction preconditions are enforced") {
    VarRegistry reg;
    BlockInputs in = example_inputs_48(reg);
    const Polynomial a = Polynomial::variable(*reg.find("a"));
    const Polynomial b = Polynomial::variable(*reg.find("b"));

    SUBCASE("sum condition") {
        in.b = circ({a, b, b});
        try {
            (void)construction_16n(in, AssemblyMode::full);
            FAIL("expected a precondition error");
        } catch (const ConstructionError& e) {
            CHECK(std::string(e.what()).find("5 A1 A1^T + B B^T + C C^T + D D^T") != std::string::npos);
        }
    }
    SUBCASE("amicability") {
        in.c = PolyMatrix::from_ints({{0, 1, 0}, {-1, 0, 0}, {0, 0, 1}}) * in.c;
        CHECK_THROWS_AS((void)construction_16n(in, AssemblyMode::disjoint), ConstructionError);
    }
    SUBCASE("full mode needs full inputs and an order-2 Hadamard H") {
        CHECK_THROWS_AS((void)construction_16n(in, AssemblyMode::full, PolyMatrix::identity(2)), ConstructionError);
        CHECK_THROWS_AS((void)construction_16n(in, AssemblyMode::full, sylvester_hadamard(2)), ConstructionError);
        CHECK(construction_16n(in, AssemblyMode::full, PolyMatrix::from_ints({{1, -1}, {1, 1}})).c.order() == 48);
    }
}

TEST_CASE("order 72 and 168 constructions") {
    VarRegistry reg;
    const Aod a72 = construction_24n(example_inputs_72(reg), AssemblyMode::full);
    CHECK(weights(a72.c_type) == "18,54");
    CHECK(weights(a72.d_type) == "72");
    CHECK(is_full(a72.c).pass);
    CHECK(is_full(a72.d).pass);

    const Aod d72 = construction_24n(example_inputs_72(reg), AssemblyMode::disjoint);
    CHECK(verify_disjoint(d72.c, d72.d).pass);
    CHECK(d72.c.order() == 72);

    const Aod a168 = construction_24n(example_inputs_168(reg), AssemblyMode::full);
    CHECK(a168.c.order() == 168);
    CHECK(weights(a168.c_type) == "4,164");
    CHECK(weights(a168.d_type) == "4,164");
    CHECK(is_full(a168.c).pass);
    CHECK(is_full(a168.d).pass);

    // With every skew-pattern input circulant, amicability with the symmetric circulants fails.
    VarRegistry fresh;
    BlockInputs all_circ = example_inputs_168(fresh);
    const Polynomial a = Polynomial::variable(*fresh.find("a"));
    const Polynomial c = Polynomial::variable(*fresh.find("c"));
    all_circ.a2 = circ({c, -c, -c, c, -c, c, c});
    all_circ.d = circ({a, -a, -a, a, -a, a, a});
    all_circ.g = all_circ.a2;
    try {
        (void)construction_24n(all_circ, AssemblyMode::full);
        FAIL("expected a precondition error");
    } catch (const ConstructionError& e) {
        CHECK(std::string(e.what()).find("not pairwise amicable") != std::string::npos);
    }
}

TEST_CASE("product designs of order 8 and 12") {
    VarRegistry reg;
    const ProductDesign p8 = pd8(reg);
    const auto r8 = verify_pd(p8);
    CHECK(r8.pass);
    CHECK(r8.checks.size() == 8);
    CHECK(weights(p8.n_type) == "5");
    const ProductDesign p12 = pd12(reg);
    CHECK(verify_pd(p12).pass);
    CHECK(weights(p12.m1_type) == "1,1,1");
    CHECK(weights(p12.m2_type) == "1,1,1");
    CHECK(is_scalar_identity(gram(collapse(p12.n, p12.n_type, reg))) == Polynomial(9));
}

TEST_CASE("one-variable-per-block amicable designs") {
    VarRegistry reg;
    const Aod a16 = aod16_vars(reg);
    CHECK(weights(a16.c_type) == "2,2,2,10");
    CHECK(weights(a16.d_type) == "2,2,2,10");
    CHECK(a16.c_type.size() + a16.d_type.size() <= 10);
    const Aod a24 = aod24_vars(reg);
    CHECK(weights(a24.c_type) == "2,2,2,18");
    CHECK(weights(a24.d_type) == "2,2,2,18");
    CHECK(is_full(a24.c).pass);
}

TEST_CASE("combining product designs with aod_2") {
    VarRegistry reg;
    const ProductDesign p12 = pd12(reg);
    const Aod a2 = aod_2(reg);
    const AodSplit split = split_aod(a2, a2.d_type.vars()[0]);

    const Od od24 = combine_pd_aod(p12, split, CombineVariant::ii, reg);
    CHECK(od24.matrix.order() == 24);
    CHECK(weights(od24.type) == "1,1,1,1,1,1,9,9");
    CHECK(verify_od(od24.matrix, od24.type).pass);
    CHECK(is_full(od24.matrix).pass);

    const ProductDesign p8 = pd8(reg);
    const Od od16 = combine_pd_aod(p8, split, CombineVariant::i, reg);
    CHECK(weights(od16.type) == "1,1,1,1,1,1,10");
    CHECK(od16.type.sum() == 16);
    CHECK(is_full(od16.matrix).pass);

    for (const ProductDesign* pd : {&p8, &p12})
        for (CombineVariant v : {CombineVariant::i, CombineVariant::ii, CombineVariant::iii, CombineVariant::iv}) {
            const Od od = combine_pd_aod(*pd, split, v, reg);
            CHECK(od.type.weights_string() ==
                  TypeVector(combined_weights(pd->m1_type.weights(), pd->m2_type.weights(), pd->n_type.weights(),
                                              a2.c_type.weights(), 1, std::vector<std::int64_t>{1}, v),
                             std::vector<VarId>(od.type.vars().begin(), od.type.vars().end()))
                      .weights_string());
        }

    // an AOD sharing variables with the PD is renamed first
    VarRegistry clash;
    const ProductDesign q = pd8(clash);
    const Aod shared{q.n, q.m2, q.n_type, q.m2_type};
    CHECK_THROWS((void)combine_pd_aod(q, split_aod(shared, q.m2_type.vars()[0]), CombineVariant::i, clash));
    const Aod b2 = aod_2(clash);
    const Od ok = combine_pd_aod(q, split_aod(b2, b2.d_type.vars()[0]), CombineVariant::ii, clash);
    CHECK(verify_od(ok.matrix, ok.type).pass);
}

TEST_CASE("combined weights arithmetic") {
    const std::vector<std::int64_t> ones{1, 1, 1}, n20{17}, c{1, 1, 2}, w{1, 2};
    CHECK(combined_weights(ones, ones, n20, c, 1, w, CombineVariant::ii) ==
          std::vector<std::int64_t>{1, 1, 1, 3, 3, 3, 17, 17, 34});
    CHECK(combined_weights(ones, ones, n20, c, 1, w, CombineVariant::i) ==
          std::vector<std::int64_t>{1, 1, 1, 3, 3, 3, 68});
    CHECK(combined_weights(ones, ones, n20, c, 1, w, CombineVariant::iii) ==
          std::vector<std::int64_t>{1, 1, 1, 3, 6, 68});
    CHECK(combined_weights(ones, ones, n20, c, 1, w, CombineVariant::iv) ==
          std::vector<std::int64_t>{1, 1, 1, 3, 6, 17, 17, 34});
    CHECK(parse_variant("iii") == CombineVariant::iii);
    CHECK_FALSE(parse_variant("v"));
    CHECK(to_string(CombineVariant::iv) == "iv");
}

TEST_CASE("doubling") {
    VarRegistry reg;
    const Aod a24 = aod24_vars(reg);
    const Aod d1 = double_aod(a24, 1, reg);
    CHECK(d1.c.order() == 48);
    CHECK(weights(d1.c_type) == "4,4,4,18,18");
    CHECK(weights(d1.d_type) == "4,4,4,36");
    CHECK(verify_aod(d1).pass);
    CHECK(is_full(d1.c).pass);
    CHECK(is_full(d1.d).pass);

    const Aod d2 = double_aod(a24, 2, reg, a24.c_type.vars()[3]);
    CHECK(weights(d2.c_type) == "8,8,8,18,18,36");
    CHECK(weights(d2.d_type) == "8,8,8,72");
    CHECK(verify_aod(d2).pass);

    const Aod a16 = aod16_vars(reg);
    const Aod d16 = double_aod(a16, 1, reg);
    CHECK(weights(d16.c_type) == "4,4,4,10,10");
    CHECK(weights(d16.d_type) == "4,4,4,20");

    // splitting a light variable follows the same rule
    const Aod light = double_aod(a16, 1, reg, a16.c_type.vars()[0]);
    CHECK(weights(light.c_type) == "2,2,4,4,20");

    CHECK_THROWS((void)double_aod(a16, 0, reg));
    CHECK_THROWS((void)double_aod(a16, 1, reg, a16.d_type.vars()[0]));
}

TEST_CASE("signed permutations agree with their matrices") {
    std::mt19937 rng(11);
    for (int round = 0; round < 50; ++round) {
        const std::size_t n = 1 + rng() % 6;
        const auto a = random_signed_permutation(rng, n);
        const auto b = random_signed_permutation(rng, n);
        const auto c = random_signed_permutation(rng, 1 + rng() % 3);
        CHECK((a * b).to_matrix() == mat_mul(a.to_matrix(), b.to_matrix()));
        CHECK(a.transpose().to_matrix() == transpose(a.to_matrix()));
        CHECK(kron(a, c).to_matrix() == kron(a.to_matrix(), c.to_matrix()));
        CHECK(SignedPermutation::from_matrix(a.to_matrix()) == a);
        CHECK(amicable(a, b) == verify_amicable(a.to_matrix(), b.to_matrix()).pass);
        CHECK(antiamicable(a, b) == verify_antiamicable(a.to_matrix(), b.to_matrix()).pass);
        CHECK(disjoint(a, b) == verify_disjoint(a.to_matrix(), b.to_matrix()).pass);
        CHECK(gram(a.to_matrix()) == PolyMatrix::identity(n));
    }
    CHECK_FALSE(SignedPermutation::from_matrix(PolyMatrix::from_ints({{1, 1}, {0, 1}})));
    CHECK_FALSE(SignedPermutation::from_matrix(PolyMatrix::from_ints({{2, 0}, {0, 1}})));
    CHECK_THROWS(SignedPermutation({0, 0}, {1, 1}));
}

TEST_CASE("signed permutation sets") {
    const BaseBlocks bb = base2_blocks();
    const WolfeSets w = wolfe_sets(1, 1);
    REQUIRE(w.a.size() == 2);
    CHECK(w.a[0].to_matrix() == bb.i);
    CHECK(w.a[1].to_matrix() == bb.r);
    CHECK(w.b[0].to_matrix() == bb.p);
    CHECK(w.b[1].to_matrix() == bb.q);
    for (unsigned s = 1; s <= 4; ++s)
        for (unsigned d : {1U, 3U}) {
            const WolfeSets ws = wolfe_sets(s, d);
            CHECK(ws.order == (1U << s) * d);
            CHECK(ws.a.size() == s + 1);
            const auto r = check_wolfe_sets(ws);
            CHECK(r.pass);
            CHECK(r.checks.size() == 2 * (s + 1) + 2 * (s + 1) * s + (s + 1) * (s + 1));
        }
    CHECK_THROWS(wolfe_sets(0, 1));
    CHECK_THROWS(wolfe_sets(2, 2));
}

TEST_CASE("order-128 blocks of the order 512 design") {
    VarRegistry reg;
    const Aod512Blocks bl = aod512_blocks(reg);
    for (int j = 0; j < 4; ++j) {
        const Polynomial x1 = Polynomial::variable(bl.x_vars[2 * j]);
        const Polynomial x2 = Polynomial::variable(bl.x_vars[2 * j + 1]);
        CHECK(is_scalar_identity(gram(bl.x[j])) == Polynomial(64) * (x1 * x1 + x2 * x2));
        CHECK(is_full(bl.x[j]).pass);
        CHECK(is_full(bl.y[j]).pass);
        for (int i = 0; i < 4; ++i) {
            if (i != j) {
                CHECK(verify_antiamicable(bl.x[i], bl.x[j]).pass);
                CHECK(verify_antiamicable(bl.y[i], bl.y[j]).pass);
            }
            CHECK(verify_amicable(bl.x[i], bl.y[j]).pass);
        }
    }
}

TEST_CASE("catalog") {
    CHECK(find_catalog_entry("aod48_example_3_2"));
    CHECK(find_catalog_entry("od1024"));
    CHECK_FALSE(find_catalog_entry("nosuch"));
    for (const CatalogEntry& e : catalog()) {
        if (e.order >= 512) continue;  // covered by the acceptance suite
        CAPTURE(e.name);
        VarRegistry reg;
        const BuiltDesign built = e.build(reg);
        const auto r = verify_built(e, built);
        CHECK_MESSAGE(r.pass, r.describe(reg));
        if (built.aod && e.full) {
            CHECK(verify_od(aod_to_od(built.aod->c, built.aod->d), built.aod->c_type.concat(built.aod->d_type)).pass);
            for (const PolyMatrix* m : {&built.aod->c, &built.aod->d})
                CHECK(is_scalar_identity(gram(substitute_all(*m))) == Polynomial(static_cast<std::int64_t>(e.order)));
        }
    }
}
