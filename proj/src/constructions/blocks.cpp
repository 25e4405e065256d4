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

#include <sstream>

#include "layouts.hpp"
#include "odtool/constructions.hpp"

namespace odtool {

namespace {

struct Template {
    const std::vector<std::string_view>& m1;
    const std::vector<std::string_view>& m2;
    const std::vector<std::string_view>& n;
};

Template layout_template(Layout layout) {
    if (layout == Layout::eight) return {detail::kEightM1, detail::kEightM2, detail::kEightN};
    return {detail::kTwelveM1, detail::kTwelveM2, detail::kTwelveN};
}

const PolyMatrix& block_for(char name, const BlockInputs& in, const PolyMatrix& a) {
    switch (name) {
        case 'A': return a;
        case 'B': return in.b;
        case 'C': return in.c;
        case 'D': return in.d;
        case 'E': return in.e;
        case 'F': return in.f;
        case 'G': return in.g;
        default: throw std::logic_error(std::string("unknown block token ") + name);
    }
}

PolyMatrix expand(const std::vector<std::string_view>& rows, const BlockInputs& in, const PolyMatrix& a) {
    const std::size_t n = in.b.order();
    std::vector<std::vector<PolyMatrix>> grid;
    for (std::string_view row : rows) {
        std::istringstream tokens{std::string(row)};
        std::vector<PolyMatrix> line;
        std::string tok;
        while (tokens >> tok) {
            if (tok == "0") {
                line.emplace_back(n);
            } else if (tok[0] == '-') {
                line.push_back(-block_for(tok[1], in, a));
            } else {
                line.push_back(block_for(tok[0], in, a));
            }
        }
        grid.push_back(std::move(line));
    }
    return block_matrix(grid);
}

[[noreturn]] void fail(const std::string& what, const VerificationReport& r, const VarRegistry* reg = nullptr) {
    std::string msg = what;
    if (reg) {
        msg += ": " + r.describe(*reg);
    } else if (r.witness) {
        msg += ": " + r.witness->condition;
    }
    throw ConstructionError(msg, r);
}

void require_scalar(const PolyMatrix& sum, const std::string& equation) {
    if (!is_scalar_identity(sum)) throw ConstructionError(equation + " is not a scalar multiple of the identity");
}

void check_hadamard_2(const PolyMatrix& h) {
    if (h.order() != 2) throw ConstructionError("H must have order 2");
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            if (h(i, j) != Polynomial(1) && h(i, j) != Polynomial(-1))
                throw ConstructionError("H must have entries +-1");
    if (gram(h) != PolyMatrix::from_ints({{2, 0}, {0, 2}})) throw ConstructionError("H H^T must equal 2 I");
}

Polynomial var(VarRegistry& reg, const char* name) { return Polynomial::variable(reg.fresh(name)); }

}  // namespace

BaseBlocks base2_blocks() {
    return {PolyMatrix::from_ints({{1, 0}, {0, 1}}), PolyMatrix::from_ints({{0, 1}, {1, 0}}),
            PolyMatrix::from_ints({{1, 0}, {0, -1}}), PolyMatrix::from_ints({{0, 1}, {-1, 0}})};
}

PolyMatrix sylvester_hadamard(unsigned k) {
    const PolyMatrix h2 = PolyMatrix::from_ints({{1, 1}, {1, -1}});
    PolyMatrix h = PolyMatrix::from_ints({{1}});
    for (unsigned i = 0; i < k; ++i) h = kron(h, h2);
    return h;
}

Aod aod_2(VarRegistry& reg) {
    const BaseBlocks bb = base2_blocks();
    const VarId a = reg.fresh("a"), b = reg.fresh("b"), c = reg.fresh("c"), d = reg.fresh("d");
    Aod out{Polynomial::variable(a) * bb.q + Polynomial::variable(b) * bb.p,
            Polynomial::variable(c) * bb.i + Polynomial::variable(d) * bb.r, TypeVector({1, 1}, {a, b}),
            TypeVector({1, 1}, {c, d})};
    auto r = verify_aod(out);
    if (!r.pass) fail("aod_2", r, &reg);
    return out;
}

int layout_weight(Layout layout) { return layout == Layout::eight ? 5 : 9; }

std::size_t layout_blocks(Layout layout) { return layout == Layout::eight ? 8 : 12; }

LayoutBlocks assemble_layout(Layout layout, const BlockInputs& in) {
    const std::size_t n = in.b.order();
    for (const PolyMatrix* m : {&in.a1, &in.a2, &in.c, &in.d, &in.e, &in.f, &in.g})
        if (m->order() != n) throw DimensionMismatch("block inputs", n, m->order());
    const Template t = layout_template(layout);
    return {expand(t.m1, in, in.a1), expand(t.m2, in, in.a1), expand(t.n, in, in.a1), expand(t.n, in, in.a2)};
}

VerificationReport check_layout_relations(const LayoutBlocks& bl) {
    VerificationReport out = VerificationReport::ok("block relations");
    std::optional<Witness> first;
    auto record = [&](const std::string& name, VerificationReport r) {
        out.checks.push_back({name, r.pass});
        if (!r.pass && !first) {
            first = *r.witness;
            first->condition = name + ": " + first->condition;
        }
    };
    record("N1 N2^T = N2 N1^T", verify_amicable(bl.n1, bl.n2));
    record("M1 M2^T = M2 M1^T", verify_amicable(bl.m1, bl.m2));
    const std::pair<const char*, const PolyMatrix*> ms[] = {{"M1", &bl.m1}, {"M2", &bl.m2}};
    const std::pair<const char*, const PolyMatrix*> ns[] = {{"N1", &bl.n1}, {"N2", &bl.n2}};
    for (const auto& [mn, m] : ms)
        for (const auto& [nn, n] : ns) {
            record(std::string(mn) + " " + nn + "^T = -" + nn + " " + mn + "^T", verify_antiamicable(*m, *n));
            record(std::string(mn) + " * " + nn + " = 0", verify_disjoint(*m, *n));
        }
    if (first) {
        out.pass = false;
        out.witness = std::move(first);
    }
    return out;
}

Aod block_construction(Layout layout, const BlockInputs& in, AssemblyMode mode, const PolyMatrix& h) {
    const std::vector<PolyMatrix> all{in.a1, in.a2, in.b, in.c, in.d, in.e, in.f, in.g};
    for (const PolyMatrix& m : all)
        if (m.order() != in.a1.order()) throw ConstructionError("inputs must share one order");

    if (auto r = verify_pairwise_amicable(all); !r.pass) fail("inputs are not pairwise amicable", r);

    const int w = layout_weight(layout);
    const std::string ws = std::to_string(w);
    require_scalar(Polynomial(w) * gram(in.a1) + gram(in.b) + gram(in.c) + gram(in.d),
                   ws + " A1 A1^T + B B^T + C C^T + D D^T");
    require_scalar(Polynomial(w) * gram(in.a2) + gram(in.e) + gram(in.f) + gram(in.g),
                   ws + " A2 A2^T + E E^T + F F^T + G G^T");

    if (mode == AssemblyMode::full) {
        const char* names = "ABCDEFG";
        const PolyMatrix* inputs[] = {&in.a1, &in.b, &in.c, &in.d, &in.e, &in.f, &in.g};
        for (int k = 0; k < 7; ++k)
            if (!is_full(*inputs[k]).pass)
                throw ConstructionError(std::string("full mode needs inputs without zero entries; ") + names[k] +
                                        (k == 0 ? "1" : "") + " has one");
        if (!is_full(in.a2).pass) throw ConstructionError("full mode needs inputs without zero entries; A2 has one");
        check_hadamard_2(h);
    }

    const LayoutBlocks bl = assemble_layout(layout, in);
    if (auto r = check_layout_relations(bl); !r.pass) fail("block template relations", r);

    const BaseBlocks bb = base2_blocks();
    const PolyMatrix rt = transpose(bb.r);
    PolyMatrix u, v;
    if (mode == AssemblyMode::disjoint) {
        u = kron(bl.n1, bb.i) + kron(bl.m1, bb.q);
        v = kron(bl.n2, bb.p) + kron(bl.m2, rt);
    } else {
        u = kron(bl.n1, h) + kron(bl.m1, bb.q * h);
        v = kron(bl.n2, bb.p * h) + kron(bl.m2, rt * h);
    }

    auto tu = infer_type(u);
    auto tv = infer_type(v);
    if (!tu) throw ConstructionError("assembled U is not an orthogonal design");
    if (!tv) throw ConstructionError("assembled V is not an orthogonal design");
    Aod out{std::move(u), std::move(v), std::move(*tu), std::move(*tv)};
    for (VarId x : out.c_type.vars())
        if (out.d_type.weight_of(x)) throw ConstructionError("U and V share a variable");
    if (auto r = verify_aod(out); !r.pass) fail("assembled pair", r);
    if (mode == AssemblyMode::disjoint) {
        if (auto r = verify_disjoint(out.c, out.d); !r.pass) fail("assembled pair", r);
    } else {
        if (auto r = is_full(out.c); !r.pass) fail("U", r);
        if (auto r = is_full(out.d); !r.pass) fail("V", r);
    }
    return out;
}

BlockInputs example_inputs_48(VarRegistry& reg) {
    // Creation order fixes the order of the inferred types.
    const Polynomial a = var(reg, "a"), x = var(reg, "x"), b = var(reg, "b");
    const Polynomial c = var(reg, "c"), d = var(reg, "d");
    return {backcirc({x, -b, b}), circ({-d, d, d}), circ({b, b, b}), circ({-a, b, b}),
            circ({a, b, b}),      circ({d, d, d}),  circ({-c, d, d}), circ({c, d, d})};
}

BlockInputs example_inputs_72(VarRegistry& reg) {
    const Polynomial x = var(reg, "x"), b = var(reg, "b"), d = var(reg, "d");
    const PolyMatrix bbb = circ({b, b, b});
    const PolyMatrix ddd = circ({d, d, d});
    return {backcirc({x, -b, b}), circ({-d, d, d}), bbb, bbb, bbb, ddd, ddd, ddd};
}

BlockInputs example_inputs_168(VarRegistry& reg) {
    const Polynomial b = var(reg, "b"), a = var(reg, "a"), d = var(reg, "d"), c = var(reg, "c");
    auto pattern = [](const Polynomial& p) { return std::vector<Polynomial>{p, -p, -p, p, -p, p, p}; };
    auto lead = [](const Polynomial& first, const Polynomial& rest) {
        std::vector<Polynomial> row(7, rest);
        row[0] = first;
        return row;
    };
    // The skew-pattern inputs must be back-circulant to stay amicable with the symmetric circulants.
    return {backcirc(pattern(a)), backcirc(pattern(c)), circ(lead(b, a)),  circ(lead(-b, a)),
            backcirc(pattern(a)), circ(lead(d, c)),     circ(lead(-d, c)), backcirc(pattern(c))};
}

namespace {

ProductDesign variable_pd(Layout layout, VarRegistry& reg) {
    const char* names[] = {"a", "b", "c", "d", "e", "f", "g"};
    std::vector<VarId> ids;
    for (const char* n : names) ids.push_back(reg.fresh(n));
    auto one = [&](int k) { return PolyMatrix{{Polynomial::variable(ids[k])}}; };
    const BlockInputs in{one(0), one(0), one(1), one(2), one(3), one(4), one(5), one(6)};
    const LayoutBlocks bl = assemble_layout(layout, in);
    ProductDesign pd{bl.m1,
                     bl.m2,
                     bl.n1,
                     TypeVector({1, 1, 1}, {ids[1], ids[2], ids[3]}),
                     TypeVector({1, 1, 1}, {ids[4], ids[5], ids[6]}),
                     TypeVector({layout_weight(layout)}, {ids[0]})};
    if (auto r = verify_pd(pd); !r.pass) fail("product design", r, &reg);
    return pd;
}

Aod variable_aod(Layout layout, VarRegistry& reg) {
    std::vector<VarId> xs, ys;
    for (const char* n : {"x1", "x2", "x3", "x4"}) xs.push_back(reg.fresh(n));
    for (const char* n : {"y1", "y2", "y3", "y4"}) ys.push_back(reg.fresh(n));
    auto one = [](VarId v) { return PolyMatrix{{Polynomial::variable(v)}}; };
    const BlockInputs in{one(xs[3]), one(ys[3]), one(xs[0]), one(xs[1]),
                         one(xs[2]), one(ys[0]), one(ys[1]), one(ys[2])};
    Aod built = block_construction(layout, in, AssemblyMode::full);
    const std::int64_t heavy = 2 * layout_weight(layout);
    Aod out{std::move(built.c), std::move(built.d), TypeVector({2, 2, 2, heavy}, xs),
            TypeVector({2, 2, 2, heavy}, ys)};
    if (auto r = verify_aod(out); !r.pass) fail("variable AOD", r, &reg);
    return out;
}

}  // namespace

ProductDesign pd8(VarRegistry& reg) { return variable_pd(Layout::eight, reg); }
ProductDesign pd12(VarRegistry& reg) { return variable_pd(Layout::twelve, reg); }
Aod aod16_vars(VarRegistry& reg) { return variable_aod(Layout::eight, reg); }
Aod aod24_vars(VarRegistry& reg) { return variable_aod(Layout::twelve, reg); }

}  // namespace odtool
