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

#ifndef ODTOOL_CONSTRUCTIONS_HPP
#define ODTOOL_CONSTRUCTIONS_HPP

#include <array>
#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "odtool/designs.hpp"
#include "odtool/signed_permutation.hpp"

namespace odtool {

/// A builder precondition or post-verification failed.
class ConstructionError : public std::runtime_error {
   public:
    explicit ConstructionError(const std::string& what, std::optional<VerificationReport> report = std::nullopt)
        : std::runtime_error(what), report(std::move(report)) {}
    std::optional<VerificationReport> report;
};

struct BaseBlocks {
    PolyMatrix i;  // identity
    PolyMatrix p;  // [[0,1],[1,0]]
    PolyMatrix q;  // diag(1,-1)
    PolyMatrix r;  // [[0,1],[-1,0]]
};

BaseBlocks base2_blocks();

/// Order 2^k, iterated Kronecker power of [[1,1],[1,-1]].
PolyMatrix sylvester_hadamard(unsigned k);

/// AOD(2; 1,1; 1,1): C = a Q + b P, D = c I + d R.
Aod aod_2(VarRegistry& reg);

struct Od {
    PolyMatrix matrix;
    TypeVector type;
};

// ---------------------------------------------------------------------------
// Block constructions of orders 16n and 24n

/// The eight order-n inputs of the block constructions.
struct BlockInputs {
    PolyMatrix a1, a2, b, c, d, e, f, g;
};

/// Which block template to use: 8x8 blocks (order 16n) or 12x12 blocks (order 24n).
enum class Layout { eight, twelve };

enum class AssemblyMode { disjoint, full };

struct LayoutBlocks {
    PolyMatrix m1, m2, n1, n2;
};

/// Number of nonzero blocks per row of N; the weight on A_i A_i^T in the sum condition.
int layout_weight(Layout layout);
std::size_t layout_blocks(Layout layout);

/// Expands the block template with the given inputs.
LayoutBlocks assemble_layout(Layout layout, const BlockInputs& in);

/// N1 N2^T = N2 N1^T, M1 M2^T = M2 M1^T, Mj Ni^T = -Ni Mj^T and Mj * Ni = 0.
VerificationReport check_layout_relations(const LayoutBlocks& blocks);

/// Checks every precondition, assembles (U; V), infers the types from the
/// Gram forms and post-verifies. Throws ConstructionError naming the violated condition.
Aod block_construction(Layout layout, const BlockInputs& in, AssemblyMode mode,
                       const PolyMatrix& h = sylvester_hadamard(1));

inline Aod construction_16n(const BlockInputs& in, AssemblyMode mode, const PolyMatrix& h = sylvester_hadamard(1)) {
    return block_construction(Layout::eight, in, mode, h);
}
inline Aod construction_24n(const BlockInputs& in, AssemblyMode mode, const PolyMatrix& h = sylvester_hadamard(1)) {
    return block_construction(Layout::twelve, in, mode, h);
}

/// Circulant inputs producing AOD(48; 4,10,34; 4,44) in full mode.
BlockInputs example_inputs_48(VarRegistry& reg);
/// Circulant inputs producing AOD(72; 18,54; 72) in full mode.
BlockInputs example_inputs_72(VarRegistry& reg);
/// Order-7 circulant and back-circulant inputs producing AOD(168; 4,164; 4,164) in full mode.
BlockInputs example_inputs_168(VarRegistry& reg);

/// M1, M2, N1 of the block templates with one variable per 1x1 block.
ProductDesign pd8(VarRegistry& reg);
ProductDesign pd12(VarRegistry& reg);

/// Full-mode block construction with one variable per 1x1 block:
/// AOD(16; 2,2,2,10; 2,2,2,10) and AOD(24; 2,2,2,18; 2,2,2,18).
/// The last variable of each side is the one carried by A1 (resp. A2).
Aod aod16_vars(VarRegistry& reg);
Aod aod24_vars(VarRegistry& reg);

// ---------------------------------------------------------------------------
// Combining a product design with an amicable design

enum class CombineVariant { i, ii, iii, iv };

std::string to_string(CombineVariant v);
std::optional<CombineVariant> parse_variant(std::string_view s);

/// Weights of the OD obtained from a PD of type (pd_m1; pd_m2; pd_n) and an
/// AOD of type (aod_c; v, aod_d2), in output order.
std::vector<std::int64_t> combined_weights(std::span<const std::int64_t> pd_m1, std::span<const std::int64_t> pd_m2,
                                           std::span<const std::int64_t> pd_n, std::span<const std::int64_t> aod_c,
                                           std::int64_t v, std::span<const std::int64_t> aod_d2,
                                           CombineVariant variant);

/// X = M1 (x) D1' + M2 (x) D2' + N (x) C', where per variant one factor of each
/// pair keeps its variables and the other is collapsed to 1. AOD variables are
/// renamed when they clash with the PD's. The result is verified before return.
Od combine_pd_aod(const ProductDesign& pd, const AodSplit& aod, CombineVariant variant, VarRegistry& reg);

// ---------------------------------------------------------------------------
// Doubling

/// Sign pattern of a doubling candidate. The C side is
///   [[s0 R + s1 x X, s2 R + s3 z X], [s4 R + s5 z X, s6 R + s7 x X]]
/// where X is the coefficient matrix of the split variable x, R = C - x X and
/// z is new; with `swap_new` the z blocks take the diagonal and the x blocks
/// the off-diagonal. The D side is [[t0 D, t1 D], [t2 D, t3 D]].
struct DoublingPattern {
    std::array<int, 8> c_signs{};
    std::array<int, 4> d_signs{};
    bool swap_new = false;
};

/// The classical pattern, tried before any other.
DoublingPattern classical_doubling();

/// Applies the doubling step `t` times, always splitting `split`. Each step
/// keeps the weight of `split`, adds a new variable of the same weight
/// directly after it and doubles every other weight. When `split` is absent
/// the heaviest C-side variable is used. Every step is verified against the
/// exact expected type; if the classical pattern fails, the remaining sign
/// patterns are searched in a fixed order.
Aod double_aod(const Aod& aod, unsigned t, VarRegistry& reg, std::optional<VarId> split = std::nullopt);

// ---------------------------------------------------------------------------
// Signed permutation families and the order 512 / 1024 designs

struct WolfeSets {
    std::vector<SignedPermutation> a;
    std::vector<SignedPermutation> b;
    std::size_t order = 0;
};

/// s+1 matrices on each side, order 2^s d. Requires s >= 1 and d odd.
WolfeSets wolfe_sets(unsigned s, unsigned d);

/// Pair-exhaustive check: each side mutually anti-amicable and disjoint,
/// every cross pair amicable.
VerificationReport check_wolfe_sets(const WolfeSets& sets);

/// The order-128 blocks X_1..X_4 (C side) and Y_1..Y_4 (D side).
struct Aod512Blocks {
    std::vector<PolyMatrix> x;
    std::vector<PolyMatrix> y;
    std::vector<VarId> x_vars;  // 8
    std::vector<VarId> y_vars;  // 8
};

Aod512Blocks aod512_blocks(VarRegistry& reg);
/// AOD(512; 64 x8; 64 x8), full.
Aod aod512(VarRegistry& reg);
/// OD(1024; 64 x16) = [[C, D], [D, -C]] of aod512, full.
Od od1024(VarRegistry& reg);

// ---------------------------------------------------------------------------
// Catalog

/// A built catalog design: either an AOD, a PD or a single OD.
struct BuiltDesign {
    std::optional<Aod> aod;
    std::optional<ProductDesign> pd;
    std::optional<Od> od;
};

struct CatalogEntry {
    std::string name;
    std::string description;
    std::size_t order;
    /// Claimed weights per matrix, e.g. {"4,10,34", "4,44"}.
    std::vector<std::string> claimed_types;
    /// Every matrix of the design has no zero entry.
    bool full = false;
    std::function<BuiltDesign(VarRegistry&)> build;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_catalog_entry(std::string_view name);

/// Runs the design's own verification and compares its weights with the claim.
VerificationReport verify_built(const CatalogEntry& entry, const BuiltDesign& built);

}  // namespace odtool

#endif
