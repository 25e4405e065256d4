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

BuiltDesign from_aod(Aod a) { return BuiltDesign{std::move(a), std::nullopt, std::nullopt}; }
BuiltDesign from_pd(ProductDesign p) { return BuiltDesign{std::nullopt, std::move(p), std::nullopt}; }
BuiltDesign from_od(Od o) { return BuiltDesign{std::nullopt, std::nullopt, std::move(o)}; }

AodSplit aod2_split(VarRegistry& reg) {
    const Aod a = aod_2(reg);
    return split_aod(a, a.d_type.vars()[0]);
}

std::vector<CatalogEntry> make_catalog() {
    std::vector<CatalogEntry> c;
    c.push_back({"aod2", "AOD(2; 1,1; 1,1), C = aQ + bP, D = cI + dR", 2, {"1,1", "1,1"}, true,
                 [](VarRegistry& r) { return from_aod(aod_2(r)); }});
    c.push_back({"aod48_example_3_2", "full AOD(48; 4,10,34; 4,44) from order-3 circulants, 8-block template", 48,
                 {"4,10,34", "4,44"}, true, [](VarRegistry& r) {
                     return from_aod(construction_16n(example_inputs_48(r), AssemblyMode::full));
                 }});
    c.push_back({"aod48_disjoint", "disjoint AOD(48; 2,5,17; 2,22), same inputs as aod48_example_3_2", 48,
                 {"2,5,17", "2,22"}, false, [](VarRegistry& r) {
                     return from_aod(construction_16n(example_inputs_48(r), AssemblyMode::disjoint));
                 }});
    c.push_back({"aod72_full", "full AOD(72; 18,54; 72) from order-3 circulants, 12-block template", 72,
                 {"18,54", "72"}, true, [](VarRegistry& r) {
                     return from_aod(construction_24n(example_inputs_72(r), AssemblyMode::full));
                 }});
    c.push_back({"aod72_disjoint", "disjoint AOD(72; 9,27; 36), same inputs as aod72_full", 72, {"9,27", "36"},
                 false, [](VarRegistry& r) {
                     return from_aod(construction_24n(example_inputs_72(r), AssemblyMode::disjoint));
                 }});
    c.push_back({"aod168_full", "full AOD(168; 4,164; 4,164) from order-7 circulants, 12-block template", 168,
                 {"4,164", "4,164"}, true, [](VarRegistry& r) {
                     return from_aod(construction_24n(example_inputs_168(r), AssemblyMode::full));
                 }});
    c.push_back({"pd8", "PD(8; 1,1,1; 1,1,1; 5)", 8, {"1,1,1", "1,1,1", "5"}, false,
                 [](VarRegistry& r) { return from_pd(pd8(r)); }});
    c.push_back({"pd12", "PD(12; 1,1,1; 1,1,1; 9)", 12, {"1,1,1", "1,1,1", "9"}, false,
                 [](VarRegistry& r) { return from_pd(pd12(r)); }});
    c.push_back({"aod16", "full AOD(16; 2,2,2,10; 2,2,2,10), one variable per block", 16,
                 {"2,2,2,10", "2,2,2,10"}, true, [](VarRegistry& r) { return from_aod(aod16_vars(r)); }});
    c.push_back({"aod24", "full AOD(24; 2,2,2,18; 2,2,2,18), one variable per block", 24,
                 {"2,2,2,18", "2,2,2,18"}, true, [](VarRegistry& r) { return from_aod(aod24_vars(r)); }});
    c.push_back({"aod32_doubled", "full AOD(32; 4,4,4,10,10; 4,4,4,20), aod16 doubled once", 32,
                 {"4,4,4,10,10", "4,4,4,20"}, true, [](VarRegistry& r) {
                     const Aod a = aod16_vars(r);
                     return from_aod(double_aod(a, 1, r, a.c_type.vars()[3]));
                 }});
    c.push_back({"aod48_doubled", "full AOD(48; 4,4,4,18,18; 4,4,4,36), aod24 doubled once", 48,
                 {"4,4,4,18,18", "4,4,4,36"}, true, [](VarRegistry& r) {
                     const Aod a = aod24_vars(r);
                     return from_aod(double_aod(a, 1, r, a.c_type.vars()[3]));
                 }});
    c.push_back({"aod96_doubled", "full AOD(96; 8,8,8,18,18,36; 8,8,8,72), aod24 doubled twice", 96,
                 {"8,8,8,18,18,36", "8,8,8,72"}, true, [](VarRegistry& r) {
                     const Aod a = aod24_vars(r);
                     return from_aod(double_aod(a, 2, r, a.c_type.vars()[3]));
                 }});
    c.push_back({"od16_pd8_aod2", "full OD(16; 1,1,1,1,1,1,10) from pd8 and aod2, variant i", 16,
                 {"1,1,1,1,1,1,10"}, true, [](VarRegistry& r) {
                     const ProductDesign pd = pd8(r);
                     return from_od(combine_pd_aod(pd, aod2_split(r), CombineVariant::i, r));
                 }});
    c.push_back({"od24_pd12_aod2", "full OD(24; 1,1,1,1,1,1,9,9) from pd12 and aod2, variant ii", 24,
                 {"1,1,1,1,1,1,9,9"}, true, [](VarRegistry& r) {
                     const ProductDesign pd = pd12(r);
                     return from_od(combine_pd_aod(pd, aod2_split(r), CombineVariant::ii, r));
                 }});
    c.push_back({"aod512", "full AOD(512; 64 x8; 64 x8) from signed permutation sets of order 128", 512,
                 {"64,64,64,64,64,64,64,64", "64,64,64,64,64,64,64,64"}, true,
                 [](VarRegistry& r) { return from_aod(aod512(r)); }});
    c.push_back({"od1024", "full OD(1024; 64 x16) = [[C, D], [D, -C]] of aod512", 1024,
                 {"64,64,64,64,64,64,64,64,64,64,64,64,64,64,64,64"}, true,
                 [](VarRegistry& r) { return from_od(od1024(r)); }});
    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = make_catalog();
    return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

VerificationReport verify_built(const CatalogEntry& entry, const BuiltDesign& built) {
    std::vector<const PolyMatrix*> mats;
    std::vector<const TypeVector*> types;
    VerificationReport report;
    if (built.aod) {
        report = verify_aod(*built.aod);
        mats = {&built.aod->c, &built.aod->d};
        types = {&built.aod->c_type, &built.aod->d_type};
    } else if (built.pd) {
        report = verify_pd(*built.pd);
        mats = {&built.pd->m1, &built.pd->m2, &built.pd->n};
        types = {&built.pd->m1_type, &built.pd->m2_type, &built.pd->n_type};
    } else if (built.od) {
        report = verify_od(built.od->matrix, built.od->type);
        mats = {&built.od->matrix};
        types = {&built.od->type};
    } else {
        return VerificationReport::fail(entry.name, Witness{{}, {}, {}, "nothing was built", {}});
    }
    report.claim = entry.name + ": " + report.claim;
    if (!report.pass) return report;

    auto fail_with = [&](std::string condition) {
        report.pass = false;
        report.witness = Witness{{}, {}, {}, std::move(condition), {}};
        return report;
    };
    if (mats.front()->order() != entry.order)
        return fail_with("order is " + std::to_string(mats.front()->order()) + ", claimed " +
                         std::to_string(entry.order));
    if (types.size() != entry.claimed_types.size()) return fail_with("wrong number of matrices");
    for (std::size_t k = 0; k < types.size(); ++k) {
        const bool same = types[k]->weights_string() == entry.claimed_types[k];
        report.checks.push_back({"type of matrix " + std::to_string(k + 1) + " is (" + entry.claimed_types[k] + ")",
                                 same});
        if (!same)
            return fail_with("matrix " + std::to_string(k + 1) + " has type (" + types[k]->weights_string() +
                             "), claimed (" + entry.claimed_types[k] + ")");
    }
    if (entry.full) {
        for (std::size_t k = 0; k < mats.size(); ++k) {
            const bool full = is_full(*mats[k]).pass;
            report.checks.push_back({"matrix " + std::to_string(k + 1) + " is full", full});
            if (!full) return fail_with("matrix " + std::to_string(k + 1) + " has a zero entry");
        }
        for (std::size_t k = 0; k < mats.size(); ++k)
            if (types[k]->sum() != static_cast<std::int64_t>(entry.order))
                return fail_with("full design with type sum " + std::to_string(types[k]->sum()));
    }
    return report;
}

}  // namespace odtool
