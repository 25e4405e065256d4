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

#include <charconv>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "odtool/cli.hpp"
#include "odtool/constructions.hpp"
#include "odtool/numtheory.hpp"

namespace odtool {

namespace {

struct Output {
    std::ostream& out;
    std::ostream& err;
    bool quiet = false;

    template <class T>
    Output& operator<<(const T& v) {
        if (!quiet) out << v;
        return *this;
    }
};

std::vector<std::int64_t> parse_int_list(const std::string& s, const std::string& what) {
    std::vector<std::int64_t> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::int64_t v = 0;
        auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), v);
        if (item.empty() || ec != std::errc() || p != item.data() + item.size())
            throw ParseError("bad " + what + " '" + s + "'");
        out.push_back(v);
    }
    if (out.empty()) throw ParseError("empty " + what);
    return out;
}

std::vector<std::vector<std::int64_t>> parse_types(const std::string& s) {
    std::vector<std::vector<std::int64_t>> out;
    std::stringstream ss(s);
    std::string group;
    while (std::getline(ss, group, '/')) out.push_back(parse_int_list(group, "type"));
    if (!s.empty() && s.back() == '/') throw ParseError("bad type '" + s + "'");
    return out;
}

// ---------------------------------------------------------------------------
// build

struct BuildArgs {
    std::string name;
    std::string dir = ".";
    bool quiet = false;
};

int cmd_build(const BuildArgs& a, Output& o) {
    const CatalogEntry* entry = find_catalog_entry(a.name);
    if (!entry) {
        o.err << "odtool: unknown design '" << a.name << "'; run 'odtool catalog' for the list\n";
        return kUsage;
    }
    VarRegistry reg;
    const auto start = std::chrono::steady_clock::now();
    BuiltDesign built;
    try {
        built = entry->build(reg);
    } catch (const ConstructionError& e) {
        o.err << "odtool: construction of " << a.name << " failed: " << e.what() << "\n";
        return kFail;
    }
    const VerificationReport report = verify_built(*entry, built);
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!report.pass) {
        o.err << report.describe(reg) << "\nnothing written\n";
        return kFail;
    }

    std::vector<std::pair<std::string, std::pair<const PolyMatrix*, const TypeVector*>>> files;
    if (built.aod) {
        files = {{".C.od", {&built.aod->c, &built.aod->c_type}}, {".D.od", {&built.aod->d, &built.aod->d_type}}};
    } else if (built.pd) {
        files = {{".M1.od", {&built.pd->m1, &built.pd->m1_type}},
                 {".M2.od", {&built.pd->m2, &built.pd->m2_type}},
                 {".N.od", {&built.pd->n, &built.pd->n_type}}};
    } else {
        files = {{".od", {&built.od->matrix, &built.od->type}}};
    }
    std::vector<std::pair<std::filesystem::path, std::string>> payloads;
    for (const auto& [suffix, design] : files)
        payloads.emplace_back(std::filesystem::path(a.dir) / (a.name + suffix),
                              serialize_matrix(*design.first, design.second->vars(), reg));
    std::error_code ec;
    std::filesystem::create_directories(a.dir, ec);
    for (const auto& [path, text] : payloads) {
        std::ofstream f(path, std::ios::binary);
        if (!(f << text)) {
            o.err << "odtool: cannot write " << path.string() << "\n";
            return kUsage;
        }
    }
    o << report.describe(reg) << "\n";
    for (std::size_t k = 0; k < files.size(); ++k)
        o << "wrote " << payloads[k].first.string() << "  type " << files[k].second.second->to_string(reg) << "\n";
    o << "verified in " << std::fixed << std::setprecision(2) << seconds << " s\n";
    return kPass;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
    std::string claim;
    std::string types;
    std::vector<std::string> files;
    bool quiet = false;
};

VerificationReport run_claim(const VerifyArgs& a, const std::vector<MatrixFile>& mats,
                             const std::vector<TypeVector>& types) {
    VerificationReport r;
    if (a.claim == "od") {
        r = verify_od(mats[0].matrix, types[0]);
    } else if (a.claim == "aod") {
        r = verify_aod(mats[0].matrix, mats[1].matrix, types[0], types[1]);
    } else if (a.claim == "pd") {
        r = verify_pd(mats[0].matrix, mats[1].matrix, mats[2].matrix, types[0], types[1], types[2]);
    } else if (a.claim == "full") {
        r = VerificationReport::ok("full");
        for (std::size_t k = 0; k < mats.size() && r.pass; ++k) {
            r = is_full(mats[k].matrix);
            r.claim = a.files[k] + " is full";
        }
        if (r.pass && mats.size() > 1) r.claim = "all " + std::to_string(mats.size()) + " matrices are full";
    } else if (a.claim == "amicable") {
        std::vector<PolyMatrix> ms;
        for (const MatrixFile& m : mats) ms.push_back(m.matrix);
        r = ms.size() == 2 ? verify_amicable(ms[0], ms[1]) : verify_pairwise_amicable(ms);
    } else {
        r = verify_disjoint(mats[0].matrix, mats[1].matrix);
    }
    return r;
}

int cmd_verify(const VerifyArgs& a, Output& o) {
    static const std::map<std::string, std::pair<std::size_t, std::size_t>> arity{
        {"od", {1, 1}}, {"aod", {2, 2}}, {"pd", {3, 3}}, {"full", {1, 64}}, {"amicable", {2, 64}}, {"disjoint", {2, 2}}};
    const auto it = arity.find(a.claim);
    if (it == arity.end()) {
        o.err << "odtool: unknown claim '" << a.claim << "' (expected od, aod, pd, full, amicable or disjoint)\n";
        return kUsage;
    }
    const auto [lo, hi] = it->second;
    if (a.files.size() < lo || a.files.size() > hi) {
        o.err << "odtool: claim '" << a.claim << "' takes " << (lo == hi ? std::to_string(lo) : std::to_string(lo) + "+")
              << " file(s), got " << a.files.size() << "\n";
        return kUsage;
    }

    VarRegistry reg;
    std::vector<MatrixFile> mats;
    for (const std::string& f : a.files) mats.push_back(read_matrix_file(f, reg));

    const bool typed = a.claim == "od" || a.claim == "aod" || a.claim == "pd";
    std::vector<TypeVector> types;
    if (typed && !a.types.empty()) {
        const auto groups = parse_types(a.types);
        if (groups.size() != mats.size())
            throw ParseError("--types has " + std::to_string(groups.size()) + " group(s) for " +
                             std::to_string(mats.size()) + " file(s)");
        for (std::size_t k = 0; k < mats.size(); ++k) {
            if (groups[k].size() != mats[k].vars.size())
                throw ParseError("type group " + std::to_string(k + 1) + " has " + std::to_string(groups[k].size()) +
                                 " weight(s) but " + a.files[k] + " declares " + std::to_string(mats[k].vars.size()) +
                                 " variable(s)");
            for (std::int64_t w : groups[k])
                if (w <= 0) throw ParseError("type weights must be positive");
            types.emplace_back(groups[k], mats[k].vars);
        }
    } else if (typed) {
        for (std::size_t k = 0; k < mats.size(); ++k) {
            auto t = infer_type(mats[k].matrix);
            if (!t) {
                o << "FAIL " << a.files[k] << ": no type can be inferred (not an orthogonal design)\n";
                return kFail;
            }
            o << "inferred type of " << a.files[k] << ": " << t->to_string(reg) << "\n";
            types.push_back(std::move(*t));
        }
    } else if (!a.types.empty()) {
        throw ParseError("--types applies only to od, aod and pd claims");
    }

    VerificationReport r;
    try {
        r = run_claim(a, mats, types);
    } catch (const OverlappingVariables& e) {
        o << "FAIL " << a.claim << ": " << e.what() << "\n";
        return kFail;
    } catch (const DimensionMismatch& e) {
        o << "FAIL " << a.claim << ": " << e.what() << "\n";
        return kFail;
    }
    o << r.describe(reg) << "\n";
    if (!r.checks.empty() && !o.quiet)
        for (const CheckResult& c : r.checks) o << "  [" << (c.passed ? "ok" : "FAILED") << "] " << c.name << "\n";
    return r.pass ? kPass : kFail;
}

// ---------------------------------------------------------------------------
// decide

struct DecideArgs {
    std::int64_t n = 0;
    std::string family;
    std::int64_t order = 0;
    std::int64_t t = 0;
    bool explain = false;
    bool quiet = false;
};

int report_verdict(const std::string& subject, const ExistenceVerdict& v, const DecideArgs& a, Output& o) {
    o << subject << ": " << v.status_string() << "\n";
    if (a.explain) o << v.render();
    switch (v.status) {
        case ExistenceVerdict::Status::exists: return kPass;
        case ExistenceVerdict::Status::not_exists: return kFail;
        case ExistenceVerdict::Status::undecided: return kUndecided;
    }
    return kUndecided;
}

int cmd_catalog(Output& o) {
    for (const CatalogEntry& e : catalog()) {
        std::string types;
        for (const std::string& t : e.claimed_types) types += (types.empty() ? "" : "; ") + t;
        o << e.name << "\n    order " << e.order << ", type (" << types << ")" << (e.full ? ", full" : "") << "\n    "
          << e.description << "\n";
    }
    return kPass;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact construction and verification of orthogonal designs", "odtool"};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", "odtool 1.0.0");

    BuildArgs build;
    auto* b = app.add_subcommand("build", "build a catalog design, verify it and write it to files");
    b->add_option("name", build.name, "catalog name")->required();
    b->add_option("-o,--output", build.dir, "output directory")->capture_default_str();
    b->add_flag("-q,--quiet", build.quiet, "no output on success");

    VerifyArgs verify;
    auto* v = app.add_subcommand("verify", "verify design matrices read from files");
    v->add_option("claim", verify.claim, "od | aod | pd | full | amicable | disjoint")->required();
    v->add_option("files", verify.files, "matrix files")->required();
    v->add_option("--types", verify.types, "weights bound to header variables, e.g. 4,10,34/4,44");
    v->add_flag("-q,--quiet", verify.quiet, "print nothing, report through the exit code");

    DecideArgs decide;
    auto* d = app.add_subcommand("decide", "existence and bound queries");
    d->require_subcommand(1, 1);
    auto common = [&](CLI::App* q) {
        q->add_flag("--explain", decide.explain, "print the chain of rules applied");
        q->add_flag("-q,--quiet", decide.quiet, "print nothing, report through the exit code");
    };
    auto* pd133 = d->add_subcommand("pd133", "PD(n; 1,1,1; 1,1,1; n-3)");
    pd133->add_option("n", decide.n)->required()->check(CLI::PositiveNumber);
    common(pd133);
    auto* rf = d->add_subcommand("rational-family", "rational family of type s1,...,sk");
    rf->add_option("type", decide.family, "comma-separated positive entries")->required();
    rf->add_option("--order", decide.order, "order of the family")->required()->check(CLI::PositiveNumber);
    common(rf);
    auto* rho = d->add_subcommand("rho", "Radon-Hurwitz number");
    rho->add_option("n", decide.n)->required()->check(CLI::PositiveNumber);
    common(rho);
    auto* wolfe = d->add_subcommand("wolfe", "bound on the variables of an amicable design");
    wolfe->add_option("n", decide.n)->required()->check(CLI::PositiveNumber);
    common(wolfe);
    auto* rho_t = d->add_subcommand("rho-t", "variables on one side given t on the other");
    rho_t->add_option("n", decide.n)->required()->check(CLI::PositiveNumber);
    rho_t->add_option("--t", decide.t, "variables on the other side")->required()->check(CLI::PositiveNumber);
    common(rho_t);

    auto* cat = app.add_subcommand("catalog", "list the named designs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    Output o{out, err};
    try {
        if (b->parsed()) {
            o.quiet = build.quiet;
            return cmd_build(build, o);
        }
        if (v->parsed()) {
            o.quiet = verify.quiet;
            return cmd_verify(verify, o);
        }
        if (cat->parsed()) return cmd_catalog(o);
        o.quiet = decide.quiet;
        const std::string n = std::to_string(decide.n);
        if (pd133->parsed())
            return report_verdict("PD(" + n + "; 1,1,1; 1,1,1; " + std::to_string(decide.n - 3) + ")",
                                  decide_pd133(decide.n), decide, o);
        if (rf->parsed()) {
            const auto type = parse_int_list(decide.family, "type");
            for (std::int64_t s : type)
                if (s <= 0) throw ParseError("rational family entries must be positive");
            return report_verdict("rational family of type (" + decide.family + ") and order " +
                                      std::to_string(decide.order),
                                  rational_family_exists(type, decide.order), decide, o);
        }
        if (rho->parsed()) {
            o << radon_hurwitz(decide.n) << "\n";
            if (decide.explain) o << "  rho(n) = 8c + 2^d where n = 2^(4c+d) * odd\n";
        } else if (wolfe->parsed()) {
            o << wolfe_bound(decide.n) << "\n";
            if (decide.explain) o << "  2a + 2 where n = 2^a * odd\n";
        } else if (rho_t->parsed()) {
            o << rho_t_bound(decide.n, decide.t) << "\n";
            if (decide.explain) o << "  8a - t + delta(t mod 4, b) + 1 where n = 2^(4a+b) * odd\n";
        }
        return kPass;
    } catch (const ParseError& e) {
        err << "odtool: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "odtool: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace odtool
