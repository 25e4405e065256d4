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

// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include <unistd.h>

#include "odtool/cli.hpp"
#include "odtool/constructions.hpp"
#include "odtool/numtheory.hpp"

using namespace odtool;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && pass) {
            pass = false;
            detail = what;
        }
    }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

int cli(std::vector<std::string> args) {
    args.insert(args.begin(), "odtool");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

std::string repeat(const std::string& w, int k) {
    std::string s;
    for (int i = 0; i < k; ++i) s += (i ? "," : "") + w;
    return s;
}

void check_catalog_entry(Outcome& o, const std::string& name, double limit) {
    const CatalogEntry* e = find_catalog_entry(name);
    o.require(e != nullptr, name + " missing from catalog");
    if (!e) return;
    VarRegistry reg;
    const auto t = Clock::now();
    const VerificationReport r = verify_built(*e, e->build(reg));
    const double s = since(t);
    o.require(r.pass, r.describe(reg));
    o.require(e->full, name + " is not marked full");
    o.require(s < limit, name + " took " + std::to_string(s) + " s");
}

Outcome order48_via_cli() {
    Outcome o;
    const auto dir = std::filesystem::temp_directory_path() / ("odtool_acceptance_" + std::to_string(::getpid()));
    std::filesystem::remove_all(dir);
    const auto t = Clock::now();
    o.require(cli({"build", "aod48_example_3_2", "-o", dir.string(), "-q"}) == kPass, "build failed");
    const std::string c = (dir / "aod48_example_3_2.C.od").string(), d = (dir / "aod48_example_3_2.D.od").string();
    o.require(cli({"verify", "aod", "--types", "4,10,34/4,44", c, d, "-q"}) == kPass, "verify aod failed");
    o.require(cli({"verify", "full", c, d, "-q"}) == kPass, "not full");
    o.require(cli({"verify", "aod", "--types", "4,10,33/4,45", c, d, "-q"}) == kFail, "wrong type accepted");
    const double s = since(t);
    o.require(s < 10.0, "took " + std::to_string(s) + " s");
    std::filesystem::remove_all(dir);
    o.detail = o.pass ? "AOD(48; 4,10,34; 4,44), both full" : o.detail;
    return o;
}

Outcome orders_72_168() {
    Outcome o;
    check_catalog_entry(o, "aod72_full", 30.0);
    check_catalog_entry(o, "aod168_full", 30.0);
    if (o.pass) o.detail = "AOD(72; 18,54; 72) and AOD(168; 4,164; 4,164), both full";
    return o;
}

Outcome product_designs() {
    Outcome o;
    VarRegistry reg;
    for (auto [name, pd, n] : {std::tuple{"pd8", pd8(reg), "5"}, std::tuple{"pd12", pd12(reg), "9"}}) {
        const VerificationReport r = verify_pd(pd);
        o.require(r.pass, r.describe(reg));
        o.require(pd.m1_type.weights_string() == "1,1,1" && pd.m2_type.weights_string() == "1,1,1" &&
                      pd.n_type.weights_string() == n,
                  std::string(name) + " has the wrong types");
        int conditions[3] = {0, 0, 0};
        for (const CheckResult& c : r.checks) {
            o.require(c.passed, std::string(name) + ": " + c.name);
            if (c.name.starts_with("(iii)")) ++conditions[2];
            else if (c.name.starts_with("(ii)")) ++conditions[1];
            else if (c.name.starts_with("(i)")) ++conditions[0];
        }
        o.require(conditions[0] == 2 && conditions[1] == 2 && conditions[2] == 1,
                  std::string(name) + ": not every condition was checked separately");
    }
    if (o.pass) o.detail = "(1,1,1; 1,1,1; 5) and (1,1,1; 1,1,1; 9), 8 checks each";
    return o;
}

Outcome one_variable_per_block() {
    Outcome o;
    VarRegistry reg;
    const Aod a16 = aod16_vars(reg);
    const Aod a24 = aod24_vars(reg);
    for (const Aod* a : {&a16, &a24}) o.require(verify_aod(*a).pass, verify_aod(*a).describe(reg));
    o.require(a16.c_type.weights_string() == "2,2,2,10" && a16.d_type.weights_string() == "2,2,2,10", "order 16 type");
    o.require(a24.c_type.weights_string() == "2,2,2,18" && a24.d_type.weights_string() == "2,2,2,18", "order 24 type");
    const auto bound = rho_t_bound(24, 4);
    o.require(bound == 4, "rho_t_bound(24, 4) = " + std::to_string(bound));
    o.require(static_cast<std::int64_t>(a24.c_type.size()) == bound &&
                  static_cast<std::int64_t>(a24.d_type.size()) == bound,
              "order 24 does not reach the bound");
    if (o.pass) o.detail = "order 24 has 4 variables per side = rho_t_bound(24, 4)";
    return o;
}

Outcome doubling_chain() {
    Outcome o;
    VarRegistry reg;
    const Aod a24 = aod24_vars(reg);
    const Aod d1 = double_aod(a24, 1, reg);
    const Aod d2 = double_aod(a24, 2, reg);
    o.require(verify_aod(d1).pass && verify_aod(d2).pass, "doubled design fails verification");
    o.require(d1.c.order() == 48 && d2.c.order() == 96, "wrong orders");
    o.require(d1.c_type.weights_string() == "4,4,4,18,18" && d1.d_type.weights_string() == "4,4,4,36",
              "order 48 type (" + d1.c_type.weights_string() + "; " + d1.d_type.weights_string() + ")");
    o.require(d2.c_type.weights_string() == "8,8,8,18,18,36" && d2.d_type.weights_string() == "8,8,8,72",
              "order 96 type (" + d2.c_type.weights_string() + "; " + d2.d_type.weights_string() + ")");
    if (o.pass) o.detail = "AOD(48; 4,4,4,18,18; 4,4,4,36) and AOD(96; 8,8,8,18,18,36; 8,8,8,72)";
    return o;
}

Outcome combiner() {
    Outcome o;
    VarRegistry reg;
    const ProductDesign pd = pd12(reg);
    const Aod a2 = aod_2(reg);
    const Od od = combine_pd_aod(pd, split_aod(a2, a2.d_type.vars()[0]), CombineVariant::ii, reg);
    o.require(od.matrix.order() == 24, "order");
    o.require(od.type.weights_string() == "1,1,1,1,1,1,9,9", "type " + od.type.weights_string());
    o.require(verify_od(od.matrix, od.type).pass, "verify_od failed");
    if (o.pass) o.detail = "OD(24; 1,1,1,1,1,1,9,9)";
    return o;
}

Outcome heavy_designs() {
    Outcome o;
    const auto t = Clock::now();
    VarRegistry reg;
    const Aod a = aod512(reg);
    const VerificationReport r = verify_aod(a);
    o.require(r.pass, r.describe(reg));
    o.require(a.c_type.weights_string() == repeat("64", 8) && a.d_type.weights_string() == repeat("64", 8),
              "order 512 type");
    o.require(is_full(a.c).pass && is_full(a.d).pass, "order 512 not full");
    o.require(gram_direct(a.c) == gram(decompose_by_variable(a.c)), "direct and decomposed Gram matrices differ");

    VarRegistry reg2;
    const Od od = od1024(reg2);
    const VerificationReport r2 = verify_od(od.matrix, od.type);
    o.require(r2.pass, r2.describe(reg2));
    o.require(od.type.weights_string() == repeat("64", 16), "order 1024 type");
    o.require(od.matrix.order() == 1024 && is_full(od.matrix).pass, "order 1024 not full");
    const double s = since(t);
    o.require(s < 300.0, "took " + std::to_string(s) + " s");
    if (o.pass) o.detail = "AOD(512; 64 x8; 64 x8), full OD(1024; 64 x16), Gram routes agree";
    return o;
}

Outcome pd133_sweep() {
    Outcome o;
    const auto t = Clock::now();
    for (std::int64_t n = 1; n <= 200; ++n) {
        const ExistenceVerdict v = decide_pd133(n);
        const bool exists = n == 4 || n == 8 || n == 12;
        o.require(v.status == (exists ? ExistenceVerdict::Status::exists : ExistenceVerdict::Status::not_exists),
                  "n = " + std::to_string(n) + ": " + v.status_string());
        o.require(!v.chain.empty(), "empty chain at n = " + std::to_string(n));
        if (n > 20 && !v.chain.empty())
            o.require(v.chain.back().rule == "robinson-nonexistence", "n = " + std::to_string(n) + " rule");
    }
    const double s = since(t);
    const ExistenceVerdict v16 = decide_pd133(16), v20 = decide_pd133(20);
    o.require(v16.chain.back().rule == "kharaghani-tayfeh-rezaie", "n = 16 rule");
    o.require(v20.chain.back().text.ends_with("S_17(1,1,1,3,3,3,17,17,34) = -1"), "n = 20 chain ending");
    o.require(s_p(std::vector<std::int64_t>{1, 1, 1, 3, 3, 3, 17, 17, 34}, 17) == -1, "S_17 value");
    o.require(s < 1.0, "sweep took " + std::to_string(s) + " s");
    if (o.pass) o.detail = "exists exactly on {4, 8, 12} for n <= 200; S_17(1,1,1,3,3,3,17,17,34) = -1";
    return o;
}

Outcome hilbert_properties() {
    Outcome o;
    std::vector<std::int64_t> primes;
    for (std::int64_t p = 2; p <= 100; ++p)
        if (is_prime(static_cast<std::uint64_t>(p))) primes.push_back(p);
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::int64_t> mag(1, 10000), sign(0, 1), small(1, 100);
    std::uniform_int_distribution<std::size_t> pick(0, primes.size() - 1);
    auto nonzero = [&] { return sign(rng) ? mag(rng) : -mag(rng); };
    const int trials = 10000;
    for (int k = 0; k < trials && o.pass; ++k) {
        const std::int64_t a = nonzero(), b = nonzero(), a2 = nonzero(), c = small(rng), p = primes[pick(rng)];
        const std::string at = "(" + std::to_string(a) + ", " + std::to_string(b) + ")_" + std::to_string(p);
        o.require(hilbert(a, b, p) == hilbert(b, a, p), "symmetry " + at);
        o.require(hilbert(a * a2, b, p) == hilbert(a, b, p) * hilbert(a2, b, p), "bimultiplicativity " + at);
        o.require(hilbert(a, -a, p) == 1, "(a,-a) " + at);
        if (a != 1) o.require(hilbert(a, 1 - a, p) == 1, "(a,1-a) " + at);
        o.require(hilbert(a * c * c, b, p) == hilbert(a, b, p), "square insensitivity " + at);
        const std::int64_t pa = std::abs(a), pb = std::abs(b);
        int prod = 1;
        for (std::int64_t q : relevant_primes(std::vector<std::int64_t>{pa, pb})) prod *= hilbert(pa, pb, q);
        o.require(prod == 1, "product formula " + at);
    }
    if (o.pass) o.detail = std::to_string(trials) + " random triples, |a|,|b| <= 10^4, p <= 100";
    return o;
}

Outcome wolfe_families() {
    Outcome o;
    const auto t = Clock::now();
    std::size_t checks = 0;
    for (unsigned s = 1; s <= 7; ++s)
        for (unsigned d : {1U, 3U, 5U}) {
            const WolfeSets w = wolfe_sets(s, d);
            const VerificationReport r = check_wolfe_sets(w);
            o.require(r.pass, "s = " + std::to_string(s) + ", d = " + std::to_string(d) + ": " + r.claim);
            o.require(w.a.size() == s + 1 && w.b.size() == s + 1 && w.order == (std::size_t{1} << s) * d,
                      "set sizes");
            checks += r.checks.size();
        }
    const double sec = since(t);
    o.require(sec < 60.0, "took " + std::to_string(sec) + " s");
    if (o.pass) o.detail = std::to_string(checks) + " pair checks for s <= 7, d in {1, 3, 5}";
    return o;
}

std::int64_t radon_hurwitz_oracle(std::int64_t n) {
    int a = 0;
    while (n % 2 == 0) n /= 2, ++a;
    int c = 0;
    while (a >= 4) a -= 4, ++c;
    std::int64_t pow = 1;
    for (int k = 0; k < a; ++k) pow *= 2;
    return 8 * c + pow;
}

Outcome bound_functions() {
    Outcome o;
    for (std::int64_t n = 1; n <= 4096; ++n)
        o.require(radon_hurwitz(n) == radon_hurwitz_oracle(n), "radon_hurwitz(" + std::to_string(n) + ")");
    o.require(wolfe_bound(64) == 14, "wolfe_bound(64) = " + std::to_string(wolfe_bound(64)));
    const std::array<std::array<int, 4>, 4> expected{{{0, 1, 3, 7}, {1, 2, 3, 5}, {-1, 3, 4, 5}, {-1, 1, 5, 6}}};
    o.require(delta_table() == expected, "delta table differs");
    if (o.pass) o.detail = "radon_hurwitz oracle n <= 4096, wolfe_bound(64) = 14, delta table exact";
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"order-48 amicable design through build and verify", order48_via_cli},
        {"full amicable designs of orders 72 and 168", orders_72_168},
        {"product designs of orders 8 and 12", product_designs},
        {"one-variable-per-block designs of orders 16 and 24", one_variable_per_block},
        {"doubling chain to orders 48 and 96", doubling_chain},
        {"product design combined with aod_2", combiner},
        {"orders 512 and 1024", heavy_designs},
        {"product design existence sweep", pd133_sweep},
        {"Hilbert symbol properties", hilbert_properties},
        {"signed permutation families", wolfe_families},
        {"bound functions", bound_functions},
    };
    int failures = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t = Clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = Outcome{false, std::string("exception: ") + e.what()};
        }
        failures += o.pass ? 0 : 1;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << std::setw(2) << (k + 1) << "  " << criteria[k].first << " ("
                  << std::fixed << std::setprecision(2) << since(t) << " s): " << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
