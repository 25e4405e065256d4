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

#include <bit>
#include <map>
#include <sstream>
#include <stdexcept>

#include "odtool/constructions.hpp"
#include "odtool/numtheory.hpp"

namespace odtool {

namespace {

int two_adic(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("order must be positive, got " + std::to_string(n));
    return std::countr_zero(static_cast<std::uint64_t>(n));
}

std::string join(std::span<const std::int64_t> v, const char* sep = ",") {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
    return s;
}

std::string signed_one(int s) { return s > 0 ? "+1" : "-1"; }

/// Full OD(32; 1_(5), u) exists exactly for these remainders u.
const std::vector<std::vector<std::int64_t>>& od32_classification() {
    static const std::vector<std::vector<std::int64_t>> table{{9, 9, 9}, {9, 18}, {12, 15}, {27}};
    return table;
}

/// Text of one S_p evaluation listing the pair symbols equal to -1.
std::string describe_s_p(std::span<const std::int64_t> type, std::int64_t p, int value) {
    std::map<std::pair<std::int64_t, std::int64_t>, int> negatives;
    for (std::size_t i = 0; i < type.size(); ++i)
        for (std::size_t j = i + 1; j < type.size(); ++j)
            if (hilbert(type[i], type[j], p) < 0) ++negatives[{type[i], type[j]}];
    std::ostringstream os;
    os << "S_" << p << "(" << join(type) << ") = " << signed_one(value);
    if (negatives.empty()) {
        os << "; every pair symbol is +1";
    } else {
        os << "; pair symbols equal to -1:";
        for (const auto& [pair, count] : negatives)
            os << " (" << pair.first << "," << pair.second << ")_" << p << " x" << count;
    }
    return os.str();
}

std::vector<std::int64_t> pd133_aod_combination(std::int64_t n, std::span<const std::int64_t> aod_c, std::int64_t v,
                                                std::span<const std::int64_t> aod_d2, CombineVariant variant) {
    const std::vector<std::int64_t> ones{1, 1, 1};
    const std::vector<std::int64_t> tail{n - 3};
    return combined_weights(ones, ones, tail, aod_c, v, aod_d2, variant);
}

}  // namespace

std::int64_t radon_hurwitz(std::int64_t n) {
    const int a = two_adic(n);
    return 8 * (a / 4) + (std::int64_t{1} << (a % 4));
}

std::int64_t wolfe_bound(std::int64_t n) { return 2 * two_adic(n) + 2; }

const std::array<std::array<int, 4>, 4>& delta_table() {
    static constexpr std::array<std::array<int, 4>, 4> table{{
        {0, 1, 3, 7},
        {1, 2, 3, 5},
        {-1, 3, 4, 5},
        {-1, 1, 5, 6},
    }};
    return table;
}

std::int64_t rho_t_bound(std::int64_t n, std::int64_t t) {
    if (t < 1) throw std::invalid_argument("rho_t_bound: t must be positive, got " + std::to_string(t));
    const int e = two_adic(n);
    return 8 * (e / 4) - t + delta_table()[static_cast<std::size_t>(t % 4)][static_cast<std::size_t>(e % 4)] + 1;
}

std::string ExistenceVerdict::status_string() const {
    switch (status) {
        case Status::exists: return "exists";
        case Status::not_exists: return "does not exist";
        case Status::undecided: return "undecided";
    }
    return "?";
}

std::string ExistenceVerdict::render() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < chain.size(); ++k)
        os << "  " << (k + 1) << ". [" << chain[k].rule << "] " << chain[k].text << "\n";
    return os.str();
}

ExistenceVerdict rational_family_exists(std::span<const std::int64_t> type, std::int64_t order) {
    for (std::int64_t s : type)
        if (s <= 0) throw std::invalid_argument("rational family entries must be positive");
    ExistenceVerdict v;
    const std::int64_t two_part = std::int64_t{1} << two_adic(order);
    v.chain.push_back({"shapiro-order-reduction",
                       "a rational family of type (" + join(type) + ") and order " + std::to_string(order) +
                           " exists iff one of order " + std::to_string(two_part) +
                           " exists (Shapiro's order reduction)"});
    if (two_part != 16 || type.size() != 9) {
        v.chain.push_back({"scope", "Shapiro's nine-variable criterion covers order 16 with 9 entries only; here order " +
                                        std::to_string(two_part) + " with " + std::to_string(type.size()) +
                                        " entries"});
        v.status = ExistenceVerdict::Status::undecided;
        return v;
    }
    const std::vector<std::int64_t> primes = relevant_primes(type);
    v.chain.push_back({"relevant-primes", "(r,s)_p = 1 when r and s are prime to an odd p, so S_p = +1 for every "
                                          "prime outside {" +
                                              join(primes, ", ") + "}"});
    std::optional<std::int64_t> witness;
    for (std::int64_t p : primes) {
        const int value = s_p(type, p);
        v.chain.push_back({"hilbert-symbols", describe_s_p(type, p, value)});
        if (value < 0) witness = p;
    }
    if (witness) {
        v.status = ExistenceVerdict::Status::not_exists;
        v.chain.push_back({"shapiro-nine-variable", "Shapiro's nine-variable criterion fails: S_" +
                                                        std::to_string(*witness) + "(" + join(type) + ") = -1"});
    } else {
        v.status = ExistenceVerdict::Status::exists;
        v.chain.push_back({"shapiro-nine-variable", "S_p = +1 at every prime, so Shapiro's nine-variable criterion "
                                                    "holds"});
    }
    return v;
}

ExistenceVerdict decide_pd133(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("decide_pd133: n must be positive, got " + std::to_string(n));
    ExistenceVerdict v;
    const std::string claim = "PD(" + std::to_string(n) + "; 1,1,1; 1,1,1; " + std::to_string(n - 3) + ")";
    using Status = ExistenceVerdict::Status;

    if (n == 4 || n == 8 || n == 12) {
        v.chain.push_back({"robinson-construction", claim + " exists by Robinson's construction"});
        v.status = Status::exists;
        if (n != 4) {
            VarRegistry reg;
            const ProductDesign pd = n == 8 ? pd8(reg) : pd12(reg);
            const VerificationReport r = verify_pd(pd);
            std::size_t passed = 0;
            for (const CheckResult& c : r.checks) passed += c.passed ? 1 : 0;
            v.chain.push_back({"live-verification", "verify_pd(pd" + std::to_string(n) + "): " +
                                                         (r.pass ? "pass" : "FAIL") + ", " + std::to_string(passed) +
                                                         "/" + std::to_string(r.checks.size()) + " checks"});
            if (!r.pass) v.status = Status::undecided;
        }
        return v;
    }

    const std::vector<std::int64_t> aod2_c{1, 1};
    const std::vector<std::int64_t> aod2_d2{1};
    if (n > 20) {
        const std::vector<std::int64_t> od = pd133_aod_combination(n, aod2_c, 1, aod2_d2, CombineVariant::i);
        v.chain.push_back({"pd-aod-combination", "combining " + claim +
                                                     " with AOD(2; 1,1; 1,1) (v = 1, w = (1), c = (1,1), variant i) "
                                                     "gives an OD(" +
                                                     std::to_string(2 * n) + "; " + join(od) + ")"});
        v.chain.push_back({"equate-variables", "setting one weight-1 variable equal to the weight-" +
                                                   std::to_string(od.back()) + " variable gives an OD(" +
                                                   std::to_string(2 * n) + "; 1_(5), " + std::to_string(2 * n - 5) +
                                                   ")"});
        v.chain.push_back({"robinson-nonexistence", "no OD(m; 1_(5), m-5) exists for m > 40 (Robinson); here m = " +
                                                        std::to_string(2 * n)});
        v.status = Status::not_exists;
        return v;
    }
    if (n < 4) {
        v.chain.push_back({"definition", "the weight n-3 = " + std::to_string(n - 3) +
                                             " is not positive, so " + claim +
                                             " is impossible (reconstruction of the definitional argument)"});
        v.status = Status::not_exists;
        return v;
    }
    if (const std::int64_t rho = radon_hurwitz(n); rho < 3) {
        v.chain.push_back({"definition", "M1 would be an OD(" + std::to_string(n) +
                                             "; 1,1,1), but an OD of order " + std::to_string(n) + " has at most rho(" +
                                             std::to_string(n) + ") = " + std::to_string(rho) +
                                             " variables (reconstruction of the definitional argument)"});
        v.status = Status::not_exists;
        return v;
    }

    if (n == 16) {
        const std::vector<std::int64_t> od = pd133_aod_combination(n, aod2_c, 1, aod2_d2, CombineVariant::i);
        v.chain.push_back({"pd-aod-combination", "combining " + claim +
                                                     " with AOD(2; 1,1; 1,1) (v = 1, w = (1), c = (1,1), variant i) "
                                                     "gives a full OD(32; " +
                                                     join(od) + ")"});
        std::vector<std::int64_t> rest(od.begin() + 5, od.end());
        const auto& table = od32_classification();
        const bool listed = std::find(table.begin(), table.end(), rest) != table.end();
        v.chain.push_back({"kharaghani-tayfeh-rezaie",
                           "a full OD(32; 1_(5), u) exists only for u = (9,9,9), (9,18), (12,15) or (27) "
                           "(Kharaghani and Tayfeh-Rezaie); u = (" +
                               join(rest) + ") is " + (listed ? "listed" : "not listed")});
        v.status = listed ? Status::undecided : Status::not_exists;
        return v;
    }
    if (n == 20) {
        const std::vector<std::int64_t> c{1, 1, 2};
        const std::vector<std::int64_t> d2{1, 2};
        const std::vector<std::int64_t> od = pd133_aod_combination(n, c, 1, d2, CombineVariant::ii);
        v.chain.push_back({"pd-aod-combination", "combining " + claim +
                                                     " with AOD(4; 1,1,2; 1,1,2) (v = 1, w = (1,2), c = (1,1,2), "
                                                     "variant ii) gives an OD(80; " +
                                                     join(od) + ")"});
        v.chain.push_back({"rational-family", "the coefficient matrices of an OD(80; " + join(od) +
                                                  ") form a rational family of that type and order 80"});
        ExistenceVerdict rf = rational_family_exists(od, 80);
        v.chain.insert(v.chain.end(), rf.chain.begin(), rf.chain.end());
        v.status = rf.status == Status::not_exists ? Status::not_exists : Status::undecided;
        return v;
    }
    v.chain.push_back({"scope", "no rule applies to " + claim});
    v.status = Status::undecided;
    return v;
}

}  // namespace odtool
