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

#include "odtool/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace odtool {

VarId VarRegistry::intern(std::string_view name) {
    if (auto id = find(name)) return *id;
    return add(std::string(name));
}

VarId VarRegistry::fresh(std::string_view hint) {
    std::string base(hint.empty() ? "v" : hint);
    if (!ids_.contains(base)) return add(base);
    for (std::size_t k = 2;; ++k) {
        std::string candidate = base + "_" + std::to_string(k);
        if (!ids_.contains(candidate)) return add(std::move(candidate));
    }
}

std::optional<VarId> VarRegistry::find(std::string_view name) const {
    auto it = ids_.find(std::string(name));
    if (it == ids_.end()) return std::nullopt;
    return VarId{it->second};
}

const std::string& VarRegistry::name(VarId v) const {
    if (v.value >= names_.size()) throw std::out_of_range("unknown variable id " + std::to_string(v.value));
    return names_[v.value];
}

VarId VarRegistry::add(std::string name) {
    if (names_.size() >= capacity_) throw RegistryExhausted("variable registry exhausted");
    const auto id = static_cast<std::uint32_t>(names_.size());
    ids_.emplace(name, id);
    names_.push_back(std::move(name));
    return VarId{id};
}

Monomial::Monomial(VarId v, std::uint32_t exp) {
    if (exp > 0) {
        powers_.push_back({v, exp});
        degree_ = exp;
    }
}

std::uint32_t Monomial::exponent(VarId v) const noexcept {
    for (const auto& p : powers_)
        if (p.var == v) return p.exp;
    return 0;
}

Monomial operator*(const Monomial& lhs, const Monomial& rhs) {
    Monomial out;
    out.degree_ = lhs.degree_ + rhs.degree_;
    auto i = lhs.powers_.begin();
    auto j = rhs.powers_.begin();
    while (i != lhs.powers_.end() && j != rhs.powers_.end()) {
        if (i->var == j->var) {
            out.powers_.push_back({i->var, i->exp + j->exp});
            ++i;
            ++j;
        } else if (i->var < j->var) {
            out.powers_.push_back(*i++);
        } else {
            out.powers_.push_back(*j++);
        }
    }
    out.powers_.insert(out.powers_.end(), i, lhs.powers_.end());
    out.powers_.insert(out.powers_.end(), j, rhs.powers_.end());
    return out;
}

int grlex_compare(const Monomial& lhs, const Monomial& rhs) noexcept {
    if (lhs.degree() != rhs.degree()) return lhs.degree() < rhs.degree() ? -1 : 1;
    const auto a = lhs.powers();
    const auto b = rhs.powers();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].var == b[j].var) {
            if (a[i].exp != b[j].exp) return a[i].exp < b[j].exp ? -1 : 1;
            ++i;
            ++j;
        } else {
            // the side holding the more significant variable is larger
            return a[i].var < b[j].var ? 1 : -1;
        }
    }
    if (i < a.size()) return 1;
    if (j < b.size()) return -1;
    return 0;
}

namespace {

// descending grlex
bool term_before(const Term& t, const Monomial& m) { return grlex_compare(t.mono, m) > 0; }

}  // namespace

Polynomial::Polynomial(Rational c) {
    if (!c.is_zero()) terms_.push_back({Monomial{}, c});
}

Polynomial Polynomial::variable(VarId v, Rational coeff) { return monomial(Monomial(v), coeff); }

Polynomial Polynomial::monomial(Monomial m, Rational coeff) {
    Polynomial p;
    if (!coeff.is_zero()) p.terms_.push_back({std::move(m), coeff});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return grlex_compare(a.mono, b.mono) > 0; });
    Polynomial p;
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
            if (p.terms_.back().coeff.is_zero()) p.terms_.pop_back();
        } else if (!t.coeff.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

bool Polynomial::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

std::uint32_t Polynomial::degree() const noexcept { return terms_.empty() ? 0 : terms_.front().mono.degree(); }

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, term_before);
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return Rational{};
}

void Polynomial::collect_variables(std::set<VarId>& out) const {
    for (const auto& t : terms_)
        for (const auto& p : t.mono.powers()) out.insert(p.var);
}

std::optional<std::pair<VarId, Rational>> Polynomial::as_scaled_variable() const {
    if (terms_.size() != 1 || terms_[0].mono.degree() != 1) return std::nullopt;
    return std::make_pair(terms_[0].mono.powers()[0].var, terms_[0].coeff);
}

void Polynomial::add_term(Monomial m, const Rational& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, term_before);
    if (it != terms_.end() && it->mono == m) {
        it->coeff += c;
        if (it->coeff.is_zero()) terms_.erase(it);
    } else {
        terms_.insert(it, Term{std::move(m), c});
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (rhs.terms_.empty()) return *this;
    if (terms_.empty()) return *this = rhs;
    // merge of two descending lists
    std::vector<Term> out;
    out.reserve(terms_.size() + rhs.terms_.size());
    auto i = terms_.begin();
    auto j = rhs.terms_.begin();
    while (i != terms_.end() && j != rhs.terms_.end()) {
        const int c = grlex_compare(i->mono, j->mono);
        if (c > 0) {
            out.push_back(std::move(*i++));
        } else if (c < 0) {
            out.push_back(*j++);
        } else {
            Rational s = i->coeff + j->coeff;
            if (!s.is_zero()) out.push_back({std::move(i->mono), s});
            ++i;
            ++j;
        }
    }
    std::move(i, terms_.end(), std::back_inserter(out));
    std::copy(j, rhs.terms_.end(), std::back_inserter(out));
    terms_ = std::move(out);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) { return *this += -rhs; }

Polynomial& Polynomial::operator*=(const Polynomial& rhs) { return *this = *this * rhs; }

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coeff *= c;
    return *this;
}

void Polynomial::add_product(const Polynomial& a, const Polynomial& b) {
    for (const auto& ta : a.terms_)
        for (const auto& tb : b.terms_) add_term(ta.mono * tb.mono, ta.coeff * tb.coeff);
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
    Polynomial p;
    if (lhs.is_zero() || rhs.is_zero()) return p;
    if (lhs.terms_.size() == 1 || rhs.terms_.size() == 1) {
        // a single-term factor preserves the order of the other factor
        const bool left_single = lhs.terms_.size() == 1;
        const Term& s = left_single ? lhs.terms_[0] : rhs.terms_[0];
        const Polynomial& other = left_single ? rhs : lhs;
        p.terms_.reserve(other.terms_.size());
        for (const auto& t : other.terms_) p.terms_.push_back({s.mono * t.mono, s.coeff * t.coeff});
        return p;
    }
    std::vector<Term> terms;
    terms.reserve(lhs.terms_.size() * rhs.terms_.size());
    for (const auto& a : lhs.terms_)
        for (const auto& b : rhs.terms_) terms.push_back({a.mono * b.mono, a.coeff * b.coeff});
    return Polynomial::from_terms(std::move(terms));
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& assignment) const {
    Polynomial result;
    for (const auto& t : terms_) {
        Polynomial acc(t.coeff);
        Monomial kept;
        for (const auto& p : t.mono.powers()) {
            auto it = assignment.find(p.var);
            if (it == assignment.end()) {
                kept = kept * Monomial(p.var, p.exp);
                continue;
            }
            for (std::uint32_t e = 0; e < p.exp; ++e) acc = acc * it->second;
        }
        result += acc * Polynomial::monomial(std::move(kept));
    }
    return result;
}

std::string Polynomial::to_string(const VarRegistry& reg) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        const bool negative = c < Rational(0);
        if (negative) c = -c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        const bool unit = c == Rational(1);
        if (!unit || t.mono.is_one()) {
            os << c;
            if (!t.mono.is_one()) os << '*';
        }
        bool first_var = true;
        for (const auto& p : t.mono.powers()) {
            if (!first_var) os << '*';
            first_var = false;
            os << reg.name(p.var);
            if (p.exp > 1) os << '^' << p.exp;
        }
    }
    return os.str();
}

}  // namespace odtool
