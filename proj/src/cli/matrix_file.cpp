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
#include <fstream>
#include <set>
#include <sstream>

#include "odtool/cli.hpp"

namespace odtool {

namespace {

bool valid_name(std::string_view s) {
    if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
    for (char c : s)
        if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'')) return false;
    return true;
}

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t k = 0;
    while (k < line.size()) {
        while (k < line.size() && std::isspace(static_cast<unsigned char>(line[k]))) ++k;
        const std::size_t start = k;
        while (k < line.size() && !std::isspace(static_cast<unsigned char>(line[k]))) ++k;
        if (k > start) out.push_back(line.substr(start, k - start));
    }
    return out;
}

[[noreturn]] void fail(std::size_t line, const std::string& what) {
    throw ParseError("line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_count(std::string_view s, std::size_t line, const char* what) {
    std::int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail(line, std::string("bad ") + what + " '" + std::string(s) + "'");
    return v;
}

Polynomial parse_entry(std::string_view tok, const std::map<std::string, VarId, std::less<>>& declared,
                       std::size_t line) {
    if (tok == "0") return Polynomial{};
    Polynomial p;
    std::size_t k = 0;
    while (true) {
        const std::size_t plus = tok.find('+', k);
        std::string_view term = tok.substr(k, plus == std::string_view::npos ? std::string_view::npos : plus - k);
        std::int64_t coeff = 1;
        if (const std::size_t star = term.find('*'); star != std::string_view::npos) {
            coeff = parse_count(term.substr(0, star), line, "coefficient");
            if (coeff == 0) fail(line, "zero coefficient in '" + std::string(tok) + "'");
            term = term.substr(star + 1);
        } else if (!term.empty() && term[0] == '-') {
            coeff = -1;
            term = term.substr(1);
        }
        auto it = declared.find(term);
        if (it == declared.end()) fail(line, "undeclared variable '" + std::string(term) + "' in '" + std::string(tok) + "'");
        p += Polynomial::variable(it->second, coeff);
        if (plus == std::string_view::npos) break;
        k = plus + 1;
    }
    return p;
}

}  // namespace

std::string serialize_matrix(const PolyMatrix& m, std::span<const VarId> vars, const VarRegistry& reg) {
    const std::set<VarId> allowed(vars.begin(), vars.end());
    std::ostringstream os;
    os << "od " << m.order() << " vars";
    for (VarId v : vars) os << ' ' << reg.name(v);
    os << '\n';
    for (std::size_t i = 0; i < m.order(); ++i) {
        for (std::size_t j = 0; j < m.order(); ++j) {
            if (j) os << ' ';
            const Polynomial& e = m(i, j);
            if (e.is_zero()) {
                os << '0';
                continue;
            }
            bool first = true;
            for (const Term& t : e.terms()) {
                const auto powers = t.mono.powers();
                if (powers.size() != 1 || powers[0].exp != 1 || !t.coeff.is_integer() ||
                    !allowed.contains(powers[0].var))
                    throw std::invalid_argument("entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                                ") is not an integer linear form in the declared variables: " +
                                                e.to_string(reg));
                if (!first) os << '+';
                first = false;
                const std::int64_t c = t.coeff.num();
                if (c == -1) os << '-';
                else if (c != 1) os << c << '*';
                os << reg.name(powers[0].var);
            }
        }
        os << '\n';
    }
    return os.str();
}

MatrixFile parse_matrix(std::string_view text, VarRegistry& reg) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t number = 0, k = 0;
    while (k <= text.size()) {
        const std::size_t end = std::min(text.find('\n', k), text.size());
        ++number;
        std::string_view line = text.substr(k, end - k);
        if (!split_ws(line).empty()) lines.emplace_back(number, line);
        k = end + 1;
    }
    if (lines.empty()) throw ParseError("empty file");

    const auto header = split_ws(lines[0].second);
    if (header.size() < 3 || header[0] != "od" || header[2] != "vars")
        fail(lines[0].first, "expected header 'od <n> vars <names...>'");
    const std::int64_t n = parse_count(header[1], lines[0].first, "order");
    if (n < 1) fail(lines[0].first, "order must be positive");

    MatrixFile out{PolyMatrix(static_cast<std::size_t>(n)), {}};
    std::map<std::string, VarId, std::less<>> declared;
    for (std::size_t h = 3; h < header.size(); ++h) {
        if (!valid_name(header[h])) fail(lines[0].first, "invalid variable name '" + std::string(header[h]) + "'");
        const VarId v = reg.intern(header[h]);
        if (!declared.emplace(std::string(header[h]), v).second)
            fail(lines[0].first, "variable '" + std::string(header[h]) + "' declared twice");
        out.vars.push_back(v);
    }
    if (lines.size() - 1 != static_cast<std::size_t>(n))
        fail(lines.back().first, "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
        const auto [line, content] = lines[i + 1];
        const auto tokens = split_ws(content);
        if (tokens.size() != static_cast<std::size_t>(n))
            fail(line, "expected " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()));
        for (std::size_t j = 0; j < tokens.size(); ++j) out.matrix(i, j) = parse_entry(tokens[j], declared, line);
    }
    return out;
}

MatrixFile read_matrix_file(const std::string& path, VarRegistry& reg) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_matrix(buf.str(), reg);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace odtool
