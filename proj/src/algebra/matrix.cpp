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

#include "odtool/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <sstream>

namespace odtool {

DimensionMismatch::DimensionMismatch(const char* op, std::size_t lhs, std::size_t rhs)
    : std::invalid_argument(std::string(op) + ": order " + std::to_string(lhs) + " vs " + std::to_string(rhs)) {}

NonlinearEntry::NonlinearEntry(std::size_t r, std::size_t c)
    : std::invalid_argument("entry (" + std::to_string(r) + ", " + std::to_string(c) +
                            ") is not an integer linear form"),
      row(r),
      col(c) {}

namespace {

void require_same_order(const char* op, const PolyMatrix& a, const PolyMatrix& b) {
    if (a.order() != b.order()) throw DimensionMismatch(op, a.order(), b.order());
}

}  // namespace

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows) : PolyMatrix(rows.size()) {
    std::size_t i = 0;
    for (const auto& row : rows) {
        if (row.size() != order_) throw std::invalid_argument("PolyMatrix rows must form a square");
        std::size_t j = 0;
        for (const auto& e : row) (*this)(i, j++) = e;
        ++i;
    }
}

PolyMatrix PolyMatrix::identity(std::size_t order) {
    PolyMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m(i, i) = Polynomial(1);
    return m;
}

PolyMatrix PolyMatrix::from_ints(const std::vector<std::vector<int>>& rows) {
    PolyMatrix m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != rows.size()) throw std::invalid_argument("PolyMatrix rows must form a square");
        for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = Polynomial(rows[i][j]);
    }
    return m;
}

bool PolyMatrix::is_zero() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::set<VarId> PolyMatrix::variables() const {
    std::set<VarId> out;
    for (const auto& e : entries_) e.collect_variables(out);
    return out;
}

bool PolyMatrix::is_integer_linear() const noexcept {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) {
        return p.degree() <= 1 &&
               std::all_of(p.terms().begin(), p.terms().end(), [](const Term& t) { return t.coeff.is_integer(); });
    });
}

PolyMatrix PolyMatrix::operator-() const {
    PolyMatrix m = *this;
    for (auto& e : m.entries_) e = -e;
    return m;
}

PolyMatrix& PolyMatrix::operator+=(const PolyMatrix& rhs) {
    require_same_order("add", *this, rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator-=(const PolyMatrix& rhs) {
    require_same_order("subtract", *this, rhs);
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

PolyMatrix& PolyMatrix::operator*=(const Polynomial& s) {
    for (auto& e : entries_)
        if (!e.is_zero()) e = e * s;
    return *this;
}

PolyMatrix operator*(const PolyMatrix& lhs, const PolyMatrix& rhs) { return mat_mul(lhs, rhs); }

std::string PolyMatrix::to_string(const VarRegistry& reg) const {
    std::ostringstream os;
    for (std::size_t i = 0; i < order_; ++i) {
        os << '[';
        for (std::size_t j = 0; j < order_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string(reg);
        os << "]\n";
    }
    return os.str();
}

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_order("mat_mul", a, b);
    return mul_transpose(a, transpose(b));
}

PolyMatrix transpose(const PolyMatrix& a) {
    PolyMatrix t(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) t(j, i) = a(i, j);
    return t;
}

PolyMatrix kron(const PolyMatrix& a, const PolyMatrix& b) {
    const std::size_t n = a.order();
    const std::size_t m = b.order();
    PolyMatrix out(n * m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial& s = a(i, j);
            if (s.is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t l = 0; l < m; ++l)
                    if (!b(k, l).is_zero()) out(i * m + k, j * m + l) = s * b(k, l);
        }
    return out;
}

PolyMatrix hadamard_product(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_order("hadamard_product", a, b);
    PolyMatrix out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j) out(i, j) = a(i, j) * b(i, j);
    return out;
}

PolyMatrix circ(const std::vector<Polynomial>& first_row) {
    if (first_row.empty()) throw std::invalid_argument("circ of an empty list");
    const std::size_t n = first_row.size();
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = first_row[(j + n - i) % n];
    return m;
}

PolyMatrix backcirc(const std::vector<Polynomial>& first_row) {
    if (first_row.empty()) throw std::invalid_argument("backcirc of an empty list");
    const std::size_t n = first_row.size();
    PolyMatrix m(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = first_row[(i + j) % n];
    return m;
}

PolyMatrix block_matrix(const std::vector<std::vector<PolyMatrix>>& blocks) {
    const std::size_t k = blocks.size();
    if (k == 0) throw std::invalid_argument("block_matrix of an empty grid");
    const std::size_t n = blocks[0][0].order();
    PolyMatrix out(k * n);
    for (std::size_t bi = 0; bi < k; ++bi) {
        if (blocks[bi].size() != k) throw std::invalid_argument("block grid must be square");
        for (std::size_t bj = 0; bj < k; ++bj) {
            const PolyMatrix& b = blocks[bi][bj];
            if (b.order() != n) throw DimensionMismatch("block_matrix", n, b.order());
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) out(bi * n + i, bj * n + j) = b(i, j);
        }
    }
    return out;
}

PolyMatrix mul_transpose_direct(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_order("mul_transpose", a, b);
    const std::size_t n = a.order();
    PolyMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Polynomial acc;
            for (std::size_t k = 0; k < n; ++k)
                if (!a(i, k).is_zero() && !b(j, k).is_zero()) acc.add_product(a(i, k), b(j, k));
            out(i, j) = std::move(acc);
        }
    return out;
}

PolyMatrix gram_direct(const PolyMatrix& a) {
    const std::size_t n = a.order();
    PolyMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            Polynomial acc;
            for (std::size_t k = 0; k < n; ++k)
                if (!a(i, k).is_zero() && !a(j, k).is_zero()) acc.add_product(a(i, k), a(j, k));
            if (j != i) out(j, i) = acc;
            out(i, j) = std::move(acc);
        }
    return out;
}

PolyMatrix mul_transpose(const PolyMatrix& a, const PolyMatrix& b) {
    require_same_order("mul_transpose", a, b);
    if (a.is_integer_linear() && b.is_integer_linear())
        return mul_transpose(decompose_by_variable(a), decompose_by_variable(b));
    return mul_transpose_direct(a, b);
}

PolyMatrix gram(const PolyMatrix& a) {
    if (a.is_integer_linear()) return gram(decompose_by_variable(a));
    return gram_direct(a);
}

std::optional<Polynomial> is_scalar_identity(const PolyMatrix& m) {
    const std::size_t n = m.order();
    if (n == 0) return std::nullopt;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                if (m(i, i) != m(0, 0)) return std::nullopt;
            } else if (!m(i, j).is_zero()) {
                return std::nullopt;
            }
        }
    return m(0, 0);
}

PolyMatrix substitute(const PolyMatrix& a, const std::map<VarId, Polynomial>& assignment) {
    PolyMatrix out(a.order());
    for (std::size_t i = 0; i < a.order(); ++i)
        for (std::size_t j = 0; j < a.order(); ++j)
            if (!a(i, j).is_zero()) out(i, j) = a(i, j).substitute(assignment);
    return out;
}

PolyMatrix substitute_all(const PolyMatrix& a, const Polynomial& value) {
    std::map<VarId, Polynomial> assignment;
    for (VarId v : a.variables()) assignment.emplace(v, value);
    return substitute(a, assignment);
}

// ---------------------------------------------------------------------------
// Sparse integer matrices and variable decompositions

std::int64_t SparseIntMatrix::at(std::size_t i, std::size_t j) const {
    const auto cols = row_cols(i);
    auto it = std::lower_bound(cols.begin(), cols.end(), static_cast<std::uint32_t>(j));
    if (it == cols.end() || *it != j) return 0;
    return row_values(i)[static_cast<std::size_t>(it - cols.begin())];
}

void SparseIntMatrix::push(std::size_t row, std::size_t col, std::int64_t value) {
    if (value == 0) return;
    while (filled_rows_ < row) row_start_[++filled_rows_] = cols_.size();
    cols_.push_back(static_cast<std::uint32_t>(col));
    values_.push_back(value);
    row_start_[row + 1] = cols_.size();
}

void SparseIntMatrix::finish() {
    while (filled_rows_ < order_) row_start_[++filled_rows_] = cols_.size();
}

VarDecomposition::VarDecomposition(std::size_t order, std::map<VarId, SparseIntMatrix> parts, SparseIntMatrix constant)
    : order_(order), parts_(std::move(parts)), constant_(std::move(constant)) {
    for (const auto& [v, m] : parts_)
        if (m.order() != order_) throw DimensionMismatch("VarDecomposition", order_, m.order());
    if (constant_.order() != order_) throw DimensionMismatch("VarDecomposition", order_, constant_.order());
}

PolyMatrix VarDecomposition::reassemble() const {
    PolyMatrix out(order_);
    auto add = [&](const SparseIntMatrix& m, const Polynomial& unit) {
        for (std::size_t i = 0; i < order_; ++i) {
            const auto cols = m.row_cols(i);
            const auto vals = m.row_values(i);
            for (std::size_t k = 0; k < cols.size(); ++k) out(i, cols[k]) += Rational(vals[k]) * unit;
        }
    };
    for (const auto& [v, m] : parts_) add(m, Polynomial::variable(v));
    add(constant_, Polynomial(1));
    return out;
}

VarDecomposition decompose_by_variable(const PolyMatrix& a) {
    const std::size_t n = a.order();
    std::map<VarId, SparseIntMatrix> parts;
    SparseIntMatrix constant(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (const Term& t : a(i, j).terms()) {
                if (t.mono.degree() > 1 || !t.coeff.is_integer()) throw NonlinearEntry(i, j);
                if (t.mono.is_one()) {
                    constant.push(i, j, t.coeff.num());
                } else {
                    const VarId v = t.mono.powers()[0].var;
                    auto it = parts.try_emplace(v, n).first;
                    it->second.push(i, j, t.coeff.num());
                }
            }
        }
    for (auto& [v, m] : parts) m.finish();
    constant.finish();
    return VarDecomposition(n, std::move(parts), std::move(constant));
}

namespace {

// One nonzero contribution of a linear form: column, variable slot, coefficient.
struct PackedEntry {
    std::uint32_t col;
    std::uint32_t slot;
    std::int64_t coeff;
};

struct PackedRows {
    std::vector<std::size_t> start;
    std::vector<PackedEntry> entries;
    std::int64_t max_abs = 0;
    std::size_t max_group = 0;  // most terms sharing a single entry
};

PackedRows pack(const VarDecomposition& d, const std::map<VarId, std::uint32_t>& slot_of, std::uint32_t const_slot) {
    const std::size_t n = d.order();
    std::vector<std::vector<PackedEntry>> rows(n);
    auto collect = [&](const SparseIntMatrix& m, std::uint32_t slot) {
        for (std::size_t i = 0; i < n; ++i) {
            const auto cols = m.row_cols(i);
            const auto vals = m.row_values(i);
            for (std::size_t k = 0; k < cols.size(); ++k) rows[i].push_back({cols[k], slot, vals[k]});
        }
    };
    for (const auto& [v, m] : d.parts()) collect(m, slot_of.at(v));
    collect(d.constant(), const_slot);

    PackedRows out;
    out.start.reserve(n + 1);
    out.start.push_back(0);
    for (auto& row : rows) {
        std::sort(row.begin(), row.end(), [](const PackedEntry& x, const PackedEntry& y) {
            return x.col != y.col ? x.col < y.col : x.slot < y.slot;
        });
        std::size_t group = 0;
        for (std::size_t k = 0; k < row.size(); ++k) {
            out.max_abs = std::max(out.max_abs, std::abs(row[k].coeff));
            group = (k > 0 && row[k - 1].col == row[k].col) ? group + 1 : 1;
            out.max_group = std::max(out.max_group, group);
        }
        out.entries.insert(out.entries.end(), row.begin(), row.end());
        out.start.push_back(out.entries.size());
    }
    return out;
}

// Accumulates sum over shared columns of (slot_a, slot_b) coefficient products.
class SlotAccumulator {
   public:
    explicit SlotAccumulator(std::size_t slots) : slots_(slots), acc_(slots * slots, 0), stamp_(slots * slots, 0) {}

    void begin() {
        ++epoch_;
        touched_.clear();
    }

    void add(std::uint32_t u, std::uint32_t v, std::int64_t value) {
        // x_u x_v and x_v x_u are the same monomial
        const std::size_t cell = u <= v ? u * slots_ + v : v * slots_ + u;
        if (stamp_[cell] != epoch_) {
            stamp_[cell] = epoch_;
            acc_[cell] = 0;
            touched_.push_back(cell);
        }
        acc_[cell] += value;
    }

    Polynomial finish(const std::vector<VarId>& var_of_slot, std::uint32_t const_slot) const {
        std::vector<Term> terms;
        for (std::size_t cell : touched_) {
            if (acc_[cell] == 0) continue;
            const auto u = static_cast<std::uint32_t>(cell / slots_);
            const auto v = static_cast<std::uint32_t>(cell % slots_);
            Monomial m;
            if (u != const_slot) m = m * Monomial(var_of_slot[u]);
            if (v != const_slot) m = m * Monomial(var_of_slot[v]);
            terms.push_back({std::move(m), Rational(acc_[cell])});
        }
        if (terms.empty()) return Polynomial{};
        return Polynomial::from_terms(std::move(terms));
    }

   private:
    std::size_t slots_;
    std::vector<std::int64_t> acc_;
    std::vector<std::uint64_t> stamp_;
    std::vector<std::size_t> touched_;
    std::uint64_t epoch_ = 0;
};

// Returns false when the accumulated coefficients could exceed 62 bits.
bool fits(const PackedRows& a, const PackedRows& b, std::size_t n) {
    const long double bound = static_cast<long double>(a.max_abs) * static_cast<long double>(b.max_abs) *
                              static_cast<long double>(a.max_group) * static_cast<long double>(b.max_group) *
                              static_cast<long double>(n) * 2.0L;
    return bound < static_cast<long double>(std::numeric_limits<std::int64_t>::max() / 2);
}

PolyMatrix packed_product(const VarDecomposition& da, const VarDecomposition& db, bool symmetric) {
    const std::size_t n = da.order();
    std::map<VarId, std::uint32_t> slot_of;
    std::vector<VarId> var_of_slot;
    for (const auto* d : {&da, &db})
        for (const auto& [v, m] : d->parts())
            if (slot_of.try_emplace(v, static_cast<std::uint32_t>(var_of_slot.size())).second) var_of_slot.push_back(v);
    const auto const_slot = static_cast<std::uint32_t>(var_of_slot.size());
    const std::size_t slots = var_of_slot.size() + 1;

    const PackedRows pa = pack(da, slot_of, const_slot);
    const PackedRows pb = symmetric ? PackedRows{} : pack(db, slot_of, const_slot);
    const PackedRows& rb = symmetric ? pa : pb;
    if (!fits(pa, rb, n) || slots > 4096)
        return symmetric ? gram_direct(da.reassemble()) : mul_transpose_direct(da.reassemble(), db.reassemble());

    PolyMatrix out(n);
    SlotAccumulator acc(slots);
    for (std::size_t i = 0; i < n; ++i) {
        const PackedEntry* ra = pa.entries.data() + pa.start[i];
        const PackedEntry* ra_end = pa.entries.data() + pa.start[i + 1];
        for (std::size_t j = symmetric ? i : 0; j < n; ++j) {
            const PackedEntry* x = ra;
            const PackedEntry* y = rb.entries.data() + rb.start[j];
            const PackedEntry* y_end = rb.entries.data() + rb.start[j + 1];
            acc.begin();
            while (x != ra_end && y != y_end) {
                if (x->col < y->col) {
                    ++x;
                } else if (y->col < x->col) {
                    ++y;
                } else {
                    const std::uint32_t col = x->col;
                    const PackedEntry* y0 = y;
                    for (; x != ra_end && x->col == col; ++x)
                        for (y = y0; y != y_end && y->col == col; ++y) acc.add(x->slot, y->slot, x->coeff * y->coeff);
                }
            }
            Polynomial p = acc.finish(var_of_slot, const_slot);
            if (symmetric && j != i) out(j, i) = p;
            out(i, j) = std::move(p);
        }
    }
    return out;
}

}  // namespace

PolyMatrix mul_transpose(const VarDecomposition& a, const VarDecomposition& b) {
    if (a.order() != b.order()) throw DimensionMismatch("mul_transpose", a.order(), b.order());
    return packed_product(a, b, false);
}

PolyMatrix gram(const VarDecomposition& a) { return packed_product(a, a, true); }

}  // namespace odtool
