/*
   Copyright 2026 The ncred Authors

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

/* Sparse exact linear algebra.
 *
 * Rows are vectors of (column, value) pairs sorted by increasing column with
 * no stored zeros. Every echelon structure below pivots on the LARGEST column
 * of a row: with deglex column layouts this eliminates the highest words
 * first, so the non-pivot ("standard") columns of a filtered span are closed
 * under degree truncation.
 */

#ifndef NCRED_LINALG_HPP
#define NCRED_LINALG_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ncred/scalar.hpp"

namespace ncred::linalg {

template <class T>
using SparseRow = std::vector<std::pair<std::size_t, T>>;

using RationalRow = SparseRow<Rational>;
using IntegerRow = SparseRow<Integer>;
using ModRow = SparseRow<std::uint64_t>;

struct SparseMatrix {
    std::size_t cols = 0;
    std::vector<RationalRow> rows;
};

/// Sorts by column and merges duplicates; drops zeros.
RationalRow canonical_row(std::vector<std::pair<std::size_t, Rational>> entries);

/// Scales a rational row to a primitive integer row (gcd 1, entry in the largest
/// column positive, matching the pivot convention).
IntegerRow primitive_integer_row(const RationalRow& row);

/// Rank over QQ by fraction-free elimination: rows are kept primitive over
/// ZZ and combined as a*row - b*pivot with gcd content removal.
class IntegerRankEchelon {
   public:
    explicit IntegerRankEchelon(std::size_t cols) : pivots_(cols) {}

    /// Returns true when the row is independent of the rows added so far.
    bool add(IntegerRow row);
    bool add(const RationalRow& row) { return add(primitive_integer_row(row)); }
    std::size_t rank() const noexcept { return rank_; }

   private:
    std::vector<std::optional<IntegerRow>> pivots_;
    std::size_t rank_ = 0;
};

/// Rank over GF(p), p < 2^31.
class ModRankEchelon {
   public:
    ModRankEchelon(std::size_t cols, std::uint64_t p) : p_(p), pivots_(cols) {}

    bool add(ModRow row);
    std::size_t rank() const noexcept { return rank_; }

   private:
    std::uint64_t p_;
    std::vector<std::optional<ModRow>> pivots_;
    std::size_t rank_ = 0;
};

/// Field operations used by ReducedEchelon.
struct RationalOps {
    using value_type = Rational;
    static bool is_zero(const Rational& v) { return v == 0; }
    Rational add(const Rational& a, const Rational& b) const { return a + b; }
    Rational sub(const Rational& a, const Rational& b) const { return a - b; }
    Rational mul(const Rational& a, const Rational& b) const { return a * b; }
    Rational inv(const Rational& a) const { return 1 / a; }
    Rational neg(const Rational& a) const { return -a; }
};

struct ModOps {
    using value_type = std::uint64_t;
    std::uint64_t p;
    static bool is_zero(std::uint64_t v) { return v == 0; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return (a + p - b) % p; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t inv(std::uint64_t a) const { return mod_inverse(a, p); }
    std::uint64_t neg(std::uint64_t a) const { return (p - a) % p; }
};

/// Reduced row echelon form maintained incrementally. Pivot rows have a
/// leading 1 at their largest column and zeros at every other pivot column.
template <class Ops>
class ReducedEchelon {
   public:
    using value_type = typename Ops::value_type;
    using Row = SparseRow<value_type>;

    explicit ReducedEchelon(std::size_t cols, Ops ops = {}) : ops_(ops), cols_(cols) {}

    std::size_t cols() const noexcept { return cols_; }
    std::size_t rank() const noexcept { return pivots_.size(); }
    bool is_pivot(std::size_t col) const { return pivots_.count(col) != 0; }
    const std::map<std::size_t, Row>& pivot_rows() const noexcept { return pivots_; }

    /// Unique representative of row modulo the span, supported on non-pivot columns.
    Row normal_form(const Row& row) const {
        std::map<std::size_t, value_type> acc;
        for (const auto& [c, v] : row)
            if (!Ops::is_zero(v)) acc[c] = v;
        for (auto it = acc.rbegin(); it != acc.rend();) {
            auto col = it->first;
            auto piv = pivots_.find(col);
            if (piv == pivots_.end() || Ops::is_zero(it->second)) {
                ++it;
                continue;
            }
            const value_type factor = it->second;
            for (const auto& [c, v] : piv->second) {
                auto& slot = acc[c];
                slot = ops_.sub(slot, ops_.mul(factor, v));
            }
            // acc[col] is now zero; restart just below col.
            it = std::make_reverse_iterator(acc.find(col));
        }
        Row out;
        for (auto& [c, v] : acc)
            if (!Ops::is_zero(v)) out.emplace_back(c, v);
        return out;
    }

    /// Returns true when the row enlarged the span.
    bool add(const Row& row) {
        Row r = normal_form(row);
        if (r.empty()) return false;
        const auto lead = r.back().first;
        const auto inv = ops_.inv(r.back().second);
        for (auto& [c, v] : r) v = ops_.mul(v, inv);
        for (auto& [pc, prow] : pivots_) {
            auto hit = std::find_if(prow.begin(), prow.end(), [&](const auto& e) { return e.first == lead; });
            if (hit == prow.end()) continue;
            const value_type factor = hit->second;
            std::map<std::size_t, value_type> acc(prow.begin(), prow.end());
            for (const auto& [c, v] : r) {
                auto& slot = acc[c];
                slot = ops_.sub(slot, ops_.mul(factor, v));
            }
            Row updated;
            for (auto& [c, v] : acc)
                if (!Ops::is_zero(v)) updated.emplace_back(c, v);
            prow = std::move(updated);
        }
        pivots_.emplace(lead, std::move(r));
        return true;
    }

    /// Basis of {x : A x = 0} where A is the matrix of pivot rows, one vector
    /// per non-pivot column.
    std::vector<Row> nullspace() const {
        std::vector<Row> basis;
        for (std::size_t f = 0; f < cols_; ++f) {
            if (is_pivot(f)) continue;
            std::map<std::size_t, value_type> v;
            v[f] = value_type(1);
            for (const auto& [pc, prow] : pivots_)
                for (const auto& [c, val] : prow)
                    if (c == f) v[pc] = ops_.neg(val);
            Row r;
            for (auto& [c, val] : v)
                if (!Ops::is_zero(val)) r.emplace_back(c, val);
            basis.push_back(std::move(r));
        }
        return basis;
    }

   private:
    Ops ops_;
    std::size_t cols_;
    std::map<std::size_t, Row> pivots_;
};

}  // namespace ncred::linalg

#endif  // NCRED_LINALG_HPP
