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

#include "ncred/dvr.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "ncred/error.hpp"

namespace ncred {

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mulmod64(r, b, m);
        b = mulmod64(b, b, m);
        e >>= 1;
    }
    return r;
}

Rational p_power(const ValuationSpec& v, long e) {
    Integer pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(v.prime()), static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(pe) : Rational(1) / Rational(pe);
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // These twelve bases are a proof of primality for all n < 3.3e24.
    for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        auto x = powmod64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

ValuationSpec::ValuationSpec(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

std::optional<long> vp(const Integer& z, const ValuationSpec& v) {
    if (z == 0) return std::nullopt;
    Integer rest;
    Integer p = static_cast<unsigned long>(v.prime());
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

std::optional<long> vp(const Rational& q, const ValuationSpec& v) {
    if (q == 0) return std::nullopt;
    return *vp(q.get_num(), v) - *vp(q.get_den(), v);
}

ResidueScalar reduce_scalar(const Rational& input, const ValuationSpec& v) {
    Rational q(input);
    q.canonicalize();
    const auto e = vp(q, v);
    if (e && *e < 0)
        throw NotIntegralError(to_string(q) + " is not " + std::to_string(v.prime()) + "-integral");
    const auto p = v.prime();
    if (p >= (std::uint64_t{1} << 31)) throw DomainError("residue characteristic must be below 2^31");
    const auto num = mod_of(q.get_num(), p);
    const auto den = mod_of(q.get_den(), p);
    return ResidueScalar(num * mod_inverse(den, p) % p, static_cast<std::uint32_t>(p));
}

NcPolynomial normalize_content(const NcPolynomial& f, const ValuationSpec& v) {
    if (f.is_zero()) throw DomainError("content of the zero polynomial");
    if (!f.field().is_rational()) throw StructuralError("content normalization needs QQ coefficients");
    long m = std::numeric_limits<long>::max();
    for (const auto& [w, c] : f.terms()) m = std::min(m, *vp(c, v));
    return f * p_power(v, -m);
}

NcPolynomial reduce_poly(const NcPolynomial& f, const ValuationSpec& v) {
    if (!f.field().is_rational()) throw StructuralError("reduction needs QQ coefficients");
    for (const auto& [w, c] : f.terms()) {
        if (*vp(c, v) < 0)
            throw NotIntegralError("coefficient " + to_string(c) + " of " + to_string(w, *f.alphabet()) +
                                   " is not " + std::to_string(v.prime()) + "-integral");
    }
    return change_field(f, v.residue_field());
}

std::size_t PLocalSmithForm::unit_count() const {
    return static_cast<std::size_t>(std::count(invariant_exponents.begin(), invariant_exponents.end(), 0L));
}

PLocalSmithForm p_local_smith(const linalg::SparseMatrix& m, const ValuationSpec& v) {
    const auto rows = m.rows.size();
    const auto cols = m.cols;
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        for (const auto& [c, x] : m.rows[i]) {
            if (c >= cols) throw StructuralError("matrix entry outside the declared column range");
            if (x != 0 && *vp(x, v) < 0)
                throw NotIntegralError("matrix entry " + to_string(x) + " is not " + std::to_string(v.prime()) +
                                       "-integral");
            a[i][c] = x;
        }
    }
    std::vector<bool> row_done(rows, false), col_done(cols, false);
    PLocalSmithForm form;
    for (;;) {
        long best = std::numeric_limits<long>::max();
        std::size_t pr = 0, pc = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (row_done[i]) continue;
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_done[j] || a[i][j] == 0) continue;
                const long e = *vp(a[i][j], v);
                if (e < best) {
                    best = e;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best == std::numeric_limits<long>::max()) break;
        form.invariant_exponents.push_back(best);
        row_done[pr] = true;
        col_done[pc] = true;
        for (std::size_t k = 0; k < rows; ++k) {
            if (row_done[k] || a[k][pc] == 0) continue;
            const Rational factor = a[k][pc] / a[pr][pc];
            for (std::size_t j = 0; j < cols; ++j) {
                if (col_done[j] || a[pr][j] == 0) continue;
                a[k][j] -= factor * a[pr][j];
            }
            a[k][pc] = 0;
        }
    }
    form.rank = form.invariant_exponents.size();
    std::sort(form.invariant_exponents.begin(), form.invariant_exponents.end());
    return form;
}

std::vector<EchelonRow> p_local_echelon(std::vector<linalg::RationalRow> rows,
                                        const std::vector<std::size_t>& column_order, const ValuationSpec& v) {
    std::vector<std::map<std::size_t, Rational>> work;
    work.reserve(rows.size());
    for (auto& r : rows) {
        std::map<std::size_t, Rational> m;
        for (auto& [c, x] : r)
            if (x != 0) m[c] += x;
        std::erase_if(m, [](const auto& e) { return e.second == 0; });
        if (!m.empty()) work.push_back(std::move(m));
    }
    std::vector<EchelonRow> basis;
    for (auto col : column_order) {
        long best = std::numeric_limits<long>::max();
        std::size_t pick = work.size();
        for (std::size_t i = 0; i < work.size(); ++i) {
            auto it = work[i].find(col);
            if (it == work[i].end()) continue;
            const long e = *vp(it->second, v);
            if (e < best) {
                best = e;
                pick = i;
            }
        }
        if (pick == work.size()) continue;
        auto pivot = std::move(work[pick]);
        work.erase(work.begin() + static_cast<std::ptrdiff_t>(pick));
        const Rational lead = pivot.at(col);
        for (auto& r : work) {
            auto it = r.find(col);
            if (it == r.end()) continue;
            const Rational factor = it->second / lead;
            for (const auto& [c, x] : pivot) {
                auto& slot = r[c];
                slot -= factor * x;
            }
            std::erase_if(r, [](const auto& e) { return e.second == 0; });
        }
        std::erase_if(work, [](const auto& r) { return r.empty(); });
        EchelonRow er{col, {}};
        for (auto& [c, x] : pivot) er.row.emplace_back(c, std::move(x));
        basis.push_back(std::move(er));
    }
    if (!work.empty()) throw StructuralError("column order does not cover every nonzero column");
    return basis;
}

namespace {

linalg::RationalRow unit_content(linalg::RationalRow r, const ValuationSpec& v) {
    long m = std::numeric_limits<long>::max();
    for (const auto& [c, x] : r) m = std::min(m, *vp(x, v));
    if (r.empty() || m == 0) return r;
    const auto s = p_power(v, -m);
    for (auto& [c, x] : r) x *= s;
    return r;
}

// Index of a row of b that is a GF(p)-combination of the earlier-reduced rows,
// together with the combination (coefficient 1 on that row).
std::optional<std::pair<std::size_t, std::vector<std::uint64_t>>> mod_p_dependency(
    const std::vector<linalg::RationalRow>& b, std::size_t cols, std::uint64_t p) {
    const auto n = b.size();
    std::vector<std::vector<std::uint64_t>> m(n, std::vector<std::uint64_t>(cols + n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [c, x] : b[i]) {
            m[i][c] = mod_of(x.get_num(), p) * mod_inverse(mod_of(x.get_den(), p), p) % p;
        }
        m[i][cols + i] = 1;
    }
    std::vector<std::size_t> pivot_of_row(n, cols);
    for (std::size_t i = 0; i < n; ++i) {
        // reduce row i by earlier pivot rows
        for (std::size_t k = 0; k < i; ++k) {
            const auto pc = pivot_of_row[k];
            if (pc == cols || m[i][pc] == 0) continue;
            const auto f = m[i][pc];
            for (std::size_t j = 0; j < cols + n; ++j) m[i][j] = (m[i][j] + p - f * m[k][j] % p) % p;
        }
        std::size_t pc = cols;
        for (std::size_t j = 0; j < cols; ++j)
            if (m[i][j]) {
                pc = j;
                break;
            }
        if (pc == cols) {
            std::vector<std::uint64_t> combo(m[i].begin() + static_cast<std::ptrdiff_t>(cols), m[i].end());
            return std::make_pair(i, std::move(combo));
        }
        const auto inv = mod_inverse(m[i][pc], p);
        for (auto& x : m[i]) x = x * inv % p;
        pivot_of_row[i] = pc;
    }
    return std::nullopt;
}

}  // namespace

std::vector<linalg::RationalRow> p_saturate(const std::vector<linalg::RationalRow>& rows, std::size_t cols,
                                            const ValuationSpec& v) {
    std::vector<std::size_t> order(cols);
    for (std::size_t j = 0; j < cols; ++j) order[j] = cols - 1 - j;
    std::vector<linalg::RationalRow> b;
    for (auto& er : p_local_echelon(rows, order, v)) b.push_back(unit_content(std::move(er.row), v));
    const auto p = v.prime();
    const Rational inv_p = Rational(1) / Rational(static_cast<unsigned long>(p));
    while (auto dep = mod_p_dependency(b, cols, p)) {
        const auto& [target, combo] = *dep;
        std::map<std::size_t, Rational> y;
        for (std::size_t i = 0; i < b.size(); ++i) {
            if (combo[i] == 0) continue;
            const Rational c(static_cast<unsigned long>(combo[i]));
            for (const auto& [col, x] : b[i]) y[col] += c * x;
        }
        linalg::RationalRow r;
        for (auto& [col, x] : y)
            if (x != 0) r.emplace_back(col, x * inv_p);
        b[target] = unit_content(std::move(r), v);
    }
    return b;
}

long scaled_degree(long m, long e) {
    if (e < 1) throw DomainError("scaled filtration step must be positive");
    long q = m / e;
    if (m % e != 0 && m > 0) ++q;
    return q;
}

}  // namespace ncred
