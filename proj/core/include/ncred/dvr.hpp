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

/* The p-adic valuation on QQ, its valuation ring ZZ_(p), and lattice
 * computations over ZZ_(p).
 */

#ifndef NCRED_DVR_HPP
#define NCRED_DVR_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ncred/freealg.hpp"
#include "ncred/linalg.hpp"
#include "ncred/scalar.hpp"

namespace ncred {

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n);

/// The valuation v_p on QQ. The prime is checked at construction.
class ValuationSpec {
   public:
    explicit ValuationSpec(std::uint64_t p);

    std::uint64_t prime() const noexcept { return p_; }
    /// Residue field GF(p); requires p < 2^31.
    Field residue_field() const { return Field::prime(p_); }

    bool operator==(const ValuationSpec&) const = default;

   private:
    std::uint64_t p_;
};

/// Exponent of p in q; std::nullopt stands for +infinity (q = 0).
std::optional<long> vp(const Rational& q, const ValuationSpec& v);
std::optional<long> vp(const Integer& z, const ValuationSpec& v);

/// Image of q in GF(p). NotIntegralError when vp(q) < 0.
ResidueScalar reduce_scalar(const Rational& q, const ValuationSpec& v);

/// Scales f by p^(-m), m the least valuation among its coefficients, so that
/// some coefficient becomes a p-adic unit. DomainError when f = 0.
NcPolynomial normalize_content(const NcPolynomial& f, const ValuationSpec& v);

/// Termwise reduction to GF(p). NotIntegralError when a coefficient is not in ZZ_(p).
NcPolynomial reduce_poly(const NcPolynomial& f, const ValuationSpec& v);

struct PLocalSmithForm {
    std::size_t rank = 0;
    /// p-adic valuations of the elementary divisors, nondecreasing.
    std::vector<long> invariant_exponents;

    std::size_t unit_count() const;
    bool operator==(const PLocalSmithForm&) const = default;
};

/// Rank and elementary-divisor exponents of the ZZ_(p)-row lattice of m.
/// Elimination always pivots on an entry of least valuation (ties: smallest
/// row, then column). NotIntegralError if an entry has negative valuation.
PLocalSmithForm p_local_smith(const linalg::SparseMatrix& m, const ValuationSpec& v);

struct EchelonRow {
    std::size_t pivot;
    linalg::RationalRow row;
};

/// Echelon basis of the ZZ_(p)-lattice spanned by rows (entries may have any
/// valuation). Columns are processed in column_order; a basis row is zero at
/// the pivot columns of every row that follows it.
std::vector<EchelonRow> p_local_echelon(std::vector<linalg::RationalRow> rows,
                                        const std::vector<std::size_t>& column_order, const ValuationSpec& v);

/// Basis of (QQ * L) cap ZZ_(p)^cols for the lattice L spanned by rows.
/// The returned rows are integral and independent modulo p.
std::vector<linalg::RationalRow> p_saturate(const std::vector<linalg::RationalRow>& rows, std::size_t cols,
                                            const ValuationSpec& v);

/// Ceiling of m / e for e >= 1; DomainError otherwise.
long scaled_degree(long m, long e);

}  // namespace ncred

#endif  // NCRED_DVR_HPP
