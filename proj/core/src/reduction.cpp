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

#include "ncred/reduction.hpp"

#include <algorithm>
#include <limits>
#include <map>

#include "ncred/error.hpp"

namespace ncred {

namespace {

void require_rational(const Presentation& pres) {
    if (!pres.field().is_rational()) throw StructuralError("reduction starts from a presentation over QQ");
}

Rational p_power(const ValuationSpec& v, long e) {
    Integer pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(v.prime()), static_cast<unsigned long>(e < 0 ? -e : e));
    return e >= 0 ? Rational(pe) : Rational(1) / Rational(pe);
}

std::vector<long> differences(const HilbertTable& a, const HilbertTable& b) {
    std::vector<long> d;
    for (std::size_t n = 0; n < a.dims.size(); ++n)
        d.push_back(static_cast<long>(a.dims[n]) - static_cast<long>(b.dims[n]));
    return d;
}

std::optional<int> first_nonzero(const std::vector<long>& d) {
    for (std::size_t n = 0; n < d.size(); ++n)
        if (d[n] != 0) return static_cast<int>(n);
    return std::nullopt;
}

/// Smith exponents of the lattice spanned by rows, allowing entries of
/// negative valuation (the whole lattice is shifted into ZZ_(p) and back).
std::vector<long> lattice_exponents(const std::vector<linalg::RationalRow>& rows, std::size_t cols,
                                    const ValuationSpec& v) {
    long lowest = 0;
    for (const auto& r : rows)
        for (const auto& [c, x] : r) lowest = std::min(lowest, *vp(x, v));
    linalg::SparseMatrix m{cols, rows};
    if (lowest < 0) {
        const auto s = p_power(v, -lowest);
        for (auto& r : m.rows)
            for (auto& [c, x] : r) x *= s;
    }
    auto e = p_local_smith(m, v).invariant_exponents;
    for (auto& x : e) x += lowest;
    return e;
}

std::size_t filtered_dimension(const Presentation& pres, int n) {
    if (pres.mode() == Mode::filtered) return filtered_dims(pres, n).dims.back();
    std::size_t total = 0;
    for (auto d : hilbert_dims(pres, n).dims) total += d;
    return total;
}

}  // namespace

Presentation reduce_presentation(const Presentation& pres, const ValuationSpec& v) {
    require_rational(pres);
    const auto field = v.residue_field();
    std::vector<NcPolynomial> reduced;
    for (const auto& r : pres.relations()) {
        auto rp = reduce_poly(normalize_content(r, v), v);
        // a unit coefficient survives normalization, so rp != 0
        reduced.push_back(std::move(rp));
    }
    return Presentation(pres.alphabet(), field, std::move(reduced), pres.mode());
}

ReductionReport good_reduction_report(const Presentation& pres, const ValuationSpec& v, int max_degree) {
    require_rational(pres);
    if (pres.mode() != Mode::graded) throw ModeError("good_reduction_report needs a graded presentation");
    ReductionReport report;
    report.prime = v.prime();
    report.max_degree = max_degree;
    report.dims_K = hilbert_dims(pres, max_degree);
    const auto reduced = reduce_presentation(pres, v);
    report.dims_kv = hilbert_dims(reduced, max_degree);
    report.defect = differences(report.dims_kv, report.dims_K);
    report.first_bad_degree = first_nonzero(report.defect);
    report.reduces_well = !report.first_bad_degree.has_value();
    if (max_degree >= 1) report.witnesses = zero_divisor_scan(reduced, max_degree);
    report.domain_up_to_N = report.witnesses.empty();
    return report;
}

std::size_t saturation_defect(const Presentation& pres, const ValuationSpec& v, int n) {
    require_rational(pres);
    if (pres.mode() != Mode::graded) throw ModeError("saturation_defect needs a graded presentation");
    if (n < 0) throw DomainError("degree must be nonnegative");
    std::vector<NcPolynomial> normalized;
    for (const auto& r : pres.relations()) normalized.push_back(normalize_content(r, v));
    const Presentation integral(pres.alphabet(), pres.field(), std::move(normalized), Mode::graded);
    WordIndex columns(words_of_degree(*pres.alphabet(), n));
    linalg::IntegerRankEchelon over_q(columns.size());
    linalg::ModRankEchelon over_p(columns.size(), v.prime());
    for (const auto& row : relation_multiples(integral, columns, n)) {
        over_q.add(row);
        linalg::ModRow reduced;
        for (const auto& [c, x] : row) {
            const auto r = reduce_scalar(x, v).value();
            if (r) reduced.emplace_back(c, r);
        }
        over_p.add(std::move(reduced));
    }
    return over_q.rank() - over_p.rank();
}

LiftReport lift_report(const Presentation& pres, const ValuationSpec& v, int max_degree) {
    require_rational(pres);
    if (pres.mode() != Mode::filtered) throw ModeError("lift_report needs a filtered presentation");
    LiftReport report;
    report.graded = good_reduction_report(leading_ideal_presentation(pres), v, max_degree);
    report.gr_check = check_gr_presentation(pres, max_degree);
    report.filtered_K = report.gr_check.filtered;
    report.filtered_kv = filtered_dims(reduce_presentation(pres, v), max_degree);
    report.filtered_defect = differences(report.filtered_kv, report.filtered_K);
    report.first_bad_degree = first_nonzero(report.filtered_defect);
    report.reduces_well = !report.first_bad_degree.has_value();
    report.lift_holds = report.gr_check.ok && report.graded.reduces_well;
    for (int n = 0; n <= max_degree && report.lift_holds; ++n) {
        const auto k = static_cast<std::size_t>(n);
        const auto prev = n == 0 ? std::size_t{0} : report.filtered_K.dims[k - 1];
        if (report.filtered_K.dims[k] - prev != report.graded.dims_kv.dims[k]) report.lift_holds = false;
    }
    return report;
}

std::size_t f_n_lattice_rank(const Presentation& pres, const ValuationSpec& v, int n) {
    require_rational(pres);
    const TruncatedQuotient quotient(pres, n);
    linalg::SparseMatrix m{quotient.dimension(), {}};
    for (std::size_t w = 0; w < quotient.words().size(); ++w) {
        auto row = quotient.coordinates(w);
        if (row.empty()) continue;
        long lowest = std::numeric_limits<long>::max();
        for (const auto& [c, x] : row) lowest = std::min(lowest, *vp(x, v));
        if (lowest != 0) {
            const auto s = p_power(v, -lowest);
            for (auto& [c, x] : row) x *= s;
        }
        m.rows.push_back(std::move(row));
    }
    return p_local_smith(m, v).rank;
}

bool lattice_rank_check(const Presentation& pres, const ValuationSpec& v, int n) {
    return f_n_lattice_rank(pres, v, n) == filtered_dimension(pres, n);
}

Obs21Result obs21_details(const Presentation& pres, const ValuationSpec& v, int n, int a) {
    require_rational(pres);
    if (n < 0 || a < 0) throw DomainError("obs21 needs n >= 0 and a >= 0");
    const int top = n + 1;
    const TruncatedQuotient quotient(pres, top);
    const auto dim = quotient.dimension();
    const auto& std_words = quotient.standard_words();
    auto degree_of = [&](std::size_t k) { return quotient.words().words()[std_words[k]].degree; };

    std::vector<std::size_t> high, low;
    for (std::size_t k = dim; k-- > 0;) (degree_of(k) > n ? high : low).push_back(k);
    std::vector<std::size_t> low_position(dim, std::numeric_limits<std::size_t>::max());
    {
        std::vector<std::size_t> sorted_low(low.rbegin(), low.rend());
        for (std::size_t i = 0; i < sorted_low.size(); ++i) low_position[sorted_low[i]] = i;
    }
    std::vector<linalg::RationalRow> gens;
    for (std::size_t w = 0; w < quotient.words().size(); ++w) gens.push_back(quotient.coordinates(w));

    auto restrict_low = [&](const linalg::RationalRow& r, const Rational& scale) {
        linalg::RationalRow out;
        for (const auto& [c, x] : r) {
            if (low_position[c] == std::numeric_limits<std::size_t>::max()) {
                if (x != 0) throw StructuralError("lattice vector leaves the degree-n subspace");
                continue;
            }
            out.emplace_back(low_position[c], x * scale);
        }
        std::sort(out.begin(), out.end(), [](const auto& l, const auto& r2) { return l.first < r2.first; });
        return out;
    };

    // Route 1: echelon basis pivoting on high-degree coordinates first.
    std::vector<std::size_t> order(high);
    order.insert(order.end(), low.begin(), low.end());
    std::vector<linalg::RationalRow> intersection, scaled;
    const auto pa = p_power(v, a);
    for (const auto& er : p_local_echelon(gens, order, v)) {
        if (degree_of(er.pivot) > n) continue;
        intersection.push_back(restrict_low(er.row, 1));
        scaled.push_back(restrict_low(er.row, pa));
    }

    // Route 2: coefficient vectors c with c*G vanishing on the high block,
    // saturated in ZZ_(p)^words, then mapped through p^a G.
    const auto nwords = gens.size();
    std::vector<std::size_t> high_position(dim, std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < high.size(); ++i) high_position[high[i]] = i;
    std::vector<linalg::RationalRow> transposed(high.size());
    for (std::size_t w = 0; w < nwords; ++w)
        for (const auto& [c, x] : gens[w])
            if (high_position[c] != std::numeric_limits<std::size_t>::max())
                transposed[high_position[c]].emplace_back(w, x);
    linalg::ReducedEchelon<linalg::RationalOps> high_map(nwords);
    for (const auto& row : transposed) high_map.add(row);
    const auto kernel = p_saturate(high_map.nullspace(), nwords, v);
    std::vector<linalg::RationalRow> via_kernel;
    for (const auto& c : kernel) {
        std::map<std::size_t, Rational> acc;
        for (const auto& [w, coef] : c)
            for (const auto& [col, x] : gens[w]) acc[col] += coef * x;
        linalg::RationalRow image;
        for (auto& [col, x] : acc)
            if (x != 0) image.emplace_back(col, x);
        via_kernel.push_back(restrict_low(image, pa));
    }

    Obs21Result result;
    result.intersection_exponents = lattice_exponents(intersection, low.size(), v);
    result.scaled_exponents = lattice_exponents(scaled, low.size(), v);
    result.kernel_route_exponents = lattice_exponents(via_kernel, low.size(), v);
    auto shifted = result.intersection_exponents;
    for (auto& e : shifted) e += a;
    result.holds = result.scaled_exponents == shifted && result.kernel_route_exponents == result.scaled_exponents &&
                   result.intersection_exponents.size() == low.size();
    return result;
}

bool obs21_check(const Presentation& pres, const ValuationSpec& v, int n, int a) {
    return obs21_details(pres, v, n, a).holds;
}

bool rees_kernel_check(const Presentation& pres, const ValuationSpec& v, int max_degree) {
    require_rational(pres);
    if (max_degree < 1) return true;
    const TruncatedQuotient quotient(pres, max_degree);
    const auto dim = quotient.dimension();
    std::vector<std::size_t> order(dim);
    for (std::size_t j = 0; j < dim; ++j) order[j] = dim - 1 - j;

    // Echelon bases of F_m(Lambda), m = 0..N, in standard coordinates.
    std::vector<std::vector<EchelonRow>> bases;
    for (int m = 0; m <= max_degree; ++m) {
        std::vector<linalg::RationalRow> gens;
        for (std::size_t w = 0; w < quotient.words().size(); ++w)
            if (quotient.words().words()[w].degree <= m) gens.push_back(quotient.coordinates(w));
        bases.push_back(p_local_echelon(std::move(gens), order, v));
    }
    std::vector<std::size_t> offset{0};
    for (const auto& b : bases) offset.push_back(offset.back() + b.size());

    auto solve = [&](const std::vector<EchelonRow>& basis, const linalg::RationalRow& target) {
        std::map<std::size_t, Rational> rest(target.begin(), target.end());
        std::vector<Rational> x(basis.size());
        for (std::size_t k = 0; k < basis.size(); ++k) {
            auto it = rest.find(basis[k].pivot);
            if (it == rest.end() || it->second == 0) continue;
            Rational lead = 0;
            for (const auto& [c, val] : basis[k].row)
                if (c == basis[k].pivot) lead = val;
            x[k] = it->second / lead;
            for (const auto& [c, val] : basis[k].row) rest[c] -= x[k] * val;
        }
        for (const auto& [c, val] : rest)
            if (val != 0) throw StructuralError("F_m(Lambda) is not contained in F_{m+1}(Lambda)");
        return x;
    };

    linalg::SparseMatrix image{offset.back(), {}};
    std::size_t expected = 0;
    for (int m = 0; m < max_degree; ++m) {
        const auto& here = bases[static_cast<std::size_t>(m)];
        const auto& next = bases[static_cast<std::size_t>(m + 1)];
        expected += filtered_dimension(pres, m);
        for (std::size_t k = 0; k < here.size(); ++k) {
            linalg::RationalRow row{{offset[static_cast<std::size_t>(m)] + k, Rational(-1)}};
            const auto x = solve(next, here[k].row);
            for (std::size_t j = 0; j < x.size(); ++j)
                if (x[j] != 0) row.emplace_back(offset[static_cast<std::size_t>(m) + 1] + j, x[j]);
            image.rows.push_back(std::move(row));
        }
    }
    const auto form = p_local_smith(image, v);
    return form.rank == expected && form.unit_count() == form.rank;
}

}  // namespace ncred
