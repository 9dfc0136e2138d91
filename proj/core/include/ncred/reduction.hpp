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

/* Reduction of rational presentations at a prime p.
 *
 * Two objects are compared throughout. The naive reduction GF(p)<X>/(p_i mod p)
 * has dimensions dims_kv; the algebra itself has dimensions dims_K over QQ.
 * The image lattice of ZZ_(p)<X> has rank dims_K in each degree, and its
 * reduction mod p is what the naive reduction approximates from above. The
 * presentation reduces well exactly when the two tables agree.
 */

#ifndef NCRED_REDUCTION_HPP
#define NCRED_REDUCTION_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ncred/dvr.hpp"
#include "ncred/presentations.hpp"

namespace ncred {

/// Content-normalizes every relation and reduces it mod p. The result keeps
/// the input's mode; relations that coincide mod p are kept once.
Presentation reduce_presentation(const Presentation& pres, const ValuationSpec& v);

struct ReductionReport {
    std::uint64_t prime = 0;
    int max_degree = 0;
    HilbertTable dims_K;
    HilbertTable dims_kv;
    /// dims_kv[n] - dims_K[n]; nonnegative by semicontinuity of rank.
    std::vector<long> defect;
    bool reduces_well = true;
    /// No homogeneous zero-divisors in the reduction up to max_degree.
    bool domain_up_to_N = true;
    std::optional<int> first_bad_degree;
    std::vector<ZeroDivisorWitness> witnesses;
};

/// Graded presentations only.
ReductionReport good_reduction_report(const Presentation& pres, const ValuationSpec& v, int max_degree);

/// rank_QQ(degree-n relation span) - rank_GF(p)(same rows after content
/// normalization and reduction). Computed on the matrix directly, not via the
/// reduced presentation.
std::size_t saturation_defect(const Presentation& pres, const ValuationSpec& v, int n);

/// Report for a filtered presentation: the graded report of its leading
/// ideal, the leading-ideal check, and the filtered tables over QQ and GF(p).
struct LiftReport {
    ReductionReport graded;  ///< good_reduction_report of leading_ideal_presentation
    GrCheck gr_check;
    HilbertTable filtered_K;
    HilbertTable filtered_kv;
    std::vector<long> filtered_defect;
    bool reduces_well = true;
    std::optional<int> first_bad_degree;
    /// Filtered first differences over QQ equal the reduced graded dims on [0, N].
    bool lift_holds = false;
};

LiftReport lift_report(const Presentation& pres, const ValuationSpec& v, int max_degree);

/// Rank of the ZZ_(p)-lattice F_n(Lambda) spanned by the images of words of degree <= n.
std::size_t f_n_lattice_rank(const Presentation& pres, const ValuationSpec& v, int n);

/// rank F_n(Lambda) == dim_QQ F_nA.
bool lattice_rank_check(const Presentation& pres, const ValuationSpec& v, int n);

struct Obs21Result {
    bool holds = false;
    /// Smith exponents of Lambda cap F_nA (Lambda truncated at degree n + 1).
    std::vector<long> intersection_exponents;
    /// p^a (Lambda cap F_nA).
    std::vector<long> scaled_exponents;
    /// (p^a Lambda) cap F_nA, computed through the kernel of the projection
    /// onto the degree > n coordinates.
    std::vector<long> kernel_route_exponents;
};

/// p^a Lambda cap F_nA == p^a (Lambda cap F_nA), both sides computed by
/// different routes and compared through their Smith invariants.
Obs21Result obs21_details(const Presentation& pres, const ValuationSpec& v, int n, int a);
bool obs21_check(const Presentation& pres, const ValuationSpec& v, int n, int a);

/// In the truncated Rees lattice (the direct sum of F_m(Lambda) T^m for
/// m <= N), checks that the image of multiplication by T - 1 from degrees
/// < N has rank sum_{m<N} dim F_mA and is saturated (all Smith exponents 0),
/// i.e. it is the full kernel of T := 1 on the lattice.
bool rees_kernel_check(const Presentation& pres, const ValuationSpec& v, int max_degree);

}  // namespace ncred

#endif  // NCRED_REDUCTION_HPP
