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

/* Finitely presented graded and filtered algebras K<X>/(p_1, ..., p_d).
 *
 * Nothing here rewrites to normal forms. The degree-n piece of the relation
 * ideal is the span of the multiples u*p_i*w of degree n, so every dimension
 * is a word count minus the rank of that span.
 */

#ifndef NCRED_PRESENTATIONS_HPP
#define NCRED_PRESENTATIONS_HPP

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "ncred/freealg.hpp"
#include "ncred/linalg.hpp"

namespace ncred {

enum class Mode { graded, filtered };

std::string to_string(Mode m);

class Presentation {
   public:
    /// Validates the relations: nonzero, over the given alphabet and field,
    /// homogeneous in graded mode, and not unit relations (degree 0, or
    /// degree 1 with a nonzero constant term). Exact duplicates are dropped.
    Presentation(AlphabetPtr alphabet, Field field, std::vector<NcPolynomial> relations, Mode mode);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    Field field() const noexcept { return field_; }
    const std::vector<NcPolynomial>& relations() const noexcept { return relations_; }
    Mode mode() const noexcept { return mode_; }
    std::size_t generator_count() const noexcept { return alphabet_->size(); }

    /// Same relations read as a filtered presentation.
    Presentation as_filtered() const;

    /// Relation lists compared term for term, in order.
    bool operator==(const Presentation& o) const;

   private:
    AlphabetPtr alphabet_;
    Field field_;
    std::vector<NcPolynomial> relations_;
    Mode mode_;
};

struct HilbertTable {
    Field field;
    /// dims[n] for n = 0..N.
    std::vector<std::size_t> dims;

    int max_degree() const noexcept { return static_cast<int>(dims.size()) - 1; }
    bool operator==(const HilbertTable&) const = default;
};

/// Words of weighted degree exactly d, in lexicographic order.
std::vector<Word> words_of_degree(const Alphabet& alphabet, int d);
/// Words of weighted degree <= n, in deglex order.
std::vector<Word> words_up_to_degree(const Alphabet& alphabet, int n);

/// Column index of a word among a fixed list of words.
class WordIndex {
   public:
    explicit WordIndex(std::vector<Word> words);

    const std::vector<Word>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }
    /// Throws StructuralError when the word is not indexed.
    std::size_t at(const std::vector<Letter>& letters) const;
    std::optional<std::size_t> find(const std::vector<Letter>& letters) const;

   private:
    struct Hash {
        std::size_t operator()(const std::vector<Letter>& w) const noexcept;
    };
    std::vector<Word> words_;
    std::unordered_map<std::vector<Letter>, std::size_t, Hash> index_;
};

/// Rows u*p*w with deg u + deg p + deg w == n, where deg p is the top degree
/// of the relation. Columns are taken from `columns`.
std::vector<linalg::RationalRow> relation_multiples(const Presentation& pres, const WordIndex& columns, int n);

/// Graded dimensions dim A_n, n = 0..N. ModeError on filtered input.
HilbertTable hilbert_dims(const Presentation& pres, int max_degree);

/// Filtered dimensions dim F_n A, n = 0..N. ModeError on graded input.
HilbertTable filtered_dims(const Presentation& pres, int max_degree);

/// Graded presentation with the leading parts of the relations.
Presentation leading_ideal_presentation(const Presentation& pres);

struct GrCheck {
    bool ok = true;
    std::optional<int> first_failing_degree;
    HilbertTable graded;    ///< hilbert_dims of the leading-ideal presentation
    HilbertTable filtered;  ///< filtered_dims of the input
};

/// Compares the leading-ideal Hilbert function with the first differences of
/// the filtered dimensions, degree by degree up to N.
GrCheck check_gr_presentation(const Presentation& pres, int max_degree);

/// Rees presentation: generators plus a central degree-1 variable (appended
/// last), relations homogenize(p_i) and T*X_j - X_j*T.
Presentation rees_presentation(const Presentation& pres, const std::string& variable = "T");

/// Applies specialize(., T, value) to the Rees relations and maps them back
/// to the original alphabet; commutators that vanish are dropped.
std::vector<NcPolynomial> specialize_rees(const Presentation& rees, int value);

struct ZeroDivisorWitness {
    NcPolynomial left;
    NcPolynomial right;
    int left_degree;
    int right_degree;
};

/// Homogeneous pairs (f, g), deg f + deg g <= N, with f*g = 0 in the quotient
/// and f, g nonzero there. Every pair of standard basis words is tested, then
/// every one-sided multiplication map by a basis word is checked for a kernel.
/// An empty result certifies the absence of such pairs up to N only.
std::vector<ZeroDivisorWitness> zero_divisor_scan(const Presentation& pres, int max_degree);

/// F_{<=M}A over QQ with coordinates in the standard words (the words that are
/// not leading columns of the relation span). Standard words of degree <= n
/// span F_nA for every n <= M.
class TruncatedQuotient {
   public:
    TruncatedQuotient(const Presentation& pres, int max_degree);

    const WordIndex& words() const noexcept { return words_; }
    /// Word indices of the standard words, ascending.
    const std::vector<std::size_t>& standard_words() const noexcept { return standard_; }
    std::size_t dimension() const noexcept { return standard_.size(); }
    /// Number of standard words of degree <= n.
    std::size_t dimension(int n) const;
    /// Image of a word in standard coordinates (positions into standard_words()).
    linalg::RationalRow coordinates(std::size_t word) const;

   private:
    WordIndex words_;
    linalg::ReducedEchelon<linalg::RationalOps> span_;
    std::vector<std::size_t> standard_;
    std::vector<std::size_t> position_;
};

}  // namespace ncred

#endif  // NCRED_PRESENTATIONS_HPP
