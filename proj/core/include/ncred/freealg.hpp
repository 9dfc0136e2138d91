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

/* Free associative algebras over QQ or GF(p).
 *
 * A polynomial is a sparse map from words to nonzero coefficients. Words are
 * ordered degree-lexicographically (weighted degree first, then letters),
 * which fixes the column layout of every matrix built from them.
 */

#ifndef NCRED_FREEALG_HPP
#define NCRED_FREEALG_HPP

#include <cstdint>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ncred/scalar.hpp"

namespace ncred {

using Letter = std::uint32_t;

/// Named generators with positive integer weights.
class Alphabet {
   public:
    Alphabet(std::vector<std::string> names, std::vector<int> degrees);
    /// All generators of weight 1.
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept { return names_.size(); }
    const std::string& name(Letter i) const { return names_.at(i); }
    int degree(Letter i) const { return degrees_.at(i); }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    std::optional<Letter> find(const std::string& name) const;

    /// Copy with one more generator appended (its index is size()).
    Alphabet with_generator(std::string name, int degree) const;

    bool operator==(const Alphabet&) const = default;

   private:
    std::vector<std::string> names_;
    std::vector<int> degrees_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> degrees);
AlphabetPtr make_alphabet(std::vector<std::string> names);

/// Finite sequence of letters together with its weighted degree.
struct Word {
    std::vector<Letter> letters;
    int degree = 0;

    Word() = default;
    Word(std::vector<Letter> ls, const Alphabet& alphabet);

    bool empty() const noexcept { return letters.empty(); }

    /// Degree first, then lexicographic on letters.
    friend std::strong_ordering operator<=>(const Word& a, const Word& b);
    friend bool operator==(const Word& a, const Word& b) { return a.letters == b.letters; }
};

Word operator*(const Word& a, const Word& b);

std::string to_string(const Word& w, const Alphabet& alphabet);

class NcPolynomial {
   public:
    using TermMap = std::map<Word, Rational>;

    NcPolynomial(AlphabetPtr alphabet, Field field);

    static NcPolynomial constant(AlphabetPtr alphabet, Field field, const Rational& c);
    static NcPolynomial generator(AlphabetPtr alphabet, Field field, Letter i);
    static NcPolynomial monomial(AlphabetPtr alphabet, Field field, std::vector<Letter> letters,
                                 const Rational& c = 1);
    /// Builds a polynomial from (letters, coefficient) pairs; like terms are combined.
    static NcPolynomial from_terms(AlphabetPtr alphabet, Field field,
                                   const std::vector<std::pair<std::vector<Letter>, Rational>>& terms);

    const AlphabetPtr& alphabet() const noexcept { return alphabet_; }
    Field field() const noexcept { return field_; }
    const TermMap& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Highest weighted degree of a term; DomainError on the zero polynomial.
    int degree() const;
    /// Lowest weighted degree of a term; DomainError on the zero polynomial.
    int low_degree() const;
    bool is_homogeneous() const;
    Rational coefficient(const Word& w) const;

    /// Adds c to the coefficient of w (canonicalised in the field, zeros erased).
    void add_term(const Word& w, const Rational& c);

    NcPolynomial& operator+=(const NcPolynomial& o);
    NcPolynomial& operator-=(const NcPolynomial& o);
    NcPolynomial& operator*=(const Rational& c);

    friend NcPolynomial operator+(NcPolynomial a, const NcPolynomial& b) { return a += b; }
    friend NcPolynomial operator-(NcPolynomial a, const NcPolynomial& b) { return a -= b; }
    friend NcPolynomial operator-(NcPolynomial a) { return a *= -1; }
    friend NcPolynomial operator*(NcPolynomial a, const Rational& c) { return a *= c; }
    friend NcPolynomial operator*(const Rational& c, NcPolynomial a) { return a *= c; }
    friend NcPolynomial operator*(const NcPolynomial& f, const NcPolynomial& g);

    /// Equal term maps over the same alphabet and field.
    friend bool operator==(const NcPolynomial& f, const NcPolynomial& g);

    /// Readable form, highest word first: "x*y - 3*y*x + 1".
    std::string to_string() const;

   private:
    void check_compatible(const NcPolynomial& o) const;

    AlphabetPtr alphabet_;
    Field field_;
    TermMap terms_;
};

/// Bilinear extension of word concatenation.
NcPolynomial multiply(const NcPolynomial& f, const NcPolynomial& g);

/// Terms of weighted degree exactly n.
NcPolynomial homogeneous_part(const NcPolynomial& f, int n);

/// Nonzero homogeneous part of highest degree. DomainError when f = 0.
NcPolynomial leading_part(const NcPolynomial& f);

/// Pads each degree-m part on the right with T^(deg f - m). T must be a
/// generator of weight 1 in f's alphabet.
NcPolynomial homogenize(const NcPolynomial& f, Letter t);

/// value 1 deletes T from every word; value 0 deletes every term containing T.
NcPolynomial specialize(const NcPolynomial& f, Letter t, int value);

/// Same polynomial viewed over another alphabet that agrees with f's alphabet
/// on their common prefix. Shrinking is allowed when the dropped generators
/// do not occur in f.
NcPolynomial embed(const NcPolynomial& f, AlphabetPtr target);

/// Termwise canonical image over another field (QQ -> GF(p) requires
/// p-integral coefficients).
NcPolynomial change_field(const NcPolynomial& f, Field target);

}  // namespace ncred

#endif  // NCRED_FREEALG_HPP
