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

#include "ncred/freealg.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ncred/error.hpp"

namespace ncred {

Alphabet::Alphabet(std::vector<std::string> names, std::vector<int> degrees)
    : names_(std::move(names)), degrees_(std::move(degrees)) {
    if (names_.size() != degrees_.size()) throw StructuralError("generator names and degrees differ in length");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw StructuralError("empty generator name");
        if (!seen.insert(names_[i]).second) throw StructuralError("duplicate generator name '" + names_[i] + "'");
        if (degrees_[i] < 1) throw StructuralError("generator '" + names_[i] + "' must have positive degree");
    }
}

Alphabet::Alphabet(std::vector<std::string> names)
    : Alphabet(names, std::vector<int>(names.size(), 1)) {}

std::optional<Letter> Alphabet::find(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<Letter>(it - names_.begin());
}

Alphabet Alphabet::with_generator(std::string name, int degree) const {
    auto names = names_;
    auto degrees = degrees_;
    names.push_back(std::move(name));
    degrees.push_back(degree);
    return Alphabet(std::move(names), std::move(degrees));
}

AlphabetPtr make_alphabet(std::vector<std::string> names, std::vector<int> degrees) {
    return std::make_shared<const Alphabet>(std::move(names), std::move(degrees));
}

AlphabetPtr make_alphabet(std::vector<std::string> names) {
    return std::make_shared<const Alphabet>(std::move(names));
}

Word::Word(std::vector<Letter> ls, const Alphabet& alphabet) : letters(std::move(ls)) {
    for (auto l : letters) {
        if (l >= alphabet.size()) throw StructuralError("letter index out of range");
        degree += alphabet.degree(l);
    }
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
    if (auto c = a.degree <=> b.degree; c != 0) return c;
    return std::lexicographical_compare_three_way(a.letters.begin(), a.letters.end(), b.letters.begin(),
                                                  b.letters.end());
}

Word operator*(const Word& a, const Word& b) {
    Word w;
    w.letters.reserve(a.letters.size() + b.letters.size());
    w.letters = a.letters;
    w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
    w.degree = a.degree + b.degree;
    return w;
}

std::string to_string(const Word& w, const Alphabet& alphabet) {
    if (w.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < w.letters.size(); ++i) {
        if (i) s += '*';
        s += alphabet.name(w.letters[i]);
    }
    return s;
}

NcPolynomial::NcPolynomial(AlphabetPtr alphabet, Field field) : alphabet_(std::move(alphabet)), field_(field) {
    if (!alphabet_) throw StructuralError("polynomial without alphabet");
}

NcPolynomial NcPolynomial::constant(AlphabetPtr alphabet, Field field, const Rational& c) {
    NcPolynomial f(std::move(alphabet), field);
    f.add_term(Word{}, c);
    return f;
}

NcPolynomial NcPolynomial::generator(AlphabetPtr alphabet, Field field, Letter i) {
    return monomial(std::move(alphabet), field, {i});
}

NcPolynomial NcPolynomial::monomial(AlphabetPtr alphabet, Field field, std::vector<Letter> letters,
                                    const Rational& c) {
    NcPolynomial f(std::move(alphabet), field);
    f.add_term(Word(std::move(letters), *f.alphabet_), c);
    return f;
}

NcPolynomial NcPolynomial::from_terms(AlphabetPtr alphabet, Field field,
                                      const std::vector<std::pair<std::vector<Letter>, Rational>>& terms) {
    NcPolynomial f(std::move(alphabet), field);
    for (const auto& [letters, c] : terms) f.add_term(Word(letters, *f.alphabet_), c);
    return f;
}

int NcPolynomial::degree() const {
    if (terms_.empty()) throw DomainError("degree of the zero polynomial");
    return terms_.rbegin()->first.degree;
}

int NcPolynomial::low_degree() const {
    if (terms_.empty()) throw DomainError("degree of the zero polynomial");
    return terms_.begin()->first.degree;
}

bool NcPolynomial::is_homogeneous() const { return terms_.empty() || degree() == low_degree(); }

Rational NcPolynomial::coefficient(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

void NcPolynomial::add_term(const Word& w, const Rational& c) {
    for (auto l : w.letters)
        if (l >= alphabet_->size()) throw StructuralError("word uses a letter outside the alphabet");
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        auto v = field_.canonical(c);
        if (v != 0) terms_.emplace(w, std::move(v));
        return;
    }
    it->second = field_.canonical(it->second + c);
    if (it->second == 0) terms_.erase(it);
}

void NcPolynomial::check_compatible(const NcPolynomial& o) const {
    if (field_ != o.field_) throw StructuralError("polynomials over different fields");
    if (alphabet_ != o.alphabet_ && !(*alphabet_ == *o.alphabet_))
        throw StructuralError("polynomials over different generator sets");
}

NcPolynomial& NcPolynomial::operator+=(const NcPolynomial& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, c);
    return *this;
}

NcPolynomial& NcPolynomial::operator-=(const NcPolynomial& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_) add_term(w, -c);
    return *this;
}

NcPolynomial& NcPolynomial::operator*=(const Rational& c) {
    const auto s = field_.canonical(c);
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_) v = field_.canonical(v * s);
    return *this;
}

NcPolynomial operator*(const NcPolynomial& f, const NcPolynomial& g) { return multiply(f, g); }

bool operator==(const NcPolynomial& f, const NcPolynomial& g) {
    if (f.field_ != g.field_) return false;
    if (f.alphabet_ != g.alphabet_ && !(*f.alphabet_ == *g.alphabet_)) return false;
    return f.terms_ == g.terms_;
}

std::string NcPolynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [w, c] = *it;
        Rational mag = c;
        bool negative = c < 0;
        if (negative) mag = -c;
        if (first) {
            if (negative) os << '-';
        } else {
            os << (negative ? " - " : " + ");
        }
        first = false;
        if (w.empty()) {
            os << ncred::to_string(mag);
        } else {
            if (mag != 1) os << ncred::to_string(mag) << '*';
            os << ncred::to_string(w, *alphabet_);
        }
    }
    return os.str();
}

NcPolynomial multiply(const NcPolynomial& f, const NcPolynomial& g) {
    if (f.field() != g.field()) throw StructuralError("polynomials over different fields");
    if (f.alphabet() != g.alphabet() && !(*f.alphabet() == *g.alphabet()))
        throw StructuralError("polynomials over different generator sets");
    NcPolynomial h(f.alphabet(), f.field());
    for (const auto& [u, a] : f.terms())
        for (const auto& [w, b] : g.terms()) h.add_term(u * w, a * b);
    return h;
}

NcPolynomial homogeneous_part(const NcPolynomial& f, int n) {
    NcPolynomial h(f.alphabet(), f.field());
    for (const auto& [w, c] : f.terms())
        if (w.degree == n) h.add_term(w, c);
    return h;
}

NcPolynomial leading_part(const NcPolynomial& f) {
    if (f.is_zero()) throw DomainError("leading part of the zero polynomial");
    return homogeneous_part(f, f.degree());
}

NcPolynomial homogenize(const NcPolynomial& f, Letter t) {
    if (f.is_zero()) throw DomainError("homogenization of the zero polynomial");
    const auto& alphabet = *f.alphabet();
    if (t >= alphabet.size()) throw StructuralError("homogenizing generator out of range");
    if (alphabet.degree(t) != 1) throw DomainError("homogenizing generator must have degree 1");
    const int d = f.degree();
    NcPolynomial h(f.alphabet(), f.field());
    for (const auto& [w, c] : f.terms()) {
        Word padded = w;
        padded.letters.insert(padded.letters.end(), static_cast<std::size_t>(d - w.degree), t);
        padded.degree = d;
        h.add_term(padded, c);
    }
    return h;
}

NcPolynomial specialize(const NcPolynomial& f, Letter t, int value) {
    if (value != 0 && value != 1) throw DomainError("specialization value must be 0 or 1");
    const auto& alphabet = *f.alphabet();
    if (t >= alphabet.size()) throw StructuralError("specialized generator out of range");
    NcPolynomial h(f.alphabet(), f.field());
    for (const auto& [w, c] : f.terms()) {
        const bool has_t = std::find(w.letters.begin(), w.letters.end(), t) != w.letters.end();
        if (!has_t) {
            h.add_term(w, c);
        } else if (value == 1) {
            std::vector<Letter> kept;
            for (auto l : w.letters)
                if (l != t) kept.push_back(l);
            h.add_term(Word(std::move(kept), alphabet), c);
        }
    }
    return h;
}

NcPolynomial embed(const NcPolynomial& f, AlphabetPtr target) {
    const auto& src = *f.alphabet();
    for (std::size_t i = 0; i < std::min(src.size(), target->size()); ++i) {
        if (target->name(static_cast<Letter>(i)) != src.name(static_cast<Letter>(i)) ||
            target->degree(static_cast<Letter>(i)) != src.degree(static_cast<Letter>(i)))
            throw StructuralError("target alphabet disagrees with the source alphabet");
    }
    NcPolynomial h(std::move(target), f.field());
    for (const auto& [w, c] : f.terms()) {
        for (auto l : w.letters)
            if (l >= h.alphabet()->size()) throw StructuralError("word uses a letter outside the target alphabet");
        h.add_term(w, c);
    }
    return h;
}

NcPolynomial change_field(const NcPolynomial& f, Field target) {
    if (!f.field().is_rational() && f.field() != target)
        throw StructuralError("only QQ coefficients can be moved to another field");
    NcPolynomial h(f.alphabet(), target);
    for (const auto& [w, c] : f.terms()) h.add_term(w, c);
    return h;
}

}  // namespace ncred
