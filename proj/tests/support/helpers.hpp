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

/* Shared test fixtures: the presentation corpus, random generators, and
 * conversions between library values and oracle values. */

#ifndef NCRED_TESTS_HELPERS_HPP
#define NCRED_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <vector>

#include "ncred/gwa.hpp"
#include "ncred/presentations.hpp"
#include "oracles.hpp"

namespace testing {

using namespace ncred;

inline AlphabetPtr xy() { return make_alphabet({"x", "y"}); }

inline NcPolynomial word(const AlphabetPtr& a, const std::string& letters, const Rational& c = 1,
                         Field f = Field::rationals()) {
    std::vector<Letter> ls;
    for (char ch : letters) ls.push_back(*a->find(std::string(1, ch)));
    return NcPolynomial::monomial(a, f, ls, c);
}

/// xy - q yx, graded.
inline Presentation quantum_plane(const Rational& q, Mode mode = Mode::graded) {
    auto a = xy();
    return Presentation(a, Field::rationals(), {word(a, "xy") - word(a, "yx", q)}, mode);
}

/// xy - yx - 1, filtered.
inline Presentation weyl() {
    auto a = xy();
    return Presentation(a, Field::rationals(), {word(a, "xy") - word(a, "yx") - word(a, "")}, Mode::filtered);
}

/// Oracle form of a relation over an alphabet of weight-1 letters.
inline oracle::Relation to_oracle(const NcPolynomial& f) {
    oracle::Relation r;
    for (const auto& [w, c] : f.terms()) {
        std::string s;
        for (auto l : w.letters) s += static_cast<char>('a' + l);
        r.emplace_back(s, c);
    }
    return r;
}

inline std::vector<oracle::Relation> to_oracle(const Presentation& p) {
    std::vector<oracle::Relation> rs;
    for (const auto& f : p.relations()) rs.push_back(to_oracle(f));
    return rs;
}

inline Rational random_rational(std::mt19937_64& rng, int bound = 5) {
    std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
    Rational q(num(rng), den(rng));
    q.canonicalize();
    return q;
}

/// Sparse polynomial with up to `terms` terms of degree <= max_degree.
inline NcPolynomial random_poly(std::mt19937_64& rng, const AlphabetPtr& a, int terms, int max_degree) {
    NcPolynomial f(a, Field::rationals());
    std::uniform_int_distribution<int> len(0, max_degree), letter(0, static_cast<int>(a->size()) - 1),
        count(1, terms);
    const int n = count(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<Letter> ls(static_cast<std::size_t>(len(rng)));
        for (auto& l : ls) l = static_cast<Letter>(letter(rng));
        f += NcPolynomial::monomial(a, Field::rationals(), ls, random_rational(rng));
    }
    return f;
}

inline UniPoly random_unipoly(std::mt19937_64& rng, int max_degree, int bound = 5) {
    std::uniform_int_distribution<int> deg(0, max_degree), c(-bound, bound);
    std::vector<Rational> cs(static_cast<std::size_t>(deg(rng)) + 1);
    for (auto& x : cs) x = c(rng);
    return UniPoly(cs, Field::rationals());
}

/// Components in [-3, 3], coefficients of degree <= 3.
inline GwaElement random_gwa(std::mt19937_64& rng) {
    GwaElement e;
    std::uniform_int_distribution<int> idx(-3, 3), count(1, 3);
    const int n = count(rng);
    for (int k = 0; k < n; ++k) e.add(idx(rng), random_unipoly(rng, 3));
    return e;
}

inline oracle::GwaRewriter rewriter_for(const GwaData& d) {
    return oracle::GwaRewriter(d.sigma.alpha(), d.sigma.beta(), d.a.coefficients());
}

/// d_i(h) v_i as strings h^j X^i / h^j Y^-i.
inline oracle::GwaRewriter::Element to_strings(const GwaElement& e) {
    oracle::GwaRewriter::Element out;
    for (const auto& [i, d] : e.components()) {
        const std::string v(static_cast<std::size_t>(i < 0 ? -i : i), i > 0 ? 'X' : 'Y');
        for (std::size_t j = 0; j < d.coefficients().size(); ++j)
            if (d.coefficients()[j] != 0) out[std::string(j, 'h') + v] += d.coefficients()[j];
    }
    return out;
}

inline std::map<int, std::map<int, oracle::Q>> components_of(const GwaElement& e) {
    std::map<int, std::map<int, oracle::Q>> out;
    for (const auto& [i, d] : e.components())
        for (std::size_t j = 0; j < d.coefficients().size(); ++j)
            if (d.coefficients()[j] != 0) out[i][static_cast<int>(j)] = d.coefficients()[j];
    return out;
}

/// Catalog entries with concrete parameters, as used throughout the suite.
struct CatalogCase {
    std::string name;
    std::map<std::string, Rational> params;
};

inline std::vector<CatalogCase> catalog_cases() {
    return {{"weyl", {}},
            {"quantum_weyl", {{"q", 3}}},
            {"quantum_plane", {{"q", 2}}},
            {"usl2", {}},
            {"uq_sl2", {{"q", 3}}},
            {"quantum_heisenberg", {{"q", 2}}}};
}

}  // namespace testing

#endif  // NCRED_TESTS_HELPERS_HPP
