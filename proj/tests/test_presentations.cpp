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

#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "ncred/dvr.hpp"
#include "ncred/error.hpp"
#include "ncred/gwa.hpp"
#include "ncred/presentations.hpp"
#include "ncred/reduction.hpp"

using namespace ncred;
using testing::word;

namespace {

const Field QQ = Field::rationals();

Presentation graded(const AlphabetPtr& a, std::vector<NcPolynomial> rels) {
    return Presentation(a, QQ, std::move(rels), Mode::graded);
}

std::vector<std::size_t> iota_plus_one(int n) {
    std::vector<std::size_t> v;
    for (int i = 0; i <= n; ++i) v.push_back(static_cast<std::size_t>(i) + 1);
    return v;
}

/// Random homogeneous relation of degree d in two variables with small coefficients.
NcPolynomial random_homogeneous(std::mt19937_64& rng, const AlphabetPtr& a, int d) {
    NcPolynomial f(a, QQ);
    std::uniform_int_distribution<int> c(-2, 2), bit(0, 1), terms(1, 3);
    const int n = terms(rng);
    for (int t = 0; t < n; ++t) {
        std::vector<Letter> w(static_cast<std::size_t>(d));
        for (auto& l : w) l = static_cast<Letter>(bit(rng));
        f += NcPolynomial::monomial(a, QQ, w, c(rng));
    }
    return f;
}

/// Is f*g in the span of the degree-n relation multiples? Decided by the dense oracle.
bool product_vanishes(const Presentation& p, const NcPolynomial& fg, int n) {
    WordIndex cols(words_of_degree(*p.alphabet(), n));
    oracle::Matrix m;
    for (const auto& r : relation_multiples(p, cols, n)) {
        std::vector<oracle::Q> d(cols.size(), 0);
        for (const auto& [c, x] : r) d[c] = x;
        m.push_back(d);
    }
    const auto p_char = p.field().characteristic();
    const auto before = oracle::dense_rank(m, p_char);
    std::vector<oracle::Q> d(cols.size(), 0);
    for (const auto& [w, c] : fg.terms()) d[cols.at(w.letters)] = c;
    m.push_back(d);
    return oracle::dense_rank(m, p_char) == before;
}

}  // namespace

TEST_CASE("presentation validation") {
    auto a = testing::xy();
    CHECK_THROWS_AS(graded(a, {NcPolynomial(a, QQ)}), DomainError);
    CHECK_THROWS_AS(graded(a, {word(a, "xy") - word(a, "x")}), DomainError);
    CHECK_THROWS_AS(graded(a, {word(a, "", 3)}), DomainError);
    const auto x = make_alphabet({"x"});
    CHECK_THROWS_AS(Presentation(x, QQ, {word(x, "x") - word(x, "")}, Mode::filtered), DomainError);
    CHECK_THROWS_AS(graded(a, {word(a, "xy", 1, Field::prime(3))}), StructuralError);
    CHECK_THROWS_AS(graded(a, {word(make_alphabet({"x", "z"}), "xz")}), StructuralError);
    // duplicates are dropped
    const auto p = graded(a, {word(a, "xy"), word(a, "xy"), word(a, "yx")});
    CHECK(p.relations().size() == 2);
    // degree-1 relations without constant term are fine
    CHECK_NOTHROW(Presentation(a, QQ, {word(a, "x") - word(a, "y")}, Mode::filtered));
}

TEST_CASE("hilbert_dims examples") {
    auto a = testing::xy();
    const auto free2 = graded(a, {});
    CHECK(hilbert_dims(free2, 6).dims == std::vector<std::size_t>{1, 2, 4, 8, 16, 32, 64});
    CHECK(hilbert_dims(testing::quantum_plane(2), 4).dims == iota_plus_one(4));
    const auto p = graded(a, {word(a, "xy") - word(a, "yx"), word(a, "xx")});
    CHECK(hilbert_dims(p, 2).dims[2] == 2);
    CHECK_THROWS_AS(hilbert_dims(testing::weyl(), 3), ModeError);
    CHECK_THROWS_AS(hilbert_dims(free2, -1), DomainError);
    // weights: x of degree 1, y of degree 2 -> compositions into 1s and 2s
    const auto w = make_alphabet({"x", "y"}, {1, 2});
    CHECK(hilbert_dims(graded(w, {}), 6).dims == std::vector<std::size_t>{1, 1, 2, 3, 5, 8, 13});
    // no generators: the base field
    const auto none = make_alphabet({});
    CHECK(hilbert_dims(graded(none, {}), 3).dims == std::vector<std::size_t>{1, 0, 0, 0});
    CHECK(hilbert_dims(graded(a, {}), 2).field == QQ);
}

TEST_CASE("filtered_dims examples") {
    CHECK(filtered_dims(testing::weyl(), 3).dims == std::vector<std::size_t>{1, 3, 6, 10});
    auto a = testing::xy();
    const auto free2 = Presentation(a, QQ, {}, Mode::filtered);
    CHECK(filtered_dims(free2, 5).dims == std::vector<std::size_t>{1, 3, 7, 15, 31, 63});
    CHECK_THROWS_AS(filtered_dims(graded(a, {}), 3), ModeError);
}

TEST_CASE("leading ideal and gr check") {
    auto a = testing::xy();
    const auto lead = leading_ideal_presentation(testing::weyl());
    CHECK(lead.mode() == Mode::graded);
    REQUIRE(lead.relations().size() == 1);
    CHECK(lead.relations()[0] == word(a, "xy") - word(a, "yx"));
    const auto hom = testing::quantum_plane(3, Mode::filtered);
    CHECK(leading_ideal_presentation(hom).relations() == hom.relations());
    const auto p = Presentation(a, QQ, {word(a, "xy") - word(a, "yx") - word(a, "x")}, Mode::filtered);
    CHECK(leading_ideal_presentation(p).relations()[0] == word(a, "xy") - word(a, "yx"));

    const auto chk = check_gr_presentation(testing::weyl(), 6);
    CHECK(chk.ok);
    CHECK(chk.graded.dims == iota_plus_one(6));
    CHECK(check_gr_presentation(testing::quantum_plane(2).as_filtered(), 6).ok);
    CHECK_THROWS_AS(check_gr_presentation(testing::quantum_plane(2), 3), ModeError);

    // two relations whose leading parts need not generate the leading ideal
    const auto q = Presentation(a, QQ,
                                {word(a, "xy") - word(a, "yx") - word(a, ""), word(a, "xx") - word(a, "yy") - word(a, "x")},
                                Mode::filtered);
    const auto r = check_gr_presentation(q, 5);
    const auto og = oracle::graded_dims(2, testing::to_oracle(leading_ideal_presentation(q)), 5);
    const auto of = oracle::filtered_dims(2, testing::to_oracle(q), 5);
    bool ok = true;
    std::optional<int> first;
    for (int n = 0; n <= 5; ++n) {
        const auto diff = of[n] - (n ? of[n - 1] : 0);
        if (diff != og[n] && ok) {
            ok = false;
            first = n;
        }
    }
    CHECK(r.ok == ok);
    CHECK(r.first_failing_degree == first);
    CHECK(r.filtered.dims == of);
}

TEST_CASE("Rees presentations") {
    const auto rees = rees_presentation(testing::weyl());
    const auto& al = rees.alphabet();
    CHECK(rees.mode() == Mode::graded);
    CHECK(al->names() == std::vector<std::string>{"x", "y", "T"});
    REQUIRE(rees.relations().size() == 3);
    CHECK(rees.relations()[0] == word(al, "xy") - word(al, "yx") - word(al, "TT"));
    CHECK(rees.relations()[1] == word(al, "Tx") - word(al, "xT"));
    CHECK(rees.relations()[2] == word(al, "Ty") - word(al, "yT"));
    auto a = testing::xy();
    const auto free_rees = rees_presentation(Presentation(a, QQ, {}, Mode::filtered));
    CHECK(free_rees.relations().size() == 2);
    const auto graded_rees = rees_presentation(testing::quantum_plane(3));
    CHECK(graded_rees.relations().size() == 3);
    CHECK_THROWS(rees_presentation(testing::weyl(), "x"));

    CHECK(specialize_rees(rees, 1) == testing::weyl().relations());
    CHECK(specialize_rees(rees, 0) == leading_ideal_presentation(testing::weyl()).relations());
}

TEST_CASE("property: Rees consistency for the corpus") {
    for (const auto& p : {testing::weyl(), testing::quantum_plane(3, Mode::filtered), testing::quantum_plane(2, Mode::filtered)}) {
        const auto rees = rees_presentation(p);
        CHECK(hilbert_dims(rees, 6).dims == filtered_dims(p, 6).dims);
        CHECK(specialize_rees(rees, 1) == p.relations());
        CHECK(specialize_rees(rees, 0) == leading_ideal_presentation(p).relations());
        const auto f = filtered_dims(p, 6).dims;
        for (std::size_t n = 1; n < f.size(); ++n) CHECK(f[n] >= f[n - 1]);
    }
}

TEST_CASE("property: dimensions agree with the dense oracle on random presentations") {
    std::mt19937_64 rng(2024);
    auto a = testing::xy();
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<NcPolynomial> rels;
        const int count = 1 + static_cast<int>(rng() % 2);
        for (int k = 0; k < count; ++k) {
            auto f = random_homogeneous(rng, a, 2 + static_cast<int>(rng() % 2));
            if (!f.is_zero()) rels.push_back(f);
        }
        const auto p = graded(a, rels);
        const auto ours = hilbert_dims(p, 5).dims;
        CHECK(ours == oracle::graded_dims(2, testing::to_oracle(p), 5));
        // adding a relation never increases dimensions
        auto extra = random_homogeneous(rng, a, 2);
        if (!extra.is_zero()) {
            rels.push_back(extra);
            const auto more = hilbert_dims(graded(a, rels), 5).dims;
            for (std::size_t n = 0; n < more.size(); ++n) CHECK(more[n] <= ours[n]);
        }
        // over GF(3), after content normalization
        const ValuationSpec v(3);
        const auto red = reduce_presentation(p, v);
        std::vector<oracle::Relation> orels;
        for (const auto& f : p.relations()) orels.push_back(testing::to_oracle(normalize_content(f, v)));
        CHECK(hilbert_dims(red, 5).dims == oracle::graded_dims(2, orels, 5, 3));
        // filtered: add a lower-degree tail
        std::vector<NcPolynomial> frels;
        for (const auto& f : p.relations()) frels.push_back(f + word(a, "x", static_cast<long>(rng() % 3)));
        const auto fp = Presentation(a, QQ, frels, Mode::filtered);
        CHECK(filtered_dims(fp, 4).dims == oracle::filtered_dims(2, testing::to_oracle(fp), 4));
    }
}

TEST_CASE("zero-divisor scan") {
    auto a = testing::xy();
    CHECK(zero_divisor_scan(testing::quantum_plane(2), 4).empty());
    CHECK(zero_divisor_scan(graded(a, {}), 4).empty());
    CHECK_THROWS_AS(zero_divisor_scan(testing::weyl(), 3), ModeError);
    CHECK_THROWS_AS(zero_divisor_scan(testing::quantum_plane(2), 0), DomainError);

    const auto red = reduce_presentation(testing::quantum_plane(2), ValuationSpec(2));
    const auto ws = zero_divisor_scan(red, 4);
    REQUIRE_FALSE(ws.empty());
    const auto f2 = Field::prime(2);
    CHECK(ws[0].left == word(a, "x", 1, f2));
    CHECK(ws[0].right == word(a, "y", 1, f2));
    CHECK(ws[0].left_degree == 1);
    CHECK(ws[0].right_degree == 1);
    for (const auto& w : ws) {
        CHECK(product_vanishes(red, w.left * w.right, w.left_degree + w.right_degree));
        CHECK(w.left_degree + w.right_degree <= 4);
    }

    // x^2 = 0: x is a zero divisor
    const auto nil = graded(a, {word(a, "xx")});
    const auto nw = zero_divisor_scan(nil, 2);
    REQUIRE_FALSE(nw.empty());
    CHECK(nw[0].left == word(a, "x"));
    CHECK(nw[0].right == word(a, "x"));

    // whatever is reported for x^2 = y^2 in the commutative case really vanishes
    const auto comm = graded(a, {word(a, "xy") - word(a, "yx"), word(a, "xx") - word(a, "yy")});
    const auto cw = zero_divisor_scan(comm, 3);
    for (const auto& w : cw) CHECK(product_vanishes(comm, w.left * w.right, w.left_degree + w.right_degree));
}

TEST_CASE("zero-divisor scan finds (Y, X) when a reduces to 0") {
    const GwaData data(AffineAuto(1, 1), UniPoly({0, 2}, QQ));  // a = 2h
    const ValuationSpec v(2);
    CHECK(bad_prime_detect(data, v).nondomain);
    const auto reduced = gwa_reduce(data, v);
    CHECK(reduced.a.is_zero());
    const auto lead = leading_ideal_presentation(gwa_to_presentation(reduced));
    const auto ws = zero_divisor_scan(lead, 2);
    const auto& al = lead.alphabet();
    const auto f2 = Field::prime(2);
    bool found = false;
    for (const auto& w : ws)
        found = found || (w.left == word(al, "Y", 1, f2) && w.right == word(al, "X", 1, f2));
    CHECK(found);
    CHECK(gwa_multiply(GwaElement::Y(f2), GwaElement::X(f2), reduced).is_zero());
}

TEST_CASE("truncated quotient coordinates") {
    const auto w = testing::weyl();
    const TruncatedQuotient tq(w, 4);
    CHECK(tq.dimension() == 15);
    for (int n = 0; n <= 4; ++n) CHECK(tq.dimension(n) == filtered_dims(w, 4).dims[static_cast<std::size_t>(n)]);
    for (std::size_t k = 0; k < tq.standard_words().size(); ++k) {
        const auto c = tq.coordinates(tq.standard_words()[k]);
        REQUIRE(c.size() == 1);
        CHECK(c[0].first == k);
        CHECK(c[0].second == 1);
    }
    CHECK_THROWS(TruncatedQuotient(reduce_presentation(testing::quantum_plane(3), ValuationSpec(5)), 2));
}
