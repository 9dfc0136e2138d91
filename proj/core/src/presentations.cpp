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

#include "ncred/presentations.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <variant>

#include "ncred/error.hpp"

namespace ncred {

std::string to_string(Mode m) { return m == Mode::graded ? "graded" : "filtered"; }

Presentation::Presentation(AlphabetPtr alphabet, Field field, std::vector<NcPolynomial> relations, Mode mode)
    : alphabet_(std::move(alphabet)), field_(field), mode_(mode) {
    if (!alphabet_) throw StructuralError("presentation without alphabet");
    for (auto& r : relations) {
        if (r.field() != field_) throw StructuralError("relation over " + r.field().label() + " in a " +
                                                       field_.label() + " presentation");
        if (r.alphabet() != alphabet_ && !(*r.alphabet() == *alphabet_))
            throw StructuralError("relation over a different generator set");
        if (r.is_zero()) throw DomainError("zero relation");
        if (mode_ == Mode::graded && !r.is_homogeneous())
            throw DomainError("relation " + r.to_string() + " is not homogeneous in a graded presentation");
        const bool has_constant = r.terms().begin()->first.empty();
        if (r.degree() == 0 || (r.degree() == 1 && has_constant))
            throw DomainError("unit relation " + r.to_string() + " collapses the algebra");
        if (std::find(relations_.begin(), relations_.end(), r) != relations_.end()) continue;
        relations_.push_back(std::move(r));
    }
}

Presentation Presentation::as_filtered() const { return Presentation(alphabet_, field_, relations_, Mode::filtered); }

bool Presentation::operator==(const Presentation& o) const {
    return mode_ == o.mode_ && field_ == o.field_ && *alphabet_ == *o.alphabet_ && relations_ == o.relations_;
}

namespace {

void enumerate_words(const Alphabet& alphabet, int remaining, std::vector<Letter>& prefix, std::vector<Word>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix, alphabet);
        return;
    }
    for (Letter l = 0; l < alphabet.size(); ++l) {
        const int d = alphabet.degree(l);
        if (d > remaining) continue;
        prefix.push_back(l);
        enumerate_words(alphabet, remaining - d, prefix, out);
        prefix.pop_back();
    }
}

class WordCache {
   public:
    explicit WordCache(const Alphabet& a) : alphabet_(a) {}
    const std::vector<Word>& of_degree(int d) {
        if (d < 0) return empty_;
        while (static_cast<int>(cache_.size()) <= d) cache_.push_back(words_of_degree(alphabet_, static_cast<int>(cache_.size())));
        return cache_[static_cast<std::size_t>(d)];
    }

   private:
    const Alphabet& alphabet_;
    std::deque<std::vector<Word>> cache_;  // deque: references stay valid as it grows
    std::vector<Word> empty_;
};

/// Rank over the presentation's field, fed one row at a time.
class FieldRank {
   public:
    FieldRank(Field field, std::size_t cols) {
        if (field.is_rational())
            impl_.emplace<linalg::IntegerRankEchelon>(cols);
        else
            impl_.emplace<linalg::ModRankEchelon>(cols, field.characteristic());
    }

    void add(const linalg::RationalRow& row) {
        if (auto* q = std::get_if<linalg::IntegerRankEchelon>(&impl_)) {
            q->add(row);
            return;
        }
        auto& m = std::get<linalg::ModRankEchelon>(impl_);
        linalg::ModRow r;
        r.reserve(row.size());
        for (const auto& [c, v] : row) r.emplace_back(c, v.get_num().get_ui());
        m.add(std::move(r));
    }

    std::size_t rank() const {
        if (auto* q = std::get_if<linalg::IntegerRankEchelon>(&impl_)) return q->rank();
        return std::get<linalg::ModRankEchelon>(impl_).rank();
    }

   private:
    std::variant<std::monostate, linalg::IntegerRankEchelon, linalg::ModRankEchelon> impl_;
};

}  // namespace

std::vector<Word> words_of_degree(const Alphabet& alphabet, int d) {
    std::vector<Word> out;
    if (d < 0) return out;
    std::vector<Letter> prefix;
    enumerate_words(alphabet, d, prefix, out);
    return out;
}

std::vector<Word> words_up_to_degree(const Alphabet& alphabet, int n) {
    std::vector<Word> out;
    for (int d = 0; d <= n; ++d) {
        auto ws = words_of_degree(alphabet, d);
        out.insert(out.end(), std::make_move_iterator(ws.begin()), std::make_move_iterator(ws.end()));
    }
    return out;
}

std::size_t WordIndex::Hash::operator()(const std::vector<Letter>& w) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto l : w) {
        h ^= l + 1;
        h *= 1099511628211ULL;
    }
    return h;
}

WordIndex::WordIndex(std::vector<Word> words) : words_(std::move(words)) {
    index_.reserve(words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i].letters, i);
}

std::optional<std::size_t> WordIndex::find(const std::vector<Letter>& letters) const {
    auto it = index_.find(letters);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t WordIndex::at(const std::vector<Letter>& letters) const {
    auto it = index_.find(letters);
    if (it == index_.end()) throw StructuralError("word outside the column range");
    return it->second;
}

namespace {

std::vector<linalg::RationalRow> relation_multiples_cached(const Presentation& pres, const WordIndex& columns, int n,
                                                           WordCache& cache) {
    std::vector<linalg::RationalRow> rows;
    std::vector<Letter> buf;
    for (const auto& rel : pres.relations()) {
        const int d = rel.degree();
        if (d > n) continue;
        for (int a = 0; a <= n - d; ++a) {
            const auto& lefts = cache.of_degree(a);
            const auto& rights = cache.of_degree(n - d - a);
            for (const auto& u : lefts) {
                for (const auto& w : rights) {
                    std::vector<std::pair<std::size_t, Rational>> entries;
                    entries.reserve(rel.size());
                    for (const auto& [t, c] : rel.terms()) {
                        buf.clear();
                        buf.insert(buf.end(), u.letters.begin(), u.letters.end());
                        buf.insert(buf.end(), t.letters.begin(), t.letters.end());
                        buf.insert(buf.end(), w.letters.begin(), w.letters.end());
                        entries.emplace_back(columns.at(buf), c);
                    }
                    auto row = linalg::canonical_row(std::move(entries));
                    if (!row.empty()) rows.push_back(std::move(row));
                }
            }
        }
    }
    return rows;
}

void check_degree(int n) {
    if (n < 0) throw DomainError("truncation degree must be nonnegative");
}

}  // namespace

std::vector<linalg::RationalRow> relation_multiples(const Presentation& pres, const WordIndex& columns, int n) {
    WordCache cache(*pres.alphabet());
    return relation_multiples_cached(pres, columns, n, cache);
}

HilbertTable hilbert_dims(const Presentation& pres, int max_degree) {
    if (pres.mode() != Mode::graded) throw ModeError("hilbert_dims needs a graded presentation");
    check_degree(max_degree);
    WordCache cache(*pres.alphabet());
    HilbertTable table{pres.field(), {}};
    for (int n = 0; n <= max_degree; ++n) {
        WordIndex index(cache.of_degree(n));
        FieldRank rank(pres.field(), index.size());
        for (const auto& row : relation_multiples_cached(pres, index, n, cache)) rank.add(row);
        table.dims.push_back(index.size() - rank.rank());
    }
    return table;
}

HilbertTable filtered_dims(const Presentation& pres, int max_degree) {
    if (pres.mode() != Mode::filtered) throw ModeError("filtered_dims needs a filtered presentation");
    check_degree(max_degree);
    WordCache cache(*pres.alphabet());
    WordIndex index(words_up_to_degree(*pres.alphabet(), max_degree));
    FieldRank rank(pres.field(), index.size());
    HilbertTable table{pres.field(), {}};
    std::size_t words = 0;
    for (int n = 0; n <= max_degree; ++n) {
        words += cache.of_degree(n).size();
        for (const auto& row : relation_multiples_cached(pres, index, n, cache)) rank.add(row);
        table.dims.push_back(words - rank.rank());
    }
    return table;
}

Presentation leading_ideal_presentation(const Presentation& pres) {
    std::vector<NcPolynomial> leading;
    leading.reserve(pres.relations().size());
    for (const auto& r : pres.relations()) leading.push_back(leading_part(r));
    return Presentation(pres.alphabet(), pres.field(), std::move(leading), Mode::graded);
}

GrCheck check_gr_presentation(const Presentation& pres, int max_degree) {
    if (pres.mode() != Mode::filtered) throw ModeError("check_gr_presentation needs a filtered presentation");
    GrCheck check;
    check.graded = hilbert_dims(leading_ideal_presentation(pres), max_degree);
    check.filtered = filtered_dims(pres, max_degree);
    for (int n = 0; n <= max_degree; ++n) {
        const auto prev = n == 0 ? std::size_t{0} : check.filtered.dims[static_cast<std::size_t>(n - 1)];
        const auto diff = check.filtered.dims[static_cast<std::size_t>(n)] - prev;
        if (diff != check.graded.dims[static_cast<std::size_t>(n)]) {
            check.ok = false;
            check.first_failing_degree = n;
            break;
        }
    }
    return check;
}

Presentation rees_presentation(const Presentation& pres, const std::string& variable) {
    const auto& base = *pres.alphabet();
    auto alphabet = std::make_shared<const Alphabet>(base.with_generator(variable, 1));
    const auto t = static_cast<Letter>(base.size());
    std::vector<NcPolynomial> relations;
    for (const auto& r : pres.relations()) relations.push_back(homogenize(embed(r, alphabet), t));
    for (Letter x = 0; x < base.size(); ++x) {
        auto tx = NcPolynomial::monomial(alphabet, pres.field(), {t, x});
        tx -= NcPolynomial::monomial(alphabet, pres.field(), {x, t});
        relations.push_back(std::move(tx));
    }
    return Presentation(alphabet, pres.field(), std::move(relations), Mode::graded);
}

std::vector<NcPolynomial> specialize_rees(const Presentation& rees, int value) {
    const auto& a = *rees.alphabet();
    if (a.size() == 0) throw StructuralError("Rees presentation without a homogenizing variable");
    const auto t = static_cast<Letter>(a.size() - 1);
    std::vector<std::string> names(a.names().begin(), a.names().end() - 1);
    std::vector<int> degrees(a.degrees().begin(), a.degrees().end() - 1);
    auto base = make_alphabet(std::move(names), std::move(degrees));
    std::vector<NcPolynomial> out;
    for (const auto& r : rees.relations()) {
        auto s = specialize(r, t, value);
        if (s.is_zero()) continue;
        out.push_back(embed(s, base));
    }
    return out;
}

namespace {

template <class Ops>
typename Ops::value_type to_value(const Rational& q);

template <>
Rational to_value<linalg::RationalOps>(const Rational& q) {
    return q;
}

template <>
std::uint64_t to_value<linalg::ModOps>(const Rational& q) {
    return q.get_num().get_ui();
}

template <class Ops>
Rational to_rational(const typename Ops::value_type& v) {
    if constexpr (std::is_same_v<typename Ops::value_type, Rational>)
        return v;
    else
        return Rational(static_cast<unsigned long>(v));
}

/// Degree-d piece of a graded quotient.
template <class Ops>
struct GradedPiece {
    WordIndex words;
    linalg::ReducedEchelon<Ops> span;
    std::vector<std::size_t> standard;

    GradedPiece(const Presentation& pres, int d, WordCache& cache, Ops ops)
        : words(cache.of_degree(d)), span(words.size(), ops) {
        for (const auto& row : relation_multiples_cached(pres, words, d, cache)) {
            typename linalg::ReducedEchelon<Ops>::Row r;
            for (const auto& [c, v] : row) r.emplace_back(c, to_value<Ops>(v));
            span.add(r);
        }
        for (std::size_t i = 0; i < words.size(); ++i)
            if (!span.is_pivot(i)) standard.push_back(i);
    }
};

template <class Ops>
std::vector<ZeroDivisorWitness> scan(const Presentation& pres, int max_degree, Ops ops) {
    using Row = typename linalg::ReducedEchelon<Ops>::Row;
    WordCache cache(*pres.alphabet());
    std::vector<GradedPiece<Ops>> pieces;
    for (int d = 0; d <= max_degree; ++d) pieces.emplace_back(pres, d, cache, ops);

    auto to_poly = [&](int d, const Row& coords) {
        NcPolynomial f(pres.alphabet(), pres.field());
        const auto& piece = pieces[static_cast<std::size_t>(d)];
        for (const auto& [k, v] : coords) f.add_term(piece.words.words()[piece.standard[k]], to_rational<Ops>(v));
        return f;
    };
    auto product_nf = [&](int i, std::size_t wi, int j, std::size_t wj) {
        const auto& a = pieces[static_cast<std::size_t>(i)].words.words()[wi].letters;
        const auto& b = pieces[static_cast<std::size_t>(j)].words.words()[wj].letters;
        std::vector<Letter> ab(a);
        ab.insert(ab.end(), b.begin(), b.end());
        const auto& target = pieces[static_cast<std::size_t>(i + j)];
        return target.span.normal_form(Row{{target.words.at(ab), typename Ops::value_type(1)}});
    };
    // Kernel of the linear map whose k-th column is images[k].
    auto kernel = [&](const std::vector<Row>& images, std::size_t target_cols) {
        std::map<std::size_t, Row> by_target;
        for (std::size_t k = 0; k < images.size(); ++k)
            for (const auto& [t, v] : images[k]) by_target[t].emplace_back(k, v);
        linalg::ReducedEchelon<Ops> m(images.size(), ops);
        (void)target_cols;
        for (auto& [t, row] : by_target) m.add(row);
        return m.nullspace();
    };

    std::vector<ZeroDivisorWitness> found;
    for (int total = 2; total <= max_degree; ++total) {
        for (int i = 1; i < total; ++i) {
            const int j = total - i;
            const auto& left = pieces[static_cast<std::size_t>(i)];
            const auto& right = pieces[static_cast<std::size_t>(j)];
            const auto& target = pieces[static_cast<std::size_t>(total)];
            if (left.standard.empty() || right.standard.empty()) continue;
            // product table on standard words
            std::vector<std::vector<Row>> table(left.standard.size(), std::vector<Row>(right.standard.size()));
            for (std::size_t a = 0; a < left.standard.size(); ++a)
                for (std::size_t b = 0; b < right.standard.size(); ++b)
                    table[a][b] = product_nf(i, left.standard[a], j, right.standard[b]);
            std::vector<bool> left_hit(left.standard.size(), false), right_hit(right.standard.size(), false);
            for (std::size_t a = 0; a < left.standard.size(); ++a) {
                for (std::size_t b = 0; b < right.standard.size(); ++b) {
                    if (!table[a][b].empty()) continue;
                    left_hit[a] = right_hit[b] = true;
                    found.push_back({to_poly(i, Row{{a, typename Ops::value_type(1)}}),
                                     to_poly(j, Row{{b, typename Ops::value_type(1)}}), i, j});
                }
            }
            // slices f -> b*f and f -> f*c for basis words b, c
            for (std::size_t a = 0; a < left.standard.size(); ++a) {
                if (left_hit[a]) continue;
                auto ker = kernel(table[a], target.standard.size());
                if (ker.empty()) continue;
                found.push_back({to_poly(i, Row{{a, typename Ops::value_type(1)}}), to_poly(j, ker.front()), i, j});
            }
            for (std::size_t b = 0; b < right.standard.size(); ++b) {
                if (right_hit[b]) continue;
                std::vector<Row> column(left.standard.size());
                for (std::size_t a = 0; a < left.standard.size(); ++a) column[a] = table[a][b];
                auto ker = kernel(column, target.standard.size());
                if (ker.empty()) continue;
                found.push_back({to_poly(i, ker.front()), to_poly(j, Row{{b, typename Ops::value_type(1)}}), i, j});
            }
        }
    }
    return found;
}

}  // namespace

std::vector<ZeroDivisorWitness> zero_divisor_scan(const Presentation& pres, int max_degree) {
    if (pres.mode() != Mode::graded) throw ModeError("zero_divisor_scan needs a graded presentation");
    if (max_degree < 1) throw DomainError("zero-divisor scan needs N >= 1");
    if (pres.field().is_rational()) return scan(pres, max_degree, linalg::RationalOps{});
    return scan(pres, max_degree, linalg::ModOps{pres.field().characteristic()});
}

TruncatedQuotient::TruncatedQuotient(const Presentation& pres, int max_degree)
    : words_(words_up_to_degree(*pres.alphabet(), max_degree)), span_(words_.size()) {
    if (!pres.field().is_rational()) throw StructuralError("truncated lattices are built over QQ");
    check_degree(max_degree);
    WordCache cache(*pres.alphabet());
    for (int n = 0; n <= max_degree; ++n)
        for (const auto& row : relation_multiples_cached(pres, words_, n, cache)) span_.add(row);
    position_.assign(words_.size(), std::numeric_limits<std::size_t>::max());
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if (span_.is_pivot(i)) continue;
        position_[i] = standard_.size();
        standard_.push_back(i);
    }
}

std::size_t TruncatedQuotient::dimension(int n) const {
    return static_cast<std::size_t>(std::count_if(standard_.begin(), standard_.end(), [&](std::size_t i) {
        return words_.words()[i].degree <= n;
    }));
}

linalg::RationalRow TruncatedQuotient::coordinates(std::size_t word) const {
    if (position_.at(word) != std::numeric_limits<std::size_t>::max()) return {{position_[word], Rational(1)}};
    linalg::RationalRow out;
    for (auto& [c, v] : span_.normal_form({{word, Rational(1)}})) out.emplace_back(position_.at(c), v);
    return out;
}

}  // namespace ncred
