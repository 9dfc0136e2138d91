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

#include "ncred_cli/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <variant>

#include "ncred/error.hpp"

namespace ncred::cli {

ParseError::ParseError(const std::string& what, std::size_t line, std::size_t column)
    : std::runtime_error(line ? std::to_string(line) + ":" + std::to_string(column) + ": " + what : what),
      line_(line),
      column_(column) {}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

namespace {

using Step = std::variant<std::string, std::size_t>;
using Path = std::vector<Step>;

/* Byte offset of the value at `path` in an already validated JSON text. The
 * parser does not keep positions, so this walks the raw text once more.
 * Keys are compared without unescaping, which is enough for our own keys. */
class Locator {
   public:
    explicit Locator(std::string_view text) : t_(text) {}

    std::size_t find(const Path& path) {
        i_ = 0;
        ws();
        for (const auto& step : path) {
            if (i_ >= t_.size()) break;
            if (const auto* key = std::get_if<std::string>(&step)) {
                if (t_[i_] != '{' || !enter_key(*key)) break;
            } else {
                if (t_[i_] != '[' || !enter_index(std::get<std::size_t>(step))) break;
            }
        }
        return i_;
    }

   private:
    void ws() {
        while (i_ < t_.size() && (t_[i_] == ' ' || t_[i_] == '\t' || t_[i_] == '\n' || t_[i_] == '\r')) ++i_;
    }
    std::string_view string_token() {
        const auto start = ++i_;
        while (i_ < t_.size() && t_[i_] != '"') i_ += t_[i_] == '\\' ? 2 : 1;
        auto s = t_.substr(start, i_ - start);
        ++i_;
        return s;
    }
    void skip_value() {
        if (i_ >= t_.size()) return;
        const char c = t_[i_];
        if (c == '"') {
            string_token();
        } else if (c == '{' || c == '[') {
            int depth = 0;
            while (i_ < t_.size()) {
                if (t_[i_] == '"') {
                    string_token();
                    continue;
                }
                if (t_[i_] == '{' || t_[i_] == '[') ++depth;
                if (t_[i_] == '}' || t_[i_] == ']') --depth;
                ++i_;
                if (depth == 0) break;
            }
        } else {
            while (i_ < t_.size() && std::string_view(",]} \t\r\n").find(t_[i_]) == std::string_view::npos) ++i_;
        }
    }
    bool enter_key(const std::string& key) {
        ++i_;
        for (;;) {
            ws();
            if (i_ >= t_.size() || t_[i_] != '"') return false;
            const auto k = string_token();
            ws();
            ++i_;  // ':'
            ws();
            if (k == key) return true;
            skip_value();
            ws();
            if (i_ >= t_.size() || t_[i_] != ',') return false;
            ++i_;
        }
    }
    bool enter_index(std::size_t index) {
        ++i_;
        ws();
        for (std::size_t k = 0;; ++k) {
            if (i_ >= t_.size() || t_[i_] == ']') return false;
            if (k == index) return true;
            skip_value();
            ws();
            if (i_ >= t_.size() || t_[i_] != ',') return false;
            ++i_;
            ws();
        }
    }

    std::string_view t_;
    std::size_t i_ = 0;
};

std::string path_string(const Path& path) {
    std::string out;
    for (const auto& s : path) {
        if (const auto* k = std::get_if<std::string>(&s))
            out += (out.empty() ? "" : ".") + *k;
        else
            out += "[" + std::to_string(std::get<std::size_t>(s)) + "]";
    }
    return out.empty() ? "document" : out;
}

[[noreturn]] void fail(std::string_view text, const Path& path, const std::string& what) {
    const auto [line, col] = line_column(text, Locator(text).find(path));
    throw ParseError(path_string(path) + ": " + what, line, col);
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        const auto offset = e.byte == 0 ? 0 : e.byte - 1;
        const auto [line, col] = line_column(text, offset);
        std::string what = e.what();
        // drop the library's "[json.exception.parse_error.101] " prefix
        if (auto p = what.find("] "); p != std::string::npos) what = what.substr(p + 2);
        throw ParseError(what, line, col);
    }
}

void check_keys(std::string_view text, const Json& obj, const Path& path, std::initializer_list<const char*> allowed) {
    for (const auto& [k, val] : obj.items()) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) {
            auto p = path;
            p.emplace_back(k);
            fail(text, p, "unknown key '" + k + "'");
        }
    }
}

Rational parse_coeff(std::string_view text, const Json& j, const Path& path) {
    if (!j.is_string()) fail(text, path, "coefficient must be a string such as \"-3/2\"");
    try {
        return parse_rational(j.get<std::string>());
    } catch (const Error& e) {
        fail(text, path, "coefficient '" + j.get<std::string>() + "': " + e.what());
    }
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
    const Json doc = parse_json(text);
    if (!doc.is_object()) fail(text, {}, "expected an object");
    check_keys(text, doc, {}, {"generators", "mode", "relations"});
    if (!doc.contains("generators") || !doc["generators"].is_array())
        fail(text, {}, "missing array 'generators'");
    std::vector<std::string> names;
    std::vector<int> degrees;
    const auto& gens = doc["generators"];
    for (std::size_t i = 0; i < gens.size(); ++i) {
        const Path p{"generators", i};
        const auto& g = gens[i];
        if (!g.is_object()) fail(text, p, "generator must be an object");
        check_keys(text, g, p, {"name", "degree"});
        if (!g.contains("name") || !g["name"].is_string() || g["name"].get<std::string>().empty())
            fail(text, p, "generator needs a nonempty string 'name'");
        int degree = 1;
        if (g.contains("degree")) {
            const auto& d = g["degree"];
            if (!d.is_number_integer() || d.get<long long>() < 1 || d.get<long long>() > 1000) {
                auto q = p;
                q.emplace_back("degree");
                fail(text, q, "degree must be a positive integer");
            }
            degree = d.get<int>();
        }
        const auto name = g["name"].get<std::string>();
        for (const auto& n : names)
            if (n == name) fail(text, p, "duplicate generator name '" + name + "'");
        names.push_back(name);
        degrees.push_back(degree);
    }
    const auto alphabet = make_alphabet(names, degrees);

    if (!doc.contains("mode") || !doc["mode"].is_string()) fail(text, {}, "missing string 'mode'");
    const auto mode_name = doc["mode"].get<std::string>();
    Mode mode;
    if (mode_name == "graded")
        mode = Mode::graded;
    else if (mode_name == "filtered")
        mode = Mode::filtered;
    else
        fail(text, {"mode"}, "mode must be \"graded\" or \"filtered\"");

    if (!doc.contains("relations") || !doc["relations"].is_array()) fail(text, {}, "missing array 'relations'");
    const auto field = Field::rationals();
    std::vector<NcPolynomial> relations;
    const auto& rels = doc["relations"];
    for (std::size_t r = 0; r < rels.size(); ++r) {
        const Path rp{"relations", r};
        if (!rels[r].is_array()) fail(text, rp, "relation must be a list of terms");
        NcPolynomial f(alphabet, field);
        for (std::size_t t = 0; t < rels[r].size(); ++t) {
            const Path tp{"relations", r, t};
            const auto& term = rels[r][t];
            if (!term.is_object()) fail(text, tp, "term must be an object");
            check_keys(text, term, tp, {"word", "coeff"});
            if (!term.contains("word") || !term["word"].is_array()) fail(text, tp, "term needs a list 'word'");
            if (!term.contains("coeff")) fail(text, tp, "term needs a 'coeff'");
            std::vector<Letter> letters;
            for (std::size_t k = 0; k < term["word"].size(); ++k) {
                const auto& l = term["word"][k];
                const Path lp{"relations", r, t, std::string("word"), k};
                if (!l.is_string()) fail(text, lp, "letters are generator names");
                const auto letter = alphabet->find(l.get<std::string>());
                if (!letter) fail(text, lp, "unknown generator '" + l.get<std::string>() + "'");
                letters.push_back(*letter);
            }
            auto cp = tp;
            cp.emplace_back("coeff");
            f += NcPolynomial::monomial(alphabet, field, letters, parse_coeff(text, term["coeff"], cp));
        }
        try {
            Presentation(alphabet, field, {f}, mode);
        } catch (const Error& e) {
            fail(text, rp, e.what());
        }
        relations.push_back(std::move(f));
    }
    return Presentation(alphabet, field, std::move(relations), mode);
}

Json presentation_to_json(const Presentation& pres) {
    Json doc;
    const auto& a = *pres.alphabet();
    Json gens = Json::array();
    for (std::size_t i = 0; i < a.size(); ++i)
        gens.push_back({{"name", a.name(static_cast<Letter>(i))}, {"degree", a.degree(static_cast<Letter>(i))}});
    doc["generators"] = gens;
    doc["mode"] = to_string(pres.mode());
    Json rels = Json::array();
    for (const auto& r : pres.relations()) {
        Json terms = Json::array();
        for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
            Json word = Json::array();
            for (auto l : it->first.letters) word.push_back(a.name(l));
            terms.push_back({{"word", word}, {"coeff", to_string(it->second)}});
        }
        rels.push_back(terms);
    }
    doc["relations"] = rels;
    return doc;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

GwaData parse_gwa(std::string_view text) {
    const Json doc = parse_json(text);
    if (!doc.is_object()) fail(text, {}, "expected an object");
    check_keys(text, doc, {}, {"field", "sigma", "a"});
    if (doc.contains("field") && doc["field"] != "QQ") fail(text, {"field"}, "GWA files are read over QQ");
    if (!doc.contains("sigma") || !doc["sigma"].is_object()) fail(text, {}, "missing object 'sigma'");
    const auto& s = doc["sigma"];
    check_keys(text, s, {"sigma"}, {"alpha", "beta"});
    if (!s.contains("alpha") || !s.contains("beta")) fail(text, {"sigma"}, "sigma needs 'alpha' and 'beta'");
    const auto alpha = parse_coeff(text, s["alpha"], {"sigma", std::string("alpha")});
    const auto beta = parse_coeff(text, s["beta"], {"sigma", std::string("beta")});
    if (alpha == 0) fail(text, {"sigma", std::string("alpha")}, "alpha must be nonzero");
    if (!doc.contains("a") || !doc["a"].is_array()) fail(text, {}, "missing array 'a'");
    std::vector<Rational> a;
    for (std::size_t k = 0; k < doc["a"].size(); ++k) a.push_back(parse_coeff(text, doc["a"][k], {"a", k}));
    return GwaData(AffineAuto(alpha, beta), UniPoly(std::move(a), Field::rationals()));
}

Json gwa_to_json(const GwaData& data) {
    Json a = Json::array();
    for (const auto& c : data.a.coefficients()) a.push_back(to_string(c));
    Json doc;
    doc["field"] = data.field().label();
    doc["sigma"] = {{"alpha", to_string(data.sigma.alpha())}, {"beta", to_string(data.sigma.beta())}};
    doc["a"] = a;
    return doc;
}

std::string fnv1a_hex(std::string_view bytes) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace ncred::cli
