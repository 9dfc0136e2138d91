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

#include "ncred_cli/commands.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "ncred/error.hpp"
#include "ncred/gwa.hpp"
#include "ncred/reduction.hpp"
#include "ncred_cli/expr.hpp"
#include "ncred_cli/io.hpp"

namespace ncred::cli {

namespace {

/// Bad flags or values that CLI11 itself does not catch.
class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

constexpr std::size_t kWitnessesShown = 16;

struct Options {
    std::string format = "table";
    bool unsafe = false;
    std::string input;
    int max_degree = -1;
    std::vector<std::uint64_t> primes;
    std::string name;
    std::vector<std::string> params;
    std::string expression;
    int degree_h = 2;
};

bool json_out(const Options& o) { return o.format == "json"; }

void check_degree(const Options& o) {
    if (o.max_degree < 0) throw UsageError("--max-degree must be given and nonnegative");
    if (!o.unsafe && o.max_degree > kMaxDegree)
        throw UsageError("limit exceeded: --max-degree " + std::to_string(o.max_degree) + " > " +
                         std::to_string(kMaxDegree) + " (use --unsafe-limits to override)");
}

void check_generators(const Options& o, std::size_t count) {
    if (!o.unsafe && count > kMaxGenerators)
        throw UsageError("limit exceeded: " + std::to_string(count) + " generators > " +
                         std::to_string(kMaxGenerators) + " (use --unsafe-limits to override)");
}

std::vector<ValuationSpec> valuations(const Options& o, bool required) {
    if (required && o.primes.empty()) throw UsageError("at least one --prime is required");
    std::vector<ValuationSpec> out;
    for (auto p : o.primes) {
        if (!is_prime(p) || p >= (1ULL << 31)) throw UsageError("--prime " + std::to_string(p) + " is not a prime below 2^31");
        out.emplace_back(p);
    }
    return out;
}

std::string join(const std::vector<std::size_t>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

std::string join(const std::vector<long>& v) {
    std::string s;
    for (auto x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

Json table_json(const HilbertTable& t) { return {{"field", t.field.label()}, {"values", t.dims}}; }

Json optional_json(const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); }

Json metadata(const std::string& hash, const Options& o) {
    return {{"tool_version", kToolVersion}, {"input_hash", hash}, {"primes", o.primes}, {"max_degree", o.max_degree}};
}

struct Loaded {
    Presentation pres;
    std::string hash;
};

Loaded load(const Options& o) {
    if (o.input.empty()) throw UsageError("--input is required");
    const auto text = read_file(o.input);
    try {
        auto pres = parse_presentation(text);
        check_generators(o, pres.generator_count());
        return {std::move(pres), fnv1a_hex(text)};
    } catch (const ParseError& e) {
        throw ParseError(o.input + ":" + e.what(), 0, 0);
    }
}

HilbertTable dims_of(const Presentation& p, int n) {
    return p.mode() == Mode::graded ? hilbert_dims(p, n) : filtered_dims(p, n);
}

// ---- dims ------------------------------------------------------------------

int cmd_dims(const Options& o, std::ostream& out) {
    check_degree(o);
    const auto [pres, hash] = load(o);
    std::vector<HilbertTable> tables{dims_of(pres, o.max_degree)};
    for (const auto& v : valuations(o, false)) tables.push_back(dims_of(reduce_presentation(pres, v), o.max_degree));
    if (json_out(o)) {
        Json doc;
        doc["metadata"] = metadata(hash, o);
        doc["mode"] = to_string(pres.mode());
        Json ts = Json::array();
        for (const auto& t : tables) ts.push_back(table_json(t));
        doc["tables"] = ts;
        out << dump(doc);
        return kExitOk;
    }
    out << to_string(pres.mode()) << " dimensions\n";
    out << std::setw(4) << "n";
    for (const auto& t : tables) out << std::setw(12) << t.field.label();
    out << "\n";
    for (int n = 0; n <= o.max_degree; ++n) {
        out << std::setw(4) << n;
        for (const auto& t : tables) out << std::setw(12) << t.dims[static_cast<std::size_t>(n)];
        out << "\n";
    }
    for (const auto& t : tables) out << t.field.label() << ": " << join(t.dims) << "\n";
    return kExitOk;
}

// ---- reduce ----------------------------------------------------------------

Json witnesses_json(const std::vector<ZeroDivisorWitness>& ws) {
    Json arr = Json::array();
    for (std::size_t i = 0; i < ws.size() && i < kWitnessesShown; ++i)
        arr.push_back({{"left", ws[i].left.to_string()},
                       {"right", ws[i].right.to_string()},
                       {"left_degree", ws[i].left_degree},
                       {"right_degree", ws[i].right_degree}});
    return arr;
}

Json graded_json(const ReductionReport& r) {
    Json j;
    j["dims_K"] = table_json(r.dims_K);
    j["dims_kv"] = table_json(r.dims_kv);
    j["defect"] = r.defect;
    j["reduces_well"] = r.reduces_well;
    j["domain_up_to_N"] = r.domain_up_to_N;
    j["first_bad_degree"] = optional_json(r.first_bad_degree);
    j["witness_count"] = r.witnesses.size();
    j["witnesses"] = witnesses_json(r.witnesses);
    return j;
}

void print_witnesses(std::ostream& out, const std::vector<ZeroDivisorWitness>& ws) {
    for (std::size_t i = 0; i < ws.size() && i < kWitnessesShown; ++i)
        out << "  zero divisor: (" << ws[i].left.to_string() << ") * (" << ws[i].right.to_string()
            << ") = 0 at bidegree (" << ws[i].left_degree << ", " << ws[i].right_degree << ")\n";
    if (ws.size() > kWitnessesShown) out << "  ... " << ws.size() - kWitnessesShown << " more\n";
}

void print_dims_rows(std::ostream& out, const HilbertTable& k, const HilbertTable& kv, const std::vector<long>& defect) {
    out << std::setw(4) << "n" << std::setw(12) << k.field.label() << std::setw(12) << kv.field.label() << std::setw(8)
        << "defect" << "\n";
    for (std::size_t n = 0; n < k.dims.size(); ++n)
        out << std::setw(4) << n << std::setw(12) << k.dims[n] << std::setw(12) << kv.dims[n] << std::setw(8)
            << defect[n] << "\n";
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

std::string degree_text(const std::optional<int>& d) { return d ? std::to_string(*d) : "-"; }

int cmd_reduce(const Options& o, std::ostream& out) {
    check_degree(o);
    const auto [pres, hash] = load(o);
    const auto vs = valuations(o, true);
    const int N = o.max_degree;
    bool all_good = true;
    Json reports = Json::array();
    std::ostringstream table;
    for (const auto& v : vs) {
        Json j;
        j["prime"] = v.prime();
        j["mode"] = to_string(pres.mode());
        j["max_degree"] = N;
        Json warnings = Json::array();
        if (pres.mode() == Mode::graded) {
            const auto r = good_reduction_report(pres, v, N);
            std::vector<std::size_t> sat;
            for (int n = 0; n <= N; ++n) sat.push_back(saturation_defect(pres, v, n));
            j.update(graded_json(r));
            j["saturation_defect"] = sat;
            if (!r.domain_up_to_N) warnings.push_back("reduction has zero divisors up to degree " + std::to_string(N));
            all_good = all_good && r.reduces_well;
            table << "prime " << v.prime() << " (graded), N = " << N << "\n";
            print_dims_rows(table, r.dims_K, r.dims_kv, r.defect);
            table << "reduces well: " << yes_no(r.reduces_well) << "\n"
                  << "first bad degree: " << degree_text(r.first_bad_degree) << "\n"
                  << "domain up to N: " << yes_no(r.domain_up_to_N) << "\n";
            print_witnesses(table, r.witnesses);
        } else {
            const auto r = lift_report(pres, v, N);
            j["leading_ideal"] = graded_json(r.graded);
            j["gr_check"] = {{"ok", r.gr_check.ok}, {"first_failing_degree", optional_json(r.gr_check.first_failing_degree)}};
            j["filtered_K"] = table_json(r.filtered_K);
            j["filtered_kv"] = table_json(r.filtered_kv);
            j["defect"] = r.filtered_defect;
            j["reduces_well"] = r.reduces_well;
            j["domain_up_to_N"] = r.graded.domain_up_to_N;
            j["first_bad_degree"] = optional_json(r.first_bad_degree);
            j["lift_holds"] = r.lift_holds;
            if (!r.graded.domain_up_to_N)
                warnings.push_back("reduced leading ideal has zero divisors up to degree " + std::to_string(N));
            if (!r.gr_check.ok) warnings.push_back("leading parts do not present the associated graded algebra");
            all_good = all_good && r.reduces_well;
            table << "prime " << v.prime() << " (filtered), N = " << N << "\n";
            print_dims_rows(table, r.filtered_K, r.filtered_kv, r.filtered_defect);
            table << "leading ideal: graded defect " << join(r.graded.defect) << ", gr check "
                  << (r.gr_check.ok ? "OK" : "FAILED") << "\n"
                  << "reduces well: " << yes_no(r.reduces_well) << "\n"
                  << "first bad degree: " << degree_text(r.first_bad_degree) << "\n"
                  << "lift holds: " << yes_no(r.lift_holds) << "\n"
                  << "leading ideal domain up to N: " << yes_no(r.graded.domain_up_to_N) << "\n";
            print_witnesses(table, r.graded.witnesses);
        }
        for (const auto& w : warnings) table << "warning: " << w.get<std::string>() << "\n";
        j["warnings"] = warnings;
        reports.push_back(j);
        table << "\n";
    }
    if (json_out(o)) {
        Json doc;
        doc["metadata"] = metadata(hash, o);
        doc["reports"] = reports;
        out << dump(doc);
    } else {
        out << table.str();
    }
    return all_good ? kExitOk : kExitDefect;
}

// ---- rees ------------------------------------------------------------------

std::vector<std::string> strings(const std::vector<NcPolynomial>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

int cmd_rees(const Options& o, std::ostream& out) {
    check_degree(o);
    const auto [pres, hash] = load(o);
    if (pres.mode() != Mode::filtered) throw ModeError("rees needs a filtered presentation");
    const auto rees = rees_presentation(pres);
    const auto at_one = specialize_rees(rees, 1);
    const auto at_zero = specialize_rees(rees, 0);
    const bool one_ok = at_one == pres.relations();
    const bool zero_ok = at_zero == leading_ideal_presentation(pres).relations();
    const auto rd = hilbert_dims(rees, o.max_degree);
    const auto fd = filtered_dims(pres, o.max_degree);
    bool dims_ok = rd.dims == fd.dims;
    if (json_out(o)) {
        Json doc;
        doc["metadata"] = metadata(hash, o);
        doc["rees"] = presentation_to_json(rees);
        doc["rees_relations"] = strings(rees.relations());
        doc["specialize_T_1"] = {{"relations", strings(at_one)}, {"matches_input", one_ok}};
        doc["specialize_T_0"] = {{"relations", strings(at_zero)}, {"matches_leading_ideal", zero_ok}};
        Json rows = Json::array();
        for (std::size_t n = 0; n < rd.dims.size(); ++n)
            rows.push_back({{"n", n}, {"rees", rd.dims[n]}, {"filtered", fd.dims[n]}, {"ok", rd.dims[n] == fd.dims[n]}});
        doc["consistency"] = rows;
        out << dump(doc);
    } else {
        out << "Rees relations:\n";
        for (const auto& s : strings(rees.relations())) out << "  " << s << "\n";
        out << "T := 1 (" << (one_ok ? "matches input" : "DIFFERS from input") << "):\n";
        for (const auto& s : strings(at_one)) out << "  " << s << "\n";
        out << "T := 0 (" << (zero_ok ? "matches leading ideal" : "DIFFERS from leading ideal") << "):\n";
        for (const auto& s : strings(at_zero)) out << "  " << s << "\n";
        out << std::setw(4) << "n" << std::setw(12) << "rees" << std::setw(12) << "filtered" << "\n";
        for (std::size_t n = 0; n < rd.dims.size(); ++n)
            out << std::setw(4) << n << std::setw(12) << rd.dims[n] << std::setw(12) << fd.dims[n] << "  "
                << (rd.dims[n] == fd.dims[n] ? "OK" : "MISMATCH") << "\n";
    }
    return dims_ok && one_ok && zero_ok ? kExitOk : kExitDefect;
}

// ---- gwa -------------------------------------------------------------------

struct CatalogEntry {
    const char* name;
    const char* params;
    const char* sigma;
    const char* a;
};

constexpr CatalogEntry kCatalog[] = {
    {"weyl", "", "h + 1", "h"},
    {"quantum_weyl", "q", "q^-1*(h - 1)", "h"},
    {"quantum_plane", "q", "q*h", "h"},
    {"usl2", "c (default 0)", "h - 2", "c/2 - h/2 - h^2/4"},
    {"uq_sl2", "q, c (default 0)", "q^-2*h", "c + h/(q^-2 - 1)"},
    {"quantum_heisenberg", "q", "q*h + 1", "h"},
};

std::map<std::string, Rational> parse_params(const Options& o) {
    std::map<std::string, Rational> params;
    for (const auto& p : o.params) {
        const auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw UsageError("--param expects key=value, got '" + p + "'");
        try {
            params[p.substr(0, eq)] = parse_rational(p.substr(eq + 1));
        } catch (const Error& e) {
            throw UsageError("--param " + p + ": " + e.what());
        }
    }
    return params;
}

struct LoadedGwa {
    GwaData data;
    std::string hash;
};

LoadedGwa load_gwa(const Options& o) {
    if (!o.input.empty()) {
        if (!o.name.empty()) throw UsageError("give either --name or --input, not both");
        const auto text = read_file(o.input);
        try {
            return {parse_gwa(text), fnv1a_hex(text)};
        } catch (const ParseError& e) {
            throw ParseError(o.input + ":" + e.what(), 0, 0);
        }
    }
    if (o.name.empty()) throw UsageError("--name or --input is required");
    std::string key = o.name;
    for (const auto& p : o.params) key += ";" + p;
    try {
        return {gwa_catalog(o.name, parse_params(o)), fnv1a_hex(key)};
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
}

std::string sigma_text(const AffineAuto& s) {
    return UniPoly({s.beta(), s.alpha()}, s.field()).to_string();
}

int cmd_gwa_catalog(const Options& o, std::ostream& out) {
    if (!o.name.empty() || !o.input.empty()) {
        const auto [data, hash] = load_gwa(o);
        if (json_out(o)) {
            Json doc;
            doc["name"] = o.name;
            doc["data"] = gwa_to_json(data);
            doc["commutator"] = gwa_commutator_check(data).to_string();
            out << dump(doc);
        } else {
            out << "sigma(h) = " << sigma_text(data.sigma) << "\n"
                << "a = " << data.a.to_string() << "\n"
                << "XY - YX = " << gwa_commutator_check(data).to_string() << "\n";
        }
        return kExitOk;
    }
    if (json_out(o)) {
        Json arr = Json::array();
        for (const auto& e : kCatalog) arr.push_back({{"name", e.name}, {"params", e.params}, {"sigma", e.sigma}, {"a", e.a}});
        out << dump(arr);
    } else {
        out << std::left << std::setw(20) << "name" << std::setw(18) << "params" << std::setw(16) << "sigma(h)"
            << "a\n";
        for (const auto& e : kCatalog)
            out << std::setw(20) << e.name << std::setw(18) << (*e.params ? e.params : "-") << std::setw(16) << e.sigma
                << e.a << "\n";
        out << std::right;
    }
    return kExitOk;
}

int cmd_gwa_mult(const Options& o, std::ostream& out) {
    const auto [data, hash] = load_gwa(o);
    const auto value = evaluate_gwa_expression(o.expression, data);
    if (json_out(o)) {
        Json comps = Json::object();
        for (const auto& [i, d] : value.components()) comps[std::to_string(i)] = d.to_string();
        out << dump({{"expression", o.expression}, {"normal_form", value.to_string()}, {"components", comps}});
    } else {
        out << value.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_gwa_reduce(const Options& o, std::ostream& out, std::ostream& err) {
    const auto [data, hash] = load_gwa(o);
    const auto vs = valuations(o, true);
    if (vs.size() != 1) throw UsageError("gwa reduce takes exactly one --prime");
    const auto& v = vs.front();
    const auto verdict = bad_prime_detect(data, v);
    Json doc;
    doc["prime"] = v.prime();
    doc["good"] = verdict.good;
    doc["nondomain"] = verdict.nondomain;
    if (!verdict.good) {
        const auto& c = *verdict.culprit;
        doc["coefficient"] = {{"name", c.name}, {"value", to_string(c.value)}, {"valuation", c.valuation}, {"reason", c.reason}};
        if (json_out(o)) out << dump(doc);
        err << "error: " << verdict.message() << "\n";
        return kExitDefect;
    }
    const auto reduced = gwa_reduce(data, v);
    doc["reduced"] = gwa_to_json(reduced);
    if (json_out(o)) {
        out << dump(doc);
    } else {
        out << "field: " << reduced.field().label() << "\n"
            << "sigma(h) = " << sigma_text(reduced.sigma) << "\n"
            << "a = " << reduced.a.to_string() << "\n";
        if (verdict.nondomain) out << "warning: a reduces to 0; the reduction is not a domain\n";
    }
    return kExitOk;
}

int cmd_gwa_dims(const Options& o, std::ostream& out) {
    check_degree(o);
    if (o.degree_h < 1) throw UsageError("--degree-h must be positive");
    const auto [data, hash] = load_gwa(o);
    const auto t = gwa_dims(data, o.max_degree, o.degree_h);
    if (json_out(o)) {
        out << dump({{"degree_of_h", o.degree_h}, {"dims", table_json(t)}});
    } else {
        out << t.field.label() << ": " << join(t.dims) << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"ncred: reduction of noncommutative algebras at primes"};
    app.name("ncred");
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "table"}));
        c->add_flag("--unsafe-limits", o.unsafe, "Lift the generator and degree envelope");
    };
    auto* dims = app.add_subcommand("dims", "Graded or filtered dimensions");
    auto* reduce = app.add_subcommand("reduce", "Reduction report at one or more primes");
    auto* rees = app.add_subcommand("rees", "Rees presentation and its specializations");
    for (auto* c : {dims, reduce, rees}) {
        c->add_option("--input", o.input, "Presentation JSON file")->required();
        c->add_option("--max-degree", o.max_degree, "Largest degree N")->required();
        add_common(c);
    }
    dims->add_option("--prime", o.primes, "Also show the reduction at p (repeatable)");
    reduce->add_option("--prime", o.primes, "Prime p (repeatable)")->required();

    auto* gwa = app.add_subcommand("gwa", "Generalized Weyl algebras");
    gwa->require_subcommand(1);
    auto* catalog = gwa->add_subcommand("catalog", "List catalog entries or show one");
    auto* mult = gwa->add_subcommand("mult", "Normal form of an expression in X, Y, h");
    auto* gred = gwa->add_subcommand("reduce", "Reduce at a prime or report why it is bad");
    auto* gdims = gwa->add_subcommand("dims", "Filtered dimensions from the normal form");
    for (auto* c : {catalog, mult, gred, gdims}) {
        c->add_option("--name", o.name, "Catalog entry");
        c->add_option("--param", o.params, "Catalog parameter key=value (repeatable)");
        c->add_option("--input", o.input, "GWA JSON file");
        add_common(c);
    }
    mult->add_option("expression", o.expression, "Expression, e.g. \"Y*X\"")->required();
    gred->add_option("--prime", o.primes, "Prime p")->required();
    gdims->add_option("--max-degree", o.max_degree, "Largest degree N")->required();
    gdims->add_option("--degree-h", o.degree_h, "Degree of h (default 2)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::CallForVersion&) {
        out << kToolVersion << "\n";
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (dims->parsed()) return cmd_dims(o, out);
        if (reduce->parsed()) return cmd_reduce(o, out);
        if (rees->parsed()) return cmd_rees(o, out);
        if (catalog->parsed()) return cmd_gwa_catalog(o, out);
        if (mult->parsed()) return cmd_gwa_mult(o, out);
        if (gred->parsed()) return cmd_gwa_reduce(o, out, err);
        if (gdims->parsed()) return cmd_gwa_dims(o, out);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const BadReductionError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDefect;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    err << "error: no command\n";
    return kExitUsage;
}

}  // namespace ncred::cli
