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

#include "ncred/gwa.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "ncred/error.hpp"

namespace ncred {

// ---- UniPoly ---------------------------------------------------------------

UniPoly::UniPoly(std::vector<Rational> coefficients, Field field) : field_(field), coeffs_(std::move(coefficients)) {
    for (auto& c : coeffs_) c = field_.canonical(c);
    trim();
}

UniPoly UniPoly::constant(const Rational& c, Field field) { return UniPoly({c}, field); }

UniPoly UniPoly::variable(Field field) { return UniPoly({0, 1}, field); }

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

void UniPoly::check_field(const UniPoly& o) const {
    if (field_ != o.field_) throw StructuralError("polynomials over different fields");
}

UniPoly UniPoly::compose_affine(const Rational& alpha, const Rational& beta) const {
    // Horner in alpha*h + beta
    UniPoly out(field_);
    const UniPoly lin({beta, alpha}, field_);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) out = out * lin + UniPoly::constant(*it, field_);
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    check_field(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] = field_.canonical(coeffs_[k] + o.coeffs_[k]);
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) { return *this += o * Rational(-1); }

UniPoly& UniPoly::operator*=(const Rational& c) {
    for (auto& x : coeffs_) x = field_.canonical(x * c);
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    a.check_field(b);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.field_);
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return UniPoly(std::move(c), a.field_);
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        Rational c = coeffs_[k];
        if (c == 0) continue;
        if (field_.is_rational() && c < 0) {
            out += out.empty() ? "-" : " - ";
            c = -c;
        } else if (!out.empty()) {
            out += " + ";
        }
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mono.empty())
            out += ncred::to_string(c);
        else if (c == 1)
            out += mono;
        else
            out += ncred::to_string(c) + "*" + mono;
    }
    return out;
}

// ---- AffineAuto ------------------------------------------------------------

AffineAuto::AffineAuto(const Rational& alpha, const Rational& beta, Field field)
    : alpha_(field.canonical(alpha)), beta_(field.canonical(beta)), field_(field) {
    if (alpha_ == 0) throw DomainError("sigma(h) = alpha*h + beta needs alpha != 0");
}

AffineAuto AffineAuto::power(long k) const {
    Rational a = alpha_, b = beta_;
    if (k < 0) {
        // sigma^-1(h) = (h - beta)/alpha
        a = field_.inverse(alpha_);
        b = field_.canonical(-beta_ * a);
        k = -k;
    }
    Rational pa = 1, pb = 0;
    for (long i = 0; i < k; ++i) {
        // (sigma o s)(h) = s(h) composed: a*(pa*h + pb) + b
        pb = field_.canonical(a * pb + b);
        pa = field_.canonical(a * pa);
    }
    return AffineAuto(pa, pb, field_);
}

GwaData::GwaData(AffineAuto s, UniPoly a_poly) : sigma(std::move(s)), a(std::move(a_poly)) {
    if (sigma.field() != a.field()) throw StructuralError("sigma and a over different fields");
}

UniPoly sigma_apply(const AffineAuto& s, const UniPoly& f, long k) {
    if (s.field() != f.field()) throw StructuralError("sigma and polynomial over different fields");
    if (k == 0) return f;
    const auto sk = s.power(k);
    return f.compose_affine(sk.alpha(), sk.beta());
}

// ---- GwaElement ------------------------------------------------------------

GwaElement::GwaElement(UniPoly d, int i) : field_(d.field()) { add(i, d); }

GwaElement GwaElement::X(Field field) { return GwaElement(UniPoly::constant(1, field), 1); }
GwaElement GwaElement::Y(Field field) { return GwaElement(UniPoly::constant(1, field), -1); }
GwaElement GwaElement::h(Field field) { return GwaElement(UniPoly::variable(field), 0); }
GwaElement GwaElement::scalar(const Rational& c, Field field) { return GwaElement(UniPoly::constant(c, field), 0); }

UniPoly GwaElement::component(int i) const {
    auto it = components_.find(i);
    return it == components_.end() ? UniPoly(field_) : it->second;
}

void GwaElement::add(int i, const UniPoly& d) {
    if (d.field() != field_) throw StructuralError("GWA elements over different fields");
    if (d.is_zero()) return;
    auto [it, fresh] = components_.try_emplace(i, d);
    if (!fresh) {
        it->second += d;
        if (it->second.is_zero()) components_.erase(it);
    }
}

GwaElement& GwaElement::operator+=(const GwaElement& o) {
    for (const auto& [i, d] : o.components_) add(i, d);
    return *this;
}

GwaElement& GwaElement::operator-=(const GwaElement& o) {
    for (const auto& [i, d] : o.components_) add(i, d * Rational(-1));
    return *this;
}

GwaElement& GwaElement::operator*=(const Rational& c) {
    std::map<int, UniPoly> scaled;
    for (auto& [i, d] : components_) {
        auto s = d * c;
        if (!s.is_zero()) scaled.emplace(i, std::move(s));
    }
    components_ = std::move(scaled);
    return *this;
}

std::string GwaElement::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (const auto& [i, d] : components_) {
        std::string v;
        if (i != 0) {
            v = i > 0 ? "X" : "Y";
            if (std::abs(i) > 1) v += "^" + std::to_string(std::abs(i));
        }
        std::string coef = d.to_string();
        const bool single = d.coefficients().size() == 1 ||
                            std::count_if(d.coefficients().begin(), d.coefficients().end(),
                                          [](const Rational& c) { return c != 0; }) == 1;
        std::string term;
        if (v.empty())
            term = coef;
        else if (d == UniPoly::constant(1, field_))
            term = v;
        else if (single && coef.front() != '-')
            term = coef + "*" + v;
        else
            term = "(" + coef + ")*" + v;
        if (!out.empty()) out += " + ";
        out += term;
    }
    return out;
}

// ---- multiplication --------------------------------------------------------

namespace {

/// c(i, j) with v_i v_j = c(i, j) v_{i+j}.
UniPoly crossing_factor(int i, int j, const GwaData& data) {
    const auto one = UniPoly::constant(1, data.field());
    if ((i >= 0 && j >= 0) || (i <= 0 && j <= 0)) return one;
    UniPoly out = one;
    if (i > 0) {
        // X^i Y^m
        const int m = -j;
        const int lo = i >= m ? i - m + 1 : 1;
        for (int k = lo; k <= i; ++k) out = out * sigma_apply(data.sigma, data.a, k);
    } else {
        // Y^m X^i
        const int m = -i;
        const int n = j;
        const int lo = m >= n ? m - n : 0;
        for (int k = lo; k <= m - 1; ++k) out = out * sigma_apply(data.sigma, data.a, -k);
    }
    return out;
}

}  // namespace

GwaElement gwa_multiply(const GwaElement& u, const GwaElement& w, const GwaData& data) {
    if (u.field() != data.field() || w.field() != data.field())
        throw StructuralError("GWA element and data over different fields");
    GwaElement out(data.field());
    for (const auto& [i, di] : u.components())
        for (const auto& [j, dj] : w.components())
            out.add(i + j, di * sigma_apply(data.sigma, dj, i) * crossing_factor(i, j, data));
    return out;
}

UniPoly gwa_commutator_check(const GwaData& data) { return sigma_apply(data.sigma, data.a, 1) - data.a; }

// ---- reduction -------------------------------------------------------------

std::string PrimeVerdict::message() const {
    if (!good && culprit) {
        std::ostringstream os;
        os << "bad prime: coefficient " << culprit->name << " = " << ncred::to_string(culprit->value)
           << " has valuation " << culprit->valuation << " (" << culprit->reason << ")";
        return os.str();
    }
    return nondomain ? "good; a reduces to 0, so the reduction is not a domain" : "good";
}

PrimeVerdict bad_prime_detect(const GwaData& data, const ValuationSpec& v) {
    if (!data.field().is_rational()) throw StructuralError("bad_prime_detect needs data over QQ");
    PrimeVerdict verdict;
    auto flag = [&](std::string name, const Rational& value, long val, std::string reason) {
        verdict.good = false;
        verdict.culprit = BadCoefficient{std::move(name), value, val, std::move(reason)};
    };
    const auto va = *vp(data.sigma.alpha(), v);
    if (va < 0)
        flag("alpha", data.sigma.alpha(), va, "sigma(h) = alpha*h + beta is not p-integral");
    else if (va > 0)
        flag("alpha", data.sigma.alpha(), va, "alpha reduces to 0, so sigma is not invertible mod p");
    else if (auto vb = vp(data.sigma.beta(), v); vb && *vb < 0)
        flag("beta", data.sigma.beta(), *vb, "sigma(h) = alpha*h + beta is not p-integral");
    if (verdict.good) {
        const auto& cs = data.a.coefficients();
        for (std::size_t k = 0; k < cs.size(); ++k) {
            auto vk = vp(cs[k], v);
            if (vk && *vk < 0) {
                flag("a[" + std::to_string(k) + "]", cs[k], *vk, "a is not p-integral");
                break;
            }
        }
    }
    bool all_divisible = true;
    for (const auto& c : data.a.coefficients()) {
        auto vk = vp(c, v);
        if (vk && *vk < 1) all_divisible = false;
    }
    verdict.nondomain = all_divisible;
    return verdict;
}

GwaData gwa_reduce(const GwaData& data, const ValuationSpec& v) {
    const auto verdict = bad_prime_detect(data, v);
    if (!verdict.good) throw BadReductionError(verdict.message());
    const auto f = v.residue_field();
    std::vector<Rational> a;
    for (const auto& c : data.a.coefficients()) a.push_back(reduce_scalar(c, v).value());
    return GwaData(AffineAuto(reduce_scalar(data.sigma.alpha(), v).value(), reduce_scalar(data.sigma.beta(), v).value(), f),
                   UniPoly(std::move(a), f));
}

// ---- catalog ---------------------------------------------------------------

std::vector<std::string> gwa_catalog_names() {
    return {"weyl", "quantum_weyl", "quantum_plane", "usl2", "uq_sl2", "quantum_heisenberg"};
}

GwaData gwa_catalog(const std::string& name, const std::map<std::string, Rational>& params) {
    auto check_keys = [&](std::initializer_list<const char*> allowed) {
        for (const auto& [k, val] : params) {
            bool ok = false;
            for (const char* a : allowed) ok = ok || k == a;
            if (!ok) throw DomainError("catalog entry '" + name + "' takes no parameter '" + k + "'");
        }
    };
    auto get_q = [&]() {
        auto it = params.find("q");
        if (it == params.end()) throw DomainError("catalog entry '" + name + "' needs parameter q");
        if (it->second == 0) throw DomainError("q must be nonzero");
        return it->second;
    };
    auto get_c = [&]() {
        auto it = params.find("c");
        return it == params.end() ? Rational(0) : it->second;
    };
    const auto h = UniPoly::variable();
    if (name == "weyl") {
        check_keys({});
        return GwaData(AffineAuto(1, 1), h);
    }
    if (name == "quantum_weyl") {
        check_keys({"q"});
        const Rational qi = 1 / get_q();
        return GwaData(AffineAuto(qi, -qi), h);
    }
    if (name == "quantum_plane") {
        check_keys({"q"});
        return GwaData(AffineAuto(get_q(), 0), h);
    }
    if (name == "usl2") {
        check_keys({"c"});
        // a = c/2 - H/2 - H^2/4 gives sigma(a) - a = H for sigma(H) = H - 2
        return GwaData(AffineAuto(1, -2), UniPoly({get_c() / 2, Rational(-1, 2), Rational(-1, 4)}, Field::rationals()));
    }
    if (name == "uq_sl2") {
        check_keys({"q", "c"});
        const Rational q = get_q();
        const Rational s = 1 / (q * q);
        if (s == 1) throw DomainError("uq_sl2 needs q^2 != 1");
        // sigma(K) = q^-2 K, a = c + K/(q^-2 - 1): XY - YX = K
        return GwaData(AffineAuto(s, 0), UniPoly({get_c(), 1 / (s - 1)}, Field::rationals()));
    }
    if (name == "quantum_heisenberg") {
        check_keys({"q"});
        // XY - q YX = 1
        return GwaData(AffineAuto(get_q(), 1), h);
    }
    throw DomainError("unknown catalog entry '" + name + "'");
}

int gwa_natural_degree_of_h(const GwaData& data) { return data.a.degree() <= 1 ? 2 : 1; }

Presentation gwa_to_presentation(const GwaData& data, int degree_of_h) {
    if (degree_of_h < 1) throw DomainError("degree of h must be positive");
    const auto f = data.field();
    const auto alphabet = make_alphabet({"X", "Y", "h"}, {1, 1, degree_of_h});
    const Letter X = 0, Y = 1, H = 2;
    auto in_h = [&](const UniPoly& p) {
        NcPolynomial out(alphabet, f);
        const auto& cs = p.coefficients();
        for (std::size_t k = 0; k < cs.size(); ++k)
            out += NcPolynomial::monomial(alphabet, f, std::vector<Letter>(k, H), cs[k]);
        return out;
    };
    auto gen = [&](Letter l) { return NcPolynomial::generator(alphabet, f, l); };
    const auto sh = sigma_apply(data.sigma, UniPoly::variable(f), 1);
    const auto sih = sigma_apply(data.sigma, UniPoly::variable(f), -1);
    std::vector<NcPolynomial> rels{
        gen(X) * gen(H) - in_h(sh) * gen(X),
        gen(Y) * gen(H) - in_h(sih) * gen(Y),
        gen(Y) * gen(X) - in_h(data.a),
        gen(X) * gen(Y) - in_h(sigma_apply(data.sigma, data.a, 1)),
    };
    return Presentation(alphabet, f, std::move(rels), Mode::filtered);
}

HilbertTable gwa_dims(const GwaData& data, int max_degree, int degree_of_h) {
    if (max_degree < 0) throw DomainError("max degree must be nonnegative");
    if (degree_of_h < 1) throw DomainError("degree of h must be positive");
    HilbertTable t{data.field(), {}};
    for (int n = 0; n <= max_degree; ++n) {
        std::size_t count = 0;
        for (int j = 0; j * degree_of_h <= n; ++j) count += static_cast<std::size_t>(2 * (n - j * degree_of_h) + 1);
        t.dims.push_back(count);
    }
    return t;
}

}  // namespace ncred
