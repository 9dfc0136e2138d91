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

/* Generalized Weyl algebras D(sigma, a) over D = k[h], sigma affine.
 *
 * The algebra is generated over D by X and Y subject to
 *
 *     X d = sigma(d) X,   Y d = sigma^-1(d) Y,   YX = a,   XY = sigma(a).
 *
 * Every element is uniquely sum_i d_i(h) v_i with v_i = X^i (i > 0), v_0 = 1
 * and v_i = Y^-i (i < 0); multiplication is done directly on that form.
 */

#ifndef NCRED_GWA_HPP
#define NCRED_GWA_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncred/dvr.hpp"
#include "ncred/presentations.hpp"
#include "ncred/scalar.hpp"

namespace ncred {

/// Dense univariate polynomial in h, ascending coefficients, no trailing zeros.
class UniPoly {
   public:
    explicit UniPoly(Field field = Field::rationals()) : field_(field) {}
    UniPoly(std::vector<Rational> coefficients, Field field);

    static UniPoly constant(const Rational& c, Field field = Field::rationals());
    /// The polynomial h.
    static UniPoly variable(Field field = Field::rationals());

    Field field() const noexcept { return field_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

    /// f(alpha*h + beta).
    UniPoly compose_affine(const Rational& alpha, const Rational& beta) const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Rational& c);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
    friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    bool operator==(const UniPoly&) const = default;

    /// "h^2 - 3/2*h + 1"; "0" for zero.
    std::string to_string(const std::string& var = "h") const;

   private:
    void trim();
    void check_field(const UniPoly& o) const;

    Field field_;
    std::vector<Rational> coeffs_;
};

/// sigma(h) = alpha*h + beta with alpha != 0.
class AffineAuto {
   public:
    AffineAuto(const Rational& alpha, const Rational& beta, Field field = Field::rationals());

    const Rational& alpha() const noexcept { return alpha_; }
    const Rational& beta() const noexcept { return beta_; }
    Field field() const noexcept { return field_; }

    /// sigma^k as an affine map; k may be negative.
    AffineAuto power(long k) const;
    bool operator==(const AffineAuto&) const = default;

   private:
    Rational alpha_;
    Rational beta_;
    Field field_;
};

struct GwaData {
    AffineAuto sigma;
    UniPoly a;

    /// Throws StructuralError when sigma and a live over different fields.
    GwaData(AffineAuto s, UniPoly a_poly);
    Field field() const noexcept { return sigma.field(); }
    bool operator==(const GwaData&) const = default;
};

/// f(sigma^k(h)).
UniPoly sigma_apply(const AffineAuto& s, const UniPoly& f, long k);

/// sum_i d_i v_i in normal form; zero components are never stored.
class GwaElement {
   public:
    explicit GwaElement(Field field = Field::rationals()) : field_(field) {}
    /// d * v_i.
    GwaElement(UniPoly d, int i);

    static GwaElement X(Field field = Field::rationals());
    static GwaElement Y(Field field = Field::rationals());
    static GwaElement h(Field field = Field::rationals());
    static GwaElement scalar(const Rational& c, Field field = Field::rationals());

    Field field() const noexcept { return field_; }
    const std::map<int, UniPoly>& components() const noexcept { return components_; }
    bool is_zero() const noexcept { return components_.empty(); }
    UniPoly component(int i) const;

    void add(int i, const UniPoly& d);

    GwaElement& operator+=(const GwaElement& o);
    GwaElement& operator-=(const GwaElement& o);
    GwaElement& operator*=(const Rational& c);
    friend GwaElement operator+(GwaElement a, const GwaElement& b) { return a += b; }
    friend GwaElement operator-(GwaElement a, const GwaElement& b) { return a -= b; }
    friend GwaElement operator*(GwaElement a, const Rational& c) { return a *= c; }
    bool operator==(const GwaElement&) const = default;

    /// Components from Y-powers to X-powers: "h*Y + (h + 2)*X^2".
    std::string to_string() const;

   private:
    Field field_;
    std::map<int, UniPoly> components_;
};

GwaElement gwa_multiply(const GwaElement& u, const GwaElement& w, const GwaData& data);

/// XY - YX = sigma(a) - a.
UniPoly gwa_commutator_check(const GwaData& data);

/// A coefficient of (sigma, a) that blocks reduction.
struct BadCoefficient {
    std::string name;  ///< "alpha", "beta" or "a[k]"
    Rational value;
    long valuation = 0;
    std::string reason;
};

struct PrimeVerdict {
    bool good = true;
    std::optional<BadCoefficient> culprit;
    /// Every coefficient of a lies in pZ_(p): the reduction has abar = 0 and
    /// is not a domain.
    bool nondomain = false;

    std::string message() const;
};

/// good iff every coefficient of sigma and a is p-integral and alpha is a unit.
PrimeVerdict bad_prime_detect(const GwaData& data, const ValuationSpec& v);

/// Coefficientwise reduction; BadReductionError naming the coefficient at a bad prime.
GwaData gwa_reduce(const GwaData& data, const ValuationSpec& v);

/// Names: weyl, quantum_weyl{q}, quantum_plane{q}, usl2{c}, uq_sl2{q, c},
/// quantum_heisenberg{q}. Missing c defaults to 0.
GwaData gwa_catalog(const std::string& name, const std::map<std::string, Rational>& params = {});
std::vector<std::string> gwa_catalog_names();

/// Degree of h for which the filtration by word degree matches the normal
/// form count: 2 when deg a <= 1, else 1.
int gwa_natural_degree_of_h(const GwaData& data);

/// Generators X, Y, h of degrees 1, 1, degree_of_h and relations
/// Xh - sigma(h)X, Yh - sigma^-1(h)Y, YX - a, XY - sigma(a); filtered.
Presentation gwa_to_presentation(const GwaData& data, int degree_of_h = 2);

/// dims[n] = #{(j, i) : j*degree_of_h + |i| <= n}.
HilbertTable gwa_dims(const GwaData& data, int max_degree, int degree_of_h = 2);

}  // namespace ncred

#endif  // NCRED_GWA_HPP
