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

#ifndef NCRED_SCALAR_HPP
#define NCRED_SCALAR_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ncred {

/// Exact rational in lowest terms; mpq_class keeps the denominator positive.
using Rational = mpq_class;
using Integer = mpz_class;

/// Builds num/den in canonical form. Throws DomainError when den == 0.
Rational make_rational(const Integer& num, const Integer& den = 1);

/// Parses "a", "-a" or "a/b" (optional surrounding blanks). Throws DomainError
/// on malformed text or a zero denominator.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& q);

/// Coefficient field of a polynomial: QQ (characteristic 0) or GF(p).
class Field {
   public:
    constexpr Field() = default;

    static constexpr Field rationals() { return Field{}; }
    /// p must be prime and below 2^31; checked.
    static Field prime(std::uint64_t p);

    constexpr std::uint32_t characteristic() const noexcept { return characteristic_; }
    constexpr bool is_rational() const noexcept { return characteristic_ == 0; }

    /// Canonical representative: identity over QQ, the residue in [0, p) over GF(p).
    /// Throws DomainError if p divides the denominator.
    Rational canonical(const Rational& q) const;
    Rational inverse(const Rational& q) const;

    std::string label() const;

    constexpr auto operator<=>(const Field&) const = default;

   private:
    constexpr explicit Field(std::uint32_t c) : characteristic_(c) {}
    std::uint32_t characteristic_ = 0;
};

/// Element of GF(p).
class ResidueScalar {
   public:
    ResidueScalar(std::uint64_t value, std::uint32_t modulus);

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t modulus() const noexcept { return modulus_; }

    ResidueScalar operator+(const ResidueScalar& o) const;
    ResidueScalar operator-(const ResidueScalar& o) const;
    ResidueScalar operator*(const ResidueScalar& o) const;
    ResidueScalar inverse() const;

    bool operator==(const ResidueScalar&) const = default;

   private:
    void check_same(const ResidueScalar& o) const;

    std::uint32_t value_;
    std::uint32_t modulus_;
};

/// Modular helpers on machine words, p < 2^31.
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p);
/// Image of an integer in [0, p).
std::uint64_t mod_of(const Integer& z, std::uint64_t p);

}  // namespace ncred

#endif  // NCRED_SCALAR_HPP
