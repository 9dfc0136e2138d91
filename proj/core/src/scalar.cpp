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

#include "ncred/scalar.hpp"

#include <cctype>

#include "ncred/dvr.hpp"
#include "ncred/error.hpp"

namespace ncred {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') i = 1;
    if (i == s.size()) return false;
    for (std::size_t k = i; k < s.size(); ++k)
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
    std::string digits(s.substr(i));
    out = Integer(digits, 10);
    if (s[0] == '-') out = -out;
    return true;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    auto slash = s.find('/');
    Integer num, den = 1;
    if (slash == std::string_view::npos) {
        if (!parse_integer(s, num)) throw DomainError("malformed rational '" + std::string(text) + "'");
    } else {
        auto d = s.substr(slash + 1);
        if (!parse_integer(s.substr(0, slash), num) || d.empty() || d[0] == '-' || d[0] == '+' ||
            !parse_integer(d, den))
            throw DomainError("malformed rational '" + std::string(text) + "'");
    }
    return make_rational(num, den);
}

std::string to_string(const Rational& q) { return q.get_str(10); }

Field Field::prime(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 31)) throw DomainError("residue characteristic must be below 2^31");
    if (!is_prime(p)) throw DomainError("field characteristic " + std::to_string(p) + " is not prime");
    return Field(static_cast<std::uint32_t>(p));
}

Rational Field::canonical(const Rational& q) const {
    if (is_rational()) {
        // values built from (num, den) pairs need not be in lowest terms
        Rational c(q);
        c.canonicalize();
        return c;
    }
    const std::uint64_t p = characteristic_;
    const auto den = mod_of(q.get_den(), p);
    if (den == 0) throw DomainError("denominator of " + to_string(q) + " vanishes in " + label());
    const auto v = mod_of(q.get_num(), p) * mod_inverse(den, p) % p;
    return Rational(static_cast<unsigned long>(v));
}

Rational Field::inverse(const Rational& q) const {
    if (is_rational()) {
        if (q == 0) throw DomainError("inverse of zero");
        return 1 / q;
    }
    const auto c = canonical(q);
    if (c == 0) throw DomainError("inverse of zero in " + label());
    return Rational(static_cast<unsigned long>(mod_inverse(c.get_num().get_ui(), characteristic_)));
}

std::string Field::label() const {
    return is_rational() ? std::string("QQ") : "GF(" + std::to_string(characteristic_) + ")";
}

ResidueScalar::ResidueScalar(std::uint64_t value, std::uint32_t modulus) : modulus_(modulus) {
    if (!is_prime(modulus)) throw DomainError("residue modulus " + std::to_string(modulus) + " is not prime");
    value_ = static_cast<std::uint32_t>(value % modulus);
}

void ResidueScalar::check_same(const ResidueScalar& o) const {
    if (o.modulus_ != modulus_) throw StructuralError("residue scalars over different primes");
}

ResidueScalar ResidueScalar::operator+(const ResidueScalar& o) const {
    check_same(o);
    return {std::uint64_t{value_} + o.value_, modulus_};
}

ResidueScalar ResidueScalar::operator-(const ResidueScalar& o) const {
    check_same(o);
    return {std::uint64_t{value_} + modulus_ - o.value_, modulus_};
}

ResidueScalar ResidueScalar::operator*(const ResidueScalar& o) const {
    check_same(o);
    return {std::uint64_t{value_} * o.value_, modulus_};
}

ResidueScalar ResidueScalar::inverse() const {
    if (value_ == 0) throw DomainError("inverse of zero residue");
    return {mod_inverse(value_, modulus_), modulus_};
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1) r = r * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return r;
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid; p need not be prime as long as gcd(a, p) = 1.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
    while (new_r != 0) {
        const auto q = r / new_r;
        t = t - q * new_t;
        std::swap(t, new_t);
        r = r - q * new_r;
        std::swap(r, new_r);
    }
    if (r != 1) throw DomainError("value not invertible modulo " + std::to_string(p));
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

std::uint64_t mod_of(const Integer& z, std::uint64_t p) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_ui();
}

}  // namespace ncred
