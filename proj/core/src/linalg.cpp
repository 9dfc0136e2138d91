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

#include "ncred/linalg.hpp"

#include <algorithm>

#include "ncred/error.hpp"

namespace ncred::linalg {

RationalRow canonical_row(std::vector<std::pair<std::size_t, Rational>> entries) {
    std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    RationalRow out;
    for (auto& [c, v] : entries) {
        if (!out.empty() && out.back().first == c)
            out.back().second += v;
        else
            out.emplace_back(c, std::move(v));
    }
    std::erase_if(out, [](const auto& e) { return e.second == 0; });
    return out;
}

namespace {

void make_primitive(IntegerRow& row) {
    if (row.empty()) return;
    Integer g = 0;
    for (const auto& [c, v] : row) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) break;
    }
    const bool flip = row.back().second < 0;
    if (g != 1 || flip) {
        if (flip) g = -g;
        for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    }
}

}  // namespace

IntegerRow primitive_integer_row(const RationalRow& row) {
    Integer l = 1;
    for (const auto& [c, v] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    IntegerRow out;
    out.reserve(row.size());
    for (const auto& [c, v] : row) {
        if (v == 0) continue;
        Integer z = l / v.get_den() * v.get_num();
        out.emplace_back(c, std::move(z));
    }
    make_primitive(out);
    return out;
}

bool IntegerRankEchelon::add(IntegerRow row) {
    make_primitive(row);
    while (!row.empty()) {
        const auto lead = row.back().first;
        if (lead >= pivots_.size()) throw StructuralError("row column out of range");
        auto& slot = pivots_[lead];
        if (!slot) {
            slot = std::move(row);
            ++rank_;
            return true;
        }
        const auto& piv = *slot;
        // row <- (a/g) row - (b/g) piv, a = lead(piv) > 0, b = lead(row)
        Integer g;
        mpz_gcd(g.get_mpz_t(), piv.back().second.get_mpz_t(), row.back().second.get_mpz_t());
        const Integer a = piv.back().second / g;
        const Integer b = row.back().second / g;
        IntegerRow out;
        out.reserve(row.size() + piv.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < piv.size()) {
            if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                out.emplace_back(row[i].first, a * row[i].second);
                ++i;
            } else if (i == row.size() || piv[j].first < row[i].first) {
                out.emplace_back(piv[j].first, -b * piv[j].second);
                ++j;
            } else {
                Integer v = a * row[i].second - b * piv[j].second;
                if (v != 0) out.emplace_back(row[i].first, std::move(v));
                ++i;
                ++j;
            }
        }
        row = std::move(out);
        make_primitive(row);
    }
    return false;
}

bool ModRankEchelon::add(ModRow row) {
    std::erase_if(row, [&](auto& e) { return (e.second %= p_) == 0; });
    while (!row.empty()) {
        const auto lead = row.back().first;
        if (lead >= pivots_.size()) throw StructuralError("row column out of range");
        auto& slot = pivots_[lead];
        if (!slot) {
            const auto inv = mod_inverse(row.back().second, p_);
            for (auto& [c, v] : row) v = v * inv % p_;
            slot = std::move(row);
            ++rank_;
            return true;
        }
        const auto& piv = *slot;
        const auto b = row.back().second;
        ModRow out;
        out.reserve(row.size() + piv.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < piv.size()) {
            if (j == piv.size() || (i < row.size() && row[i].first < piv[j].first)) {
                out.push_back(row[i]);
                ++i;
            } else if (i == row.size() || piv[j].first < row[i].first) {
                out.emplace_back(piv[j].first, (p_ - b * piv[j].second % p_) % p_);
                ++j;
            } else {
                const auto v = (row[i].second + p_ - b * piv[j].second % p_) % p_;
                if (v) out.emplace_back(row[i].first, v);
                ++i;
                ++j;
            }
        }
        row = std::move(out);
    }
    return false;
}

}  // namespace ncred::linalg
