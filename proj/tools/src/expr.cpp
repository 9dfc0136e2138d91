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

#include "ncred_cli/expr.hpp"

#include <cctype>

#include "ncred_cli/io.hpp"

namespace ncred::cli {

namespace {

constexpr unsigned kMaxExponent = 64;

class Evaluator {
   public:
    Evaluator(std::string_view text, const GwaData& data) : t_(text), data_(data) {}

    GwaElement run() {
        auto v = expr();
        skip();
        if (i_ < t_.size()) error("unexpected '" + std::string(1, t_[i_]) + "'");
        return v;
    }

   private:
    [[noreturn]] void error(const std::string& what) const { throw ParseError(what, 1, i_ + 1); }

    void skip() {
        while (i_ < t_.size() && std::isspace(static_cast<unsigned char>(t_[i_]))) ++i_;
    }
    bool accept(char c) {
        skip();
        if (i_ < t_.size() && t_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    Integer integer() {
        skip();
        const auto start = i_;
        while (i_ < t_.size() && std::isdigit(static_cast<unsigned char>(t_[i_]))) ++i_;
        if (start == i_) error("expected an integer");
        return Integer(std::string(t_.substr(start, i_ - start)));
    }

    GwaElement expr() {
        auto v = term();
        for (;;) {
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }
    GwaElement term() {
        auto v = factor();
        while (accept('*')) v = gwa_multiply(v, factor(), data_);
        return v;
    }
    GwaElement factor() {
        auto base = unary();
        if (!accept('^')) return base;
        const auto e = integer();
        if (e > kMaxExponent) error("exponent too large");
        auto out = GwaElement::scalar(1, data_.field());
        for (unsigned long k = 0; k < e.get_ui(); ++k) out = gwa_multiply(out, base, data_);
        return out;
    }
    GwaElement unary() {
        if (accept('-')) return unary() * Rational(-1);
        skip();
        if (i_ >= t_.size()) error("unexpected end of expression");
        const char c = t_[i_];
        const auto f = data_.field();
        if (c == 'X' || c == 'Y' || c == 'h') {
            ++i_;
            return c == 'X' ? GwaElement::X(f) : c == 'Y' ? GwaElement::Y(f) : GwaElement::h(f);
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return GwaElement::scalar(Rational(integer()), f);
        if (accept('(')) {
            auto v = expr();
            if (!accept(')')) error("expected ')'");
            return v;
        }
        error("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view t_;
    const GwaData& data_;
    std::size_t i_ = 0;
};

}  // namespace

GwaElement evaluate_gwa_expression(std::string_view text, const GwaData& data) {
    return Evaluator(text, data).run();
}

}  // namespace ncred::cli
