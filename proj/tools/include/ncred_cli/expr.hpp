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

#ifndef NCRED_CLI_EXPR_HPP
#define NCRED_CLI_EXPR_HPP

#include <string_view>

#include "ncred/gwa.hpp"

namespace ncred::cli {

/// Evaluates an expression in X, Y, h and integers inside D(sigma, a):
///
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := unary ('^' integer)?
///   unary  := '-' unary | X | Y | h | integer | '(' expr ')'
///
/// ParseError (line 1, column of the offending character) on bad input.
GwaElement evaluate_gwa_expression(std::string_view text, const GwaData& data);

}  // namespace ncred::cli

#endif  // NCRED_CLI_EXPR_HPP
