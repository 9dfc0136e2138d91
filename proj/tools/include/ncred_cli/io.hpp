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

/* JSON documents read and written by the command-line tool.
 *
 * A presentation file looks like
 *
 *   {"generators": [{"name": "x", "degree": 1}, {"name": "y"}],
 *    "mode": "graded",
 *    "relations": [[{"word": ["x", "y"], "coeff": "1"},
 *                   {"word": ["y", "x"], "coeff": "-3"}]]}
 *
 * Coefficients are strings so that rationals stay exact.
 */

#ifndef NCRED_CLI_IO_HPP
#define NCRED_CLI_IO_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ncred/gwa.hpp"
#include "ncred/presentations.hpp"

namespace ncred::cli {

using Json = nlohmann::ordered_json;

/// Malformed input; line and column are 1-based (0 when unknown).
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& what, std::size_t line, std::size_t column);

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

   private:
    std::size_t line_;
    std::size_t column_;
};

/// 1-based (line, column) of a byte offset.
std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset);

Presentation parse_presentation(std::string_view text);
Json presentation_to_json(const Presentation& pres);
/// Two-space indented JSON text with a trailing newline.
std::string dump(const Json& doc);

/// {"sigma": {"alpha": "1", "beta": "1"}, "a": ["0", "1"]}, a ascending in h.
GwaData parse_gwa(std::string_view text);
Json gwa_to_json(const GwaData& data);

/// 64-bit FNV-1a as 16 lowercase hex digits.
std::string fnv1a_hex(std::string_view bytes);

std::string read_file(const std::string& path);

}  // namespace ncred::cli

#endif  // NCRED_CLI_IO_HPP
