#pragma once
// Minimal CSV helpers shared by the readers and writers.

#include <string>
#include <string_view>
#include <vector>

namespace diverse::csv {

// Splits text into lines. Accepts LF and CRLF; a single trailing newline
// does not produce an extra empty line.
std::vector<std::string_view> split_lines(std::string_view text);

// Splits one line on commas, honouring double-quoted fields ("" escapes a
// quote). Throws ParseError (with `line_number`) on an unterminated quote.
std::vector<std::string> split_fields(std::string_view line, std::size_t line_number);

// Quotes a field only when it contains a comma, quote or line break.
std::string quote(std::string_view field);

// Shortest decimal that parses back to the identical double.
std::string format_real(double value);

}  // namespace diverse::csv
