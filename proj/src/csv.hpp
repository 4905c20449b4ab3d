#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace journet::detail {

struct CsvRecord {
  std::size_t line = 0;  // 1-based line where the record starts
  std::vector<std::string> fields;
};

/// RFC 4180 reader: comma separated, `"`-quoted fields with `""` escapes,
/// quoted fields may span lines.  CRLF is accepted.  Throws Error{Data} naming
/// `source` and the line for an unterminated quote or stray quote.
std::vector<CsvRecord> parse_csv(std::string_view text, std::string_view source);

std::string read_file(const std::string& path);

}  // namespace journet::detail
