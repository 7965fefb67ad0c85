#pragma once

// Plain-text curve databases.
//
// One record per line, whitespace separated:
//
//     label a1 a2 a3 a4 a6 rank torsion [conductor]
//
// `torsion` may be `?` when unknown and `#` starts a comment. The canonical
// form written by serialize_curve_db uses single spaces, always includes the
// conductor, drops comments and blank lines, and ends every line with LF.

#include <stdexcept>
#include <string>
#include <vector>

#include "tamagawa/visibility.hpp"

namespace tamagawa {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct DatabaseFile {
  std::vector<CurveRecord> records;
  std::string source_path;

  /// Throws std::out_of_range when the label is absent.
  const CurveRecord& find(const std::string& label) const;
};

/// Parses database text. Syntax errors raise ParseError with the line number;
/// conductor mismatches and duplicate labels raise ValidationError.
DatabaseFile parse_curve_db_text(const std::string& text, const std::string& source_name = "<memory>");

/// Reads and parses a file; std::runtime_error if it cannot be opened.
DatabaseFile parse_curve_db(const std::string& path);

std::string serialize_record(const CurveRecord& record);
std::string serialize_curve_db(const DatabaseFile& db);

}  // namespace tamagawa
