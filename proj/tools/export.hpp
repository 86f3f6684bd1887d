#pragma once

// Plain-text and JSON serialization of classified codes.
//
// Text format: one block per code, blocks separated by a blank line. A block
// is a header line "n k d" followed by k rows of n characters from {0,1}.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "lcd/code.hpp"

namespace lcd::tools {

struct ExportRecord {
  int n = 0;
  int k = 0;
  int d = 0;
  std::vector<std::string> generator;
  std::vector<std::uint64_t> weight_enumerator;
};

/// d is the minimum weight (0 for k = 0).
ExportRecord make_record(const LinearCode& code);

void write_text(std::ostream& out, const std::vector<ExportRecord>& records);
void write_json(std::ostream& out, const std::vector<ExportRecord>& records);

/// Parses the text format. Throws std::runtime_error naming the offending
/// line on malformed input.
std::vector<ExportRecord> read_text(std::istream& in);

/// Generator rows from a loose listing: one row per line, blank lines and
/// lines starting with '#' skipped. Errors name the line.
BinaryMatrix read_rows(std::istream& in);

LinearCode to_code(const ExportRecord& record);

}  // namespace lcd::tools
