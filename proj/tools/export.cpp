#include "export.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace lcd::tools {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw std::runtime_error("line " + std::to_string(line) + ": " + what);
}

void check_row(const std::string& row, std::size_t width, int line) {
  if (row.size() != width) {
    fail(line, "ragged row (expected " + std::to_string(width) + " characters, got " +
                   std::to_string(row.size()) + ")");
  }
  for (char c : row) {
    if (c != '0' && c != '1') fail(line, std::string("non-binary character '") + c + "'");
  }
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

ExportRecord make_record(const LinearCode& code) {
  ExportRecord r;
  r.n = code.length();
  r.k = code.dimension();
  const WeightEnumerator we = weight_enumerator(code);
  r.d = we.min_nonzero_weight();
  for (int i = 0; i < r.k; ++i) r.generator.push_back(code.generator().row(i).to_string());
  r.weight_enumerator = we.coeffs;
  return r;
}

void write_text(std::ostream& out, const std::vector<ExportRecord>& records) {
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (i) out << '\n';
    const ExportRecord& r = records[i];
    out << r.n << ' ' << r.k << ' ' << r.d << '\n';
    for (const auto& row : r.generator) out << row << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<ExportRecord>& records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : records) {
    arr.push_back({{"n", r.n},
                   {"k", r.k},
                   {"d", r.d},
                   {"generator", r.generator},
                   {"weight_enumerator", r.weight_enumerator}});
  }
  out << arr.dump(2) << '\n';
}

std::vector<ExportRecord> read_text(std::istream& in) {
  std::vector<ExportRecord> records;
  std::string raw;
  int line = 0;
  ExportRecord* cur = nullptr;
  int rows_left = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (rows_left > 0) {
      check_row(s, static_cast<std::size_t>(cur->n), line);
      cur->generator.push_back(s);
      --rows_left;
      continue;
    }
    if (s.empty()) continue;
    std::istringstream hdr(s);
    ExportRecord r;
    std::string extra;
    if (!(hdr >> r.n >> r.k >> r.d) || (hdr >> extra)) fail(line, "expected header 'n k d'");
    if (r.n < 1 || r.n > kMaxLength || r.k < 0 || r.k > r.n) fail(line, "header out of range");
    records.push_back(std::move(r));
    cur = &records.back();
    rows_left = cur->k;
  }
  if (rows_left > 0) fail(line, "record ended early");
  for (auto& r : records) {
    r.weight_enumerator = weight_enumerator(to_code(r)).coeffs;
  }
  return records;
}

BinaryMatrix read_rows(std::istream& in) {
  std::vector<std::string> rows;
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    if (s.size() > static_cast<std::size_t>(kMaxLength)) fail(line, "row longer than 64");
    check_row(s, rows.empty() ? s.size() : rows.front().size(), line);
    rows.push_back(s);
  }
  if (rows.empty()) throw std::runtime_error("no generator rows given");
  return BinaryMatrix::parse(rows);
}

LinearCode to_code(const ExportRecord& record) {
  if (record.generator.empty()) return LinearCode::zero(record.n);
  return LinearCode(BinaryMatrix::parse(record.generator));
}

}  // namespace lcd::tools
