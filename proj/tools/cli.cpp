#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "export.hpp"
#include "lcd/classify.hpp"
#include "lcd/covers.hpp"

namespace lcd::tools {

namespace {

struct Options {
  int n = 0;
  int k = 0;
  int d = 0;
  int m = 0;
  int nmax = 12;
  int jobs = 1;
  std::string strategy = "columns";
  std::string out_file;
  bool json = false;
  bool compare = false;
  bool classify = false;
  bool emit_codes = false;
  std::vector<std::string> inputs;
};

void emit(const std::vector<ExportRecord>& records, const Options& opt, std::ostream& out) {
  if (opt.out_file.empty()) {
    opt.json ? write_json(out, records) : write_text(out, records);
    return;
  }
  std::ofstream file(opt.out_file);
  if (!file) throw std::runtime_error("cannot open " + opt.out_file + " for writing");
  opt.json ? write_json(file, records) : write_text(file, records);
}

std::vector<ExportRecord> records_of(const std::vector<LinearCode>& codes) {
  std::vector<ExportRecord> records;
  records.reserve(codes.size());
  for (const auto& c : codes) records.push_back(make_record(c));
  return records;
}

std::string plural(std::uint64_t count) {
  return std::to_string(count) + (count == 1 ? " code" : " codes");
}

void check_range(const Options& opt) {
  if (opt.k < 1 || opt.k > opt.n || opt.n > 16) {
    throw std::invalid_argument("need 1 <= k <= n <= 16");
  }
}

int cmd_dmax(const Options& opt, std::ostream& out) {
  check_range(opt);
  if (opt.classify) {
    const LargestD res = largest_d(opt.n, opt.k, opt.jobs);
    out << res.d << ", " << plural(res.result.count) << '\n';
    const auto records = records_of(res.result.codes);
    if (!records.empty() && opt.out_file.empty()) out << '\n';
    emit(records, opt, out);
    return kOk;
  }
  if (auto known = lookup_d(opt.n, opt.k)) {
    out << known->d << " (" << to_string(known->source) << ")\n";
    return kOk;
  }
  const LargestD res = largest_d(opt.n, opt.k, opt.jobs);
  out << res.d << " (" << to_string(DSource::Computed) << ")\n";
  return kOk;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  check_range(opt);
  if (opt.d < 1) throw std::invalid_argument("need d >= 1");
  const Strategy strategy = parse_strategy(opt.strategy);
  const ClassificationResult res = classify_lcd(opt.n, opt.k, opt.d, strategy, opt.jobs);
  emit(records_of(res.codes), opt, out);
  if (!opt.out_file.empty()) out << plural(res.count) << " written to " << opt.out_file << '\n';
  return kOk;
}

int cmd_table(const Options& opt, std::ostream& out, std::ostream& err) {
  if (opt.nmax < 3 || opt.nmax > 16) throw std::invalid_argument("--nmax must be in [3, 16]");
  const auto start = std::chrono::steady_clock::now();
  TableOptions topt;
  topt.jobs = opt.jobs;
  const TableReport report = verify_table(opt.nmax, topt);

  constexpr int kWidth = 12;
  auto flush_line = [&out](std::ostringstream& line) {
    std::string s = line.str();
    s.erase(s.find_last_not_of(' ') + 1);
    out << s << '\n';
    line.str("");
  };
  std::ostringstream line;
  line << std::left << std::setw(5) << "n\\k";
  for (int k = 2; k <= opt.nmax - 1; ++k) line << std::setw(kWidth) << k;
  flush_line(line);
  int current_n = 0;
  std::vector<const CellReport*> bad;
  for (const CellReport& c : report.cells) {
    if (c.n != current_n) {
      if (current_n) flush_line(line);
      current_n = c.n;
      line << std::setw(5) << c.n;
    }
    std::string cell =
        "(" + std::to_string(c.computed.d) + "," + std::to_string(c.computed.count) + ")";
    if (opt.compare) cell += c.pass ? "✓" : "✗";
    // setw counts bytes; the marks are three bytes in UTF-8 but one column wide.
    line << std::setw(kWidth + (opt.compare ? 2 : 0)) << cell;
    if (!c.pass) bad.push_back(&c);
  }
  flush_line(line);

  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  err << "table computed in " << std::fixed << std::setprecision(2) << secs << " s\n";
  if (!opt.compare) return kOk;
  for (const CellReport* c : bad) {
    out << "mismatch at (" << c->n << "," << c->k << "): computed (" << c->computed.d << ","
        << c->computed.count << "), published (" << c->expected.d << "," << c->expected.count
        << ")\n";
  }
  if (bad.empty()) {
    out << "all " << report.cells.size() << " cells match\n";
    return kOk;
  }
  out << bad.size() << " of " << report.cells.size() << " cells differ\n";
  return kMismatch;
}

int cmd_covers(const Options& opt, std::ostream& out) {
  if (opt.m < 1 || opt.m > 12 || opt.k < 1 || opt.k > 8) {
    throw std::invalid_argument("need 1 <= m <= 12 and 1 <= k <= 8");
  }
  if (!opt.emit_codes) {
    out << count_disordered_covers(opt.m, opt.k) << '\n';
    return kOk;
  }
  const std::vector<KCover> covers = enumerate_disordered_covers(opt.m, opt.k);
  out << covers.size() << '\n';
  std::vector<ExportRecord> records;
  for (const KCover& y : covers) records.push_back(make_record(cover_code(y, 2)));
  if (!records.empty() && opt.out_file.empty()) out << '\n';
  emit(records, opt, out);
  return kOk;
}

int cmd_we(const Options& opt, std::ostream& out) {
  if (opt.inputs.empty()) throw std::invalid_argument("give a file, '-' for stdin, or rows");
  BinaryMatrix rows;
  if (opt.inputs.size() == 1 && opt.inputs[0] == "-") {
    rows = read_rows(std::cin);
  } else if (opt.inputs.size() == 1 && std::ifstream(opt.inputs[0]).good()) {
    std::ifstream file(opt.inputs[0]);
    rows = read_rows(file);
  } else {
    std::stringstream joined;
    for (const auto& r : opt.inputs) joined << r << '\n';
    rows = read_rows(joined);
  }
  if (rank(rows) != rows.rows()) throw std::invalid_argument("generator rows are linearly dependent");
  const LinearCode code(rows);
  const WeightEnumerator we = weight_enumerator(code);
  out << "[" << code.length() << "," << code.dimension() << "," << we.min_nonzero_weight()
      << "]\n";
  out << we.to_string() << '\n';
  out << "LCD: " << (is_lcd(code) ? "yes" : "no") << '\n';
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Binary LCD codes: largest minimum weights, classification and covers", "lcd"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Print help for every subcommand");
  Options opt;

  auto* dmax = app.add_subcommand("dmax", "Largest minimum weight d(n,k) of LCD [n,k] codes");
  dmax->add_option("n", opt.n)->required();
  dmax->add_option("k", opt.k)->required();
  dmax->add_flag("--classify", opt.classify, "Classify the optimal codes and list them");

  auto* classify = app.add_subcommand("classify", "All inequivalent LCD [n,k] codes with d' >= d");
  classify->add_option("n", opt.n)->required();
  classify->add_option("k", opt.k)->required();
  classify->add_option("d", opt.d)->required();
  classify->add_option("--strategy", opt.strategy, "columns or rows")
      ->check(CLI::IsMember({"columns", "rows"}));

  auto* table = app.add_subcommand("table", "Reproduce the (d(n,k), N) table");
  table->add_option("--nmax", opt.nmax, "Largest n")->check(CLI::Range(3, 16));
  table->add_flag("--compare", opt.compare, "Mark each cell against the published values");

  auto* covers = app.add_subcommand("covers", "Count disordered k-covers of an unlabelled m-set");
  covers->add_option("m", opt.m)->required();
  covers->add_option("k", opt.k)->required();
  covers->add_flag("--emit-codes", opt.emit_codes, "Export the code C(Y) for each cover");

  auto* we = app.add_subcommand("we", "Weight enumerator and LCD test for a generator matrix");
  we->add_option("input", opt.inputs, "File of rows, '-' for stdin, or the rows themselves")
      ->required();

  for (auto* sub : {dmax, classify, table}) {
    sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  }
  for (auto* sub : {dmax, classify, covers}) {
    sub->add_option("--out", opt.out_file, "Write codes to this file");
    sub->add_flag("--json", opt.json, "Export codes as JSON");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*dmax) return cmd_dmax(opt, out);
    if (*classify) return cmd_classify(opt, out);
    if (*table) return cmd_table(opt, out, err);
    if (*covers) return cmd_covers(opt, out);
    if (*we) return cmd_we(opt, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace lcd::tools
