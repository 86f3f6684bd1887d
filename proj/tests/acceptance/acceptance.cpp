// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Budgets are wall-clock seconds on this machine.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <thread>

#include "cli.hpp"
#include "lcd/classify.hpp"
#include "lcd/covers.hpp"
#include "lcd/equivalence.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

namespace {

using namespace lcd;
using Clock = std::chrono::steady_clock;

constexpr double kCoreTableBudget = 600.0;
constexpr double kFullTableBudget = 6 * 3600.0;
constexpr double kCellReportThreshold = 1800.0;
constexpr double kCoverIdentityBudget = 1800.0;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (!detail.str().empty()) detail << "; ";
    pass = false;
    detail << what;
  }
};

int jobs() { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

double since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string secs(double s) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(1) << s << " s";
  return out.str();
}

void table_core(Outcome& o) {
  const auto start = Clock::now();
  std::ostringstream out, err;
  const int code = tools::run({"table", "--nmax", "12", "--compare", "--jobs", std::to_string(jobs())},
                              out, err);
  const double t = since(start);
  const bool all = out.str().find("all 55 cells match") != std::string::npos;
  o.detail << "table --nmax 12 --compare: " << (all ? "all 55 cells match" : "mismatch") << " in "
           << secs(t) << " (budget " << secs(kCoreTableBudget) << ")";
  if (code != tools::kOk || !all) o.fail(out.str());
  if (t > kCoreTableBudget) o.fail("over budget: " + secs(t));
}

void table_full(Outcome& o) {
  TableOptions opt;
  opt.jobs = jobs();
  opt.cell_budget_seconds = kCellReportThreshold;
  const TableReport report = verify_table(16, opt);
  int bad = 0;
  std::ostringstream issues;
  const CellReport* slowest = &report.cells.front();
  for (const auto& c : report.cells) {
    if (c.seconds > slowest->seconds) slowest = &c;
    if (!c.pass) {
      ++bad;
      issues << " (" << c.n << "," << c.k << ") got (" << c.computed.d << "," << c.computed.count
             << ") want (" << c.expected.d << "," << c.expected.count << ")";
    }
    if (c.over_budget) {
      std::cout << "  note: cell (" << c.n << "," << c.k << ") took " << secs(c.seconds)
                << ", over the " << secs(kCellReportThreshold) << " cell threshold\n";
    }
  }
  auto cell = [&](int n, int k) {
    for (const auto& c : report.cells) {
      if (c.n == n && c.k == k) {
        return "(" + std::to_string(c.computed.d) + "," + std::to_string(c.computed.count) + ")";
      }
    }
    return std::string("missing");
  };
  o.detail << report.cells.size() - bad << "/" << report.cells.size()
           << " cells match for n <= 16; (16,12) -> " << cell(16, 12) << ", (13,9) -> "
           << cell(13, 9) << "; total " << secs(report.total_seconds()) << ", slowest ("
           << slowest->n << "," << slowest->k << ") " << secs(slowest->seconds);
  if (bad) o.fail(std::to_string(bad) + " cells differ:" + issues.str());
  if (report.total_seconds() > kFullTableBudget) o.fail("over budget");
}

void distance_formulas(Outcome& o) {
  int checked = 0;
  for (int n = 4; n <= 16; ++n) {
    for (int k : {2, 3}) {
      const int got = largest_d(n, k, jobs()).d;
      const int want = *d_formula(n, k);
      ++checked;
      if (got != want) {
        o.fail("d(" + std::to_string(n) + "," + std::to_string(k) + ") computed " +
               std::to_string(got) + ", formula " + std::to_string(want));
      }
    }
  }
  if (o.pass) o.detail << checked << " cells, k = 2 and 3, 4 <= n <= 16";
}

void count_formulas(Outcome& o) {
  const std::uint64_t dim2[6] = {2, 1, 1, 1, 2, 4};
  int checked = 0;
  auto expect = [&](int n, int k, std::uint64_t want) {
    const std::uint64_t got = largest_d(n, k, jobs()).result.count;
    ++checked;
    if (got != want) {
      o.fail("N at (" + std::to_string(n) + "," + std::to_string(k) + ") is " +
             std::to_string(got) + ", expected " + std::to_string(want));
    }
  };
  for (int n = 6; n <= 16; ++n) expect(n, 2, dim2[n % 6]);
  for (int n = 7; n <= 16; ++n) {
    const int r = n % 7;
    if (r == 0 || r == 2 || r == 3 || r == 5) expect(n, 3, 1);
  }
  for (int n = 3; n <= 16; ++n) expect(n, n - 1, n % 2 ? 1 : n / 2);
  if (o.pass) o.detail << checked << " counts (dimension 2, dimension 3, codimension 1)";
}

void golden_enumerators(Outcome& o) {
  int golden = 0;
  for (const auto& s : golden::six_four_codes()) {
    ++golden;
    if (weight_enumerator(golden::six_four_code(s)) != make_weight_enumerator(6, s.we)) {
      o.fail("[6,4] code " + std::to_string(golden));
    }
  }
  for (int t = 0; t <= 1; ++t) {
    int i = 0;
    for (const auto& fam : golden::dim3_families(t)) {
      ++i;
      ++golden;
      const LinearCode c = code_dim3(fam.params);
      if (c.length() != fam.length ||
          weight_enumerator(c) != make_weight_enumerator(fam.length, fam.we)) {
        o.fail("dimension 3 family " + std::to_string(i) + " at t = " + std::to_string(t));
      }
    }
  }
  std::mt19937_64 rng(2024);
  int bad = 0;
  for (int trial = 0; trial < 500; ++trial) {
    if (trial % 2 == 0) {
      const Dim2Params p{int(rng() % 8), int(rng() % 8), int(rng() % 8), int(rng() % 2)};
      bad += weight_enumerator(code_dim2(p)) != we_formula_dim2(p);
    } else {
      int v[7];
      for (int& x : v) x = static_cast<int>(rng() % 5);
      const Dim3Params p{v[0], v[1], v[2], v[3], v[4], v[5], v[6], int(rng() % 2)};
      bad += weight_enumerator(code_dim3(p)) != we_formula_dim3(p);
    }
  }
  if (bad) o.fail(std::to_string(bad) + " of 500 random tuples disagree");
  if (o.pass) o.detail << golden << " published enumerators exact; 500 random tuples agree";
}

void cover_identity(Outcome& o) {
  const auto start = Clock::now();
  const auto rows = verify_cover_count_identity(6, jobs());
  const double t = since(start);
  const std::uint64_t want[] = {3, 9, 23, 51, 103, 196};
  std::ostringstream values;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    values << (i ? ", " : "") << r.covers;
    if (!r.pass || r.covers != want[i]) {
      o.fail("m = " + std::to_string(r.m) + ": covers " + std::to_string(r.covers) + ", N(" +
             std::to_string(2 * r.m + 3) + ") " + std::to_string(r.odd_length) + ", N(" +
             std::to_string(2 * r.m + 4) + ") " + std::to_string(r.even_length));
    }
  }
  if (t > kCoverIdentityBudget) o.fail("over budget: " + secs(t));
  if (o.pass) o.detail << "m = 1..6 -> " << values.str() << " on all three sides, " << secs(t);
}

void oracle_equivalence(Outcome& o) {
  int cells = 0;
  for (int n = 1; n <= 7; ++n) {
    for (int k = 1; k <= n; ++k) {
      const std::vector<int> weights = oracle::brute_lcd_classes(n, k);
      const int top = *std::max_element(weights.begin(), weights.end());
      for (int d = 1; d <= top + 1; ++d) {
        const auto want = static_cast<std::uint64_t>(
            std::count_if(weights.begin(), weights.end(), [d](int w) { return w >= d; }));
        const std::uint64_t got = classify_lcd(n, k, d).count;
        ++cells;
        if (got != want) {
          o.fail("N(" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) +
                 ") = " + std::to_string(got) + ", brute force " + std::to_string(want));
        }
      }
    }
  }
  std::mt19937_64 rng(7);
  int disagreements = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 6);
    const int k = 1 + static_cast<int>(rng() % (n - 1));
    const LinearCode a = oracle::random_code(rng, n, k);
    const LinearCode b = trial % 2 ? oracle::random_code(rng, n, k)
                                   : shuffle_columns(a, oracle::random_permutation(rng, n));
    disagreements += are_equivalent(a, b) != oracle::brute_equivalent(a, b);
  }
  if (disagreements) o.fail(std::to_string(disagreements) + " of 100 equivalence pairs disagree");
  if (o.pass) o.detail << cells << " (n,k,d) counts match brute force; 100/100 pairs agree";
}

// Each part records its own failures; the summary lists the part counts.
void property_suites(Outcome& o) {
  std::mt19937_64 rng(99);
  int massey_bad = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const int k = 1 + static_cast<int>(rng() % (n - 1));
    const LinearCode c = oracle::random_code(rng, n, k);
    const LinearCode h = dual(c);
    const BinaryMatrix& g = c.generator();
    const BinaryMatrix& p = h.generator();
    const oracle::Rows crow(g.row_words().begin(), g.row_words().end());
    const oracle::Rows hrow(p.row_words().begin(), p.row_words().end());
    const bool i = oracle::trivial_hull(crow, n);
    const bool ii = oracle::trivial_hull(hrow, n);
    const bool iii = is_nonsingular(mat_mul(g, g.transpose()));
    const bool iv = is_nonsingular(mat_mul(p, p.transpose()));
    massey_bad += !(i == ii && ii == iii && iii == iv && iv == is_lcd(c));
  }
  if (massey_bad) o.fail(std::to_string(massey_bad) + " codes break the LCD equivalences");

  int cover_bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const KCover y = oracle::random_cover(rng, 1 + static_cast<int>(rng() % 6),
                                          1 + static_cast<int>(rng() % 5));
    const LinearCode c = cover_code(y, 2);
    cover_bad += !(is_lcd(c) && min_weight(dual(c)) == 2);
  }
  if (cover_bad) o.fail(std::to_string(cover_bad) + " cover codes are not LCD with dual distance 2");

  int family_checks = 0, family_bad = 0;
  auto check = [&](const LinearCode& x, const LinearCode& y) {
    ++family_checks;
    family_bad += !are_equivalent(x, y);
  };
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (int c = 0; c <= 2; ++c) {
        for (int delta = 0; delta <= 1; ++delta) {
          check(code_dim2({a, b, c, delta}), code_dim2({a, c, b, delta}));
        }
        check(code_dim2({a, b, c, 1}), code_dim2({b, a, c, 1}));
        check(code_dim2({a, b, c, 1}), code_dim2({c, b, a, 1}));
      }
    }
  }
  std::vector<int> v(7, 0);
  for (int idx = 0; idx < 2187; ++idx) {
    for (int j = 0, r = idx; j < 7; ++j, r /= 3) v[j] = r % 3;
    const int a = v[0], b = v[1], c = v[2], d = v[3], e = v[4], f = v[5], g = v[6];
    const LinearCode c0 = code_dim3({a, b, c, d, e, f, g, 0});
    for (const Dim3Params& q :
         {Dim3Params{a, b, d, c, e, g, f, 0}, Dim3Params{a, c, b, d, f, e, g, 0},
          Dim3Params{a, c, d, b, f, g, e, 0}, Dim3Params{a, d, b, c, g, e, f, 0},
          Dim3Params{a, d, c, b, g, f, e, 0}}) {
      check(c0, code_dim3(q));
    }
    const LinearCode c1 = code_dim3({a, b, c, d, e, f, g, 1});
    check(c1, code_dim3({a, b, d, c, e, g, f, 1}));
    check(c0, code_dim3_raw({2 * a, 2 * b + 1, 2 * c + 1, 2 * d + 1, 2 * e, 2 * f, 2 * g, 0}));
    check(c1, code_dim3_raw({2 * a, 2 * b + 1, 2 * c + 1, 2 * d + 1, 2 * e + 1, 2 * f, 2 * g, 0}));
  }
  for (int t = 1; t <= 2; ++t) {
    const int s = 2 * t;
    check(code_dim3_raw({s, s - 1, s + 1, s + 1, s - 1, s, s, 0}),
          code_dim3_raw({s, s - 1, s - 1, s + 1, s + 1, s, s, 0}));
    check(code_dim3_raw({s, s + 1, s - 1, s + 1, s + 1, s, s, 0}),
          code_dim3_raw({s, s + 1, s + 1, s + 1, s - 1, s, s, 0}));
  }
  if (family_bad) o.fail(std::to_string(family_bad) + " family equivalences fail");

  int sets = 0, sets_bad = 0;
  for (int n = 4; n <= 23; ++n) {
    if (n == 5) continue;
    auto got = solve_params_dim2(n);
    auto want = golden::dim2_solutions(n);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    ++sets;
    sets_bad += got != want;
  }
  for (int t = 0; t <= 3; ++t) {
    for (const auto& cs : golden::dim3_cases(t)) {
      auto got = solve_params_dim3(cs.n, cs.alpha);
      std::sort(got.begin(), got.end());
      ++sets;
      sets_bad += got != cs.solutions;
    }
  }
  if (sets_bad) o.fail(std::to_string(sets_bad) + " parameter sets differ");

  if (o.pass) {
    o.detail << "1000 random codes, 200 covers, " << family_checks << " family equivalences, "
             << sets << " parameter sets";
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    const char* title;
    std::function<void(Outcome&)> body;
  };
  const std::vector<Criterion> criteria = {
      {"AC1", "table reproduction, n <= 12", table_core},
      {"AC2", "table reproduction, n <= 16", table_full},
      {"AC3", "distance formulas for k = 2, 3", distance_formulas},
      {"AC4", "uniqueness and count results", count_formulas},
      {"AC5", "golden weight enumerators", golden_enumerators},
      {"AC6", "cover-count identity, m <= 6", cover_identity},
      {"AC7", "brute-force oracle at n <= 7", oracle_equivalence},
      {"AC8", "property suites", property_suites},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = Clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << "  " << c.title << ": "
              << o.detail.str() << " [" << secs(since(start)) << "]" << std::endl;
  }
  std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria pass")
            << std::endl;
  return failures ? 1 : 0;
}
