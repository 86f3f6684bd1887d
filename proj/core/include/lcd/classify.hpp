#pragma once

// Largest minimum weights d(n,k) of binary LCD codes and isomorph-free
// classification of LCD [n,k,d] codes.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcd/code.hpp"

namespace lcd {

enum class DSource { Formula, Table, Computed };

std::string to_string(DSource s);

struct KnownD {
  int d = 0;
  DSource source = DSource::Formula;
};

/// Closed forms for k in {1, 2, 3, n-1, n}, then the embedded table for
/// 3 <= n <= 16. Empty when neither applies.
std::optional<KnownD> lookup_d(int n, int k);
std::optional<int> d_formula(int n, int k);

struct TableEntry {
  int d = 0;
  std::uint64_t count = 0;
};

/// Published (d(n,k), N(n,k,d(n,k))) for 3 <= n <= 16 and 2 <= k <= n-1.
std::optional<TableEntry> table_entry(int n, int k);

enum class Strategy {
  /// Grow parity-check matrices one column at a time from [n-k+1, 1] seeds,
  /// deduplicating after every extension.
  ColumnAugmentation,
  /// Build (I_k | A) with the rows of A in increasing order.
  OrderedRows,
};

std::string to_string(Strategy s);
/// Accepts "columns" and "rows"; throws std::invalid_argument otherwise.
Strategy parse_strategy(const std::string& name);

/// Strategy used when the caller does not pick one.
Strategy default_strategy(int n, int k, int d);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t equivalence_tests = 0;
  double wall_seconds = 0.0;
};

struct ClassificationResult {
  int n = 0;
  int k = 0;
  int d = 0;
  /// Canonical representatives, sorted by presentation_less.
  std::vector<LinearCode> codes;
  std::uint64_t count = 0;
  SearchStats stats;
};

/// All pairwise inequivalent LCD [n,k] codes with minimum weight >= d.
/// Requires 1 <= k <= n <= 64 and d >= 1; throws std::invalid_argument
/// otherwise. The result does not depend on `jobs`.
ClassificationResult classify_lcd(int n, int k, int d, Strategy strategy, int jobs = 1);
ClassificationResult classify_lcd(int n, int k, int d, int jobs = 1);

struct LargestD {
  int d = 0;
  ClassificationResult result;
};

/// Walks d down from the Griesmer bound until the classification is
/// nonempty.
LargestD largest_d(int n, int k, int jobs = 1);

struct CellReport {
  int n = 0;
  int k = 0;
  TableEntry expected;
  TableEntry computed;
  bool pass = false;
  double seconds = 0.0;
  bool over_budget = false;
};

struct TableReport {
  std::vector<CellReport> cells;
  bool all_pass() const;
  double total_seconds() const;
};

struct TableOptions {
  int n_min = 3;
  int jobs = 1;
  /// Cells slower than this are flagged; 0 disables the check.
  double cell_budget_seconds = 0.0;
};

/// Runs largest_d on every cell 2 <= k <= n-1 with n_min <= n <= n_max and
/// compares with the embedded table. Throws for n_max > 16.
TableReport verify_table(int n_max, const TableOptions& options = {});

struct CoverIdentityRow {
  int m = 0;
  std::uint64_t odd_length = 0;   // N(2m+3, 2m, 2)
  std::uint64_t even_length = 0;  // N(2m+4, 2m+1, 2)
  std::uint64_t covers = 0;       // disordered 3-covers of an m-set
  bool pass = false;
};

/// Checks N(2m+3,2m,2) = N(2m+4,2m+1,2) = number of disordered 3-covers of
/// an unlabelled m-set for 1 <= m <= m_max (m_max <= 11). Each N is a full
/// largest_d classification, so a pass also confirms d = 2 for both cells.
std::vector<CoverIdentityRow> verify_cover_count_identity(int m_max, int jobs = 1);

}  // namespace lcd
