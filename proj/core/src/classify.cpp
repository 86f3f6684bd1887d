#include "lcd/classify.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <unordered_map>
#include <utility>

#include "lcd/covers.hpp"
#include "lcd/equivalence.hpp"

namespace lcd {

namespace {

using Clock = std::chrono::steady_clock;

// (d, N) by n = 3..16, k = 2..n-1.
constexpr std::array<std::array<std::pair<int, int>, 14>, 14> kTable = {{
    {{{2, 1}}},
    {{{2, 2}, {1, 2}}},
    {{{2, 3}, {2, 1}, {2, 1}}},
    {{{3, 2}, {2, 3}, {2, 4}, {1, 3}}},
    {{{4, 1}, {3, 1}, {2, 9}, {2, 2}, {2, 1}}},
    {{{5, 1}, {3, 3}, {3, 1}, {2, 9}, {2, 6}, {1, 4}}},
    {{{6, 1}, {4, 1}, {4, 1}, {3, 2}, {2, 23}, {2, 3}, {2, 1}}},
    {{{6, 2}, {5, 1}, {4, 5}, {3, 11}, {3, 2}, {2, 23}, {2, 9}, {1, 5}}},
    {{{6, 4}, {5, 6}, {4, 20}, {4, 4}, {4, 1}, {3, 1}, {2, 51}, {2, 4}, {2, 1}}},
    {{{7, 2}, {6, 1}, {5, 6}, {4, 37}, {4, 11}, {3, 22}, {2, 396}, {2, 51}, {2, 12}, {1, 6}}},
    {{{8, 1}, {6, 6}, {6, 2}, {5, 5}, {4, 146}, {4, 4}, {3, 27}, {2, 619}, {2, 103}, {2, 5},
      {2, 1}}},
    {{{9, 1}, {7, 1}, {6, 16}, {5, 101}, {5, 4}, {4, 301}, {4, 8}, {3, 31}, {2, 1370},
      {2, 103}, {2, 16}, {1, 7}}},
    {{{10, 1}, {7, 8}, {6, 89}, {6, 10}, {6, 2}, {5, 1}, {4, 985}, {4, 2}, {3, 34},
      {2, 2143}, {2, 196}, {2, 7}, {2, 1}}},
    {{{10, 2}, {8, 1}, {7, 7}, {6, 283}, {6, 60}, {5, 1596}, {5, 1}, {4, 1772}, {4, 7},
      {3, 34}, {2, 4389}, {2, 196}, {2, 20}, {1, 8}}},
}};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void check_params(int n, int k, int d) {
  if (k < 1 || k > n || n > kMaxLength || d < 1) {
    throw std::invalid_argument("classification needs 1 <= k <= n <= 64 and d >= 1");
  }
}

// Runs fn(i) for i in [0, count) over `jobs` threads, contiguous chunks.
template <typename Fn>
void parallel_chunks(std::size_t count, int jobs, Fn&& fn) {
  const std::size_t workers = std::clamp<std::size_t>(jobs < 1 ? 1 : jobs, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    fn(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t step = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t lo = std::min(count, w * step);
    const std::size_t hi = std::min(count, lo + step);
    pool.emplace_back([&fn, lo, hi, w] { fn(lo, hi, w); });
  }
  for (auto& t : pool) t.join();
}

// Canonical key of the code whose parity-check matrix has columns `h`,
// labelled on the same side canonical_form would pick.
CodeKey parity_key(std::span<const std::uint64_t> h, int r, CanonicalStats* stats) {
  const int len = static_cast<int>(h.size());
  const int dim = len - r;
  if (r < dim) {
    Labelling lab = canonical_labelling(h, r, stats);
    return {len, dim, std::move(lab.columns)};
  }
  const BinaryMatrix g = null_space_basis(BinaryMatrix::from_columns(r, h));
  Labelling lab = canonical_labelling(g.column_words(), dim, stats);
  return {len, dim, std::move(lab.columns)};
}

LinearCode code_from_parity(std::span<const std::uint64_t> h, int r) {
  return LinearCode(null_space_basis(BinaryMatrix::from_columns(r, h)));
}

// Marks every word of GF(2)^r that is a sum of at most `depth` of `cols`.
void mark_short_sums(std::span<const std::uint64_t> cols, int r, int depth,
                     std::vector<std::uint64_t>& seen) {
  const std::size_t words = ((std::size_t{1} << r) + 63) / 64;
  seen.assign(words, 0);
  if (depth < 0) return;
  auto test_set = [&](std::uint64_t x) {
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (seen[x >> 6] & bit) return false;
    seen[x >> 6] |= bit;
    return true;
  };
  std::vector<std::uint64_t> distinct(cols.begin(), cols.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<std::uint64_t> frontier{0};
  test_set(0);
  for (int step = 0; step < depth && !frontier.empty(); ++step) {
    std::vector<std::uint64_t> next;
    for (std::uint64_t x : frontier) {
      for (std::uint64_t c : distinct) {
        if (test_set(x ^ c)) next.push_back(x ^ c);
      }
    }
    frontier.swap(next);
  }
}

bool gram_nonsingular(std::span<const std::uint64_t> h, int r) {
  std::vector<std::uint64_t> gram(r, 0);
  for (std::uint64_t c : h) {
    for (std::uint64_t bits = c; bits; bits &= bits - 1) gram[std::countr_zero(bits)] ^= c;
  }
  return rank(BinaryMatrix(r, std::move(gram))) == r;
}

struct Candidate {
  CodeKey key;
  std::vector<std::uint64_t> cols;
};

struct Level {
  std::vector<std::vector<std::uint64_t>> nodes;
};

ClassificationResult finish(int n, int k, int d, std::vector<LinearCode> codes,
                            SearchStats stats, Clock::time_point start) {
  std::vector<WeightEnumerator> wes;
  wes.reserve(codes.size());
  for (const auto& c : codes) wes.push_back(weight_enumerator(c));
  std::vector<std::size_t> order(codes.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return presentation_less(codes[a], wes[a], codes[b], wes[b]);
  });
  ClassificationResult out;
  out.n = n;
  out.k = k;
  out.d = d;
  for (std::size_t i : order) out.codes.push_back(std::move(codes[i]));
  out.count = out.codes.size();
  out.stats = stats;
  out.stats.wall_seconds = seconds_since(start);
  return out;
}

ClassificationResult classify_columns(int n, int k, int d, int jobs) {
  const auto start = Clock::now();
  const int r = n - k;
  SearchStats stats;
  if (r == 0) {
    std::vector<LinearCode> codes;
    if (d <= 1) codes.push_back(LinearCode::full(n));
    return finish(n, k, d, std::move(codes), stats, start);
  }
  if (r > 24) throw std::invalid_argument("column augmentation needs n - k <= 24");

  // Seeds: one [r+1, 1, w] code per weight w >= d.
  std::vector<std::vector<std::uint64_t>> level;
  for (int w = std::max(d, 1); w <= r + 1; ++w) {
    const BinaryMatrix gen(r + 1, std::vector<std::uint64_t>{low_mask(w)});
    level.push_back(null_space_basis(gen).column_words());
    ++stats.nodes;
  }

  for (int len = r + 2; len <= n; ++len) {
    const bool last = len == n;
    std::size_t workers = static_cast<std::size_t>(std::max(jobs, 1));
    std::vector<std::vector<Candidate>> found(workers);
    std::vector<CanonicalStats> cstats(workers);
    std::vector<std::uint64_t> tests(workers, 0);
    parallel_chunks(level.size(), jobs, [&](std::size_t lo, std::size_t hi, std::size_t w) {
      std::unordered_map<CodeKey, std::size_t, CodeKeyHash> local;
      std::vector<std::uint64_t> blocked;
      std::vector<std::uint64_t> child;
      for (std::size_t i = lo; i < hi; ++i) {
        const auto& parent = level[i];
        mark_short_sums(parent, r, d - 2, blocked);
        child.assign(parent.begin(), parent.end());
        child.push_back(0);
        const std::uint64_t total = std::uint64_t{1} << r;
        for (std::uint64_t h = 0; h < total; ++h) {
          if ((blocked[h >> 6] >> (h & 63)) & 1U) continue;
          child.back() = h;
          if (last && !gram_nonsingular(child, r)) continue;
          CodeKey key = parity_key(child, r, &cstats[w]);
          ++tests[w];
          if (local.try_emplace(key, found[w].size()).second) {
            found[w].push_back({std::move(key), child});
          }
        }
      }
    });

    std::unordered_map<CodeKey, std::size_t, CodeKeyHash> seen;
    std::vector<Candidate> merged;
    for (auto& part : found) {
      for (auto& cand : part) {
        if (seen.try_emplace(cand.key, merged.size()).second) merged.push_back(std::move(cand));
      }
    }
    std::sort(merged.begin(), merged.end(),
              [](const Candidate& a, const Candidate& b) { return a.key < b.key; });
    level.clear();
    for (auto& cand : merged) level.push_back(std::move(cand.cols));
    for (std::size_t w = 0; w < workers; ++w) {
      stats.nodes += cstats[w].nodes;
      stats.equivalence_tests += tests[w];
    }
    if (level.empty()) break;
  }

  std::vector<LinearCode> codes;
  if (k == 1) {
    // The seeds are already the final codes.
    for (const auto& h : level) {
      if (gram_nonsingular(h, r)) codes.push_back(canonical_form(code_from_parity(h, r)).code);
    }
  } else {
    for (const auto& h : level) codes.push_back(canonical_form(code_from_parity(h, r)).code);
  }
  return finish(n, k, d, std::move(codes), stats, start);
}

// Row i of A packs into the generator with column 1 of A as the most
// significant bit of its integer value.
std::uint64_t place_row(std::uint32_t value, int k, int r) {
  std::uint64_t bits = 0;
  for (int j = 0; j < r; ++j) {
    if ((value >> (r - 1 - j)) & 1U) bits |= std::uint64_t{1} << (k + j);
  }
  return bits;
}

class RowSearch {
 public:
  RowSearch(int n, int k, int d) : n_(n), k_(k), r_(n - k), d_(d) {
    for (std::uint32_t v = 0; v < (1U << r_); ++v) {
      if (std::popcount(v) >= d - 1) candidates_.push_back(v);
    }
    rows_.reserve(k);
  }

  // Explores the subtree under first row candidates_[first_lo, first_hi).
  void run(std::size_t first_lo, std::size_t first_hi) {
    sums_.assign(1, {0, 0});
    for (std::size_t i = first_lo; i < first_hi; ++i) try_row(i);
  }

  std::size_t first_row_choices() const { return candidates_.size(); }

  std::unordered_map<CodeKey, LinearCode, CodeKeyHash> found;
  std::uint64_t nodes = 0;
  std::uint64_t tests = 0;

 private:
  struct Sum {
    std::uint32_t value;
    int size;
  };

  void try_row(std::size_t idx) {
    const std::uint32_t v = candidates_[idx];
    // Codeword from rows S plus the new row has weight |S| + 1 + wt(sum).
    for (const Sum& s : sums_) {
      if (s.size + 1 + std::popcount(s.value ^ v) < d_) return;
    }
    ++nodes;
    rows_.push_back(v);
    const std::size_t before = sums_.size();
    if (static_cast<int>(rows_.size()) < k_) {
      for (std::size_t i = 0; i < before; ++i) {
        if (sums_[i].size + 1 <= d_ - 2) sums_.push_back({sums_[i].value ^ v, sums_[i].size + 1});
      }
      const std::size_t next = d_ >= 3 ? idx + 1 : idx;
      for (std::size_t j = next; j < candidates_.size(); ++j) try_row(j);
      sums_.resize(before);
    } else {
      leaf();
    }
    rows_.pop_back();
  }

  void leaf() {
    std::vector<std::uint64_t> gen(k_);
    for (int i = 0; i < k_; ++i) gen[i] = (std::uint64_t{1} << i) | place_row(rows_[i], k_, r_);
    LinearCode code{BinaryMatrix(n_, std::move(gen))};
    if (!is_lcd(code)) return;
    ++tests;
    CanonicalForm cf = canonical_form(code);
    found.try_emplace(std::move(cf.key), std::move(cf.code));
  }

  int n_, k_, r_, d_;
  std::vector<std::uint32_t> candidates_;
  std::vector<std::uint32_t> rows_;
  std::vector<Sum> sums_;
};

ClassificationResult classify_rows(int n, int k, int d, int jobs) {
  const auto start = Clock::now();
  const int r = n - k;
  SearchStats stats;
  if (r == 0) {
    std::vector<LinearCode> codes;
    if (d <= 1) codes.push_back(LinearCode::full(n));
    return finish(n, k, d, std::move(codes), stats, start);
  }
  if (r > 24) throw std::invalid_argument("ordered rows needs n - k <= 24");

  const std::size_t first = RowSearch(n, k, d).first_row_choices();
  const std::size_t workers = static_cast<std::size_t>(std::max(jobs, 1));
  std::vector<RowSearch> searches;
  for (std::size_t w = 0; w < workers; ++w) searches.emplace_back(n, k, d);
  // Interleave first rows so early (heavier) subtrees spread across workers.
  parallel_chunks(workers, jobs, [&](std::size_t lo, std::size_t hi, std::size_t) {
    for (std::size_t w = lo; w < hi; ++w) {
      for (std::size_t i = w; i < first; i += workers) searches[w].run(i, i + 1);
    }
  });

  std::unordered_map<CodeKey, LinearCode, CodeKeyHash> merged;
  for (auto& s : searches) {
    stats.nodes += s.nodes;
    stats.equivalence_tests += s.tests;
    for (auto& [key, code] : s.found) merged.try_emplace(key, std::move(code));
  }
  std::vector<LinearCode> codes;
  for (auto& [key, code] : merged) codes.push_back(std::move(code));
  return finish(n, k, d, std::move(codes), stats, start);
}

}  // namespace

std::string to_string(DSource s) {
  switch (s) {
    case DSource::Formula: return "formula";
    case DSource::Table: return "table";
    case DSource::Computed: return "computed";
  }
  return "unknown";
}

std::optional<KnownD> lookup_d(int n, int k) {
  if (k < 1 || k > n) return std::nullopt;
  if (k == n) return KnownD{1, DSource::Formula};
  if (k == 1) return KnownD{n % 2 ? n : n - 1, DSource::Formula};
  if (k == n - 1) return KnownD{n % 2 ? 2 : 1, DSource::Formula};
  if (k == 2) {
    const int rem = n % 6;
    return KnownD{2 * n / 3 - ((rem == 0 || rem == 5) ? 1 : 0), DSource::Formula};
  }
  if (k == 3) {
    const int rem = n % 7;
    return KnownD{4 * n / 7 - ((rem == 3 || rem == 5) ? 0 : 1), DSource::Formula};
  }
  if (auto e = table_entry(n, k)) return KnownD{e->d, DSource::Table};
  return std::nullopt;
}

std::optional<int> d_formula(int n, int k) {
  if (auto known = lookup_d(n, k)) return known->d;
  return std::nullopt;
}

std::optional<TableEntry> table_entry(int n, int k) {
  if (n < 3 || n > 16 || k < 2 || k > n - 1) return std::nullopt;
  const auto [d, count] = kTable[n - 3][k - 2];
  return TableEntry{d, static_cast<std::uint64_t>(count)};
}

std::string to_string(Strategy s) {
  return s == Strategy::OrderedRows ? "rows" : "columns";
}

Strategy parse_strategy(const std::string& name) {
  if (name == "columns") return Strategy::ColumnAugmentation;
  if (name == "rows") return Strategy::OrderedRows;
  throw std::invalid_argument("unknown strategy '" + name + "' (expected columns or rows)");
}

Strategy default_strategy(int n, int k, int d) {
  // Column augmentation won on every measured cell, by up to four orders of
  // magnitude where n - k is 7 or 8 and the row search has to wade through
  // long runs of sorted candidate rows.
  (void)n;
  (void)k;
  (void)d;
  return Strategy::ColumnAugmentation;
}

ClassificationResult classify_lcd(int n, int k, int d, Strategy strategy, int jobs) {
  check_params(n, k, d);
  return strategy == Strategy::OrderedRows ? classify_rows(n, k, d, jobs)
                                           : classify_columns(n, k, d, jobs);
}

ClassificationResult classify_lcd(int n, int k, int d, int jobs) {
  check_params(n, k, d);
  return classify_lcd(n, k, d, default_strategy(n, k, d), jobs);
}

LargestD largest_d(int n, int k, int jobs) {
  check_params(n, k, 1);
  const auto start = Clock::now();
  SearchStats total;
  for (int d = griesmer_max_d(n, k); d >= 1; --d) {
    ClassificationResult res = classify_lcd(n, k, d, jobs);
    total.nodes += res.stats.nodes;
    total.equivalence_tests += res.stats.equivalence_tests;
    if (res.count > 0) {
      res.stats = total;
      res.stats.wall_seconds = seconds_since(start);
      return {d, std::move(res)};
    }
  }
  // Unreachable: every [n,k] has an LCD code with d >= 1.
  throw std::logic_error("largest_d: no LCD code found");
}

bool TableReport::all_pass() const {
  return std::all_of(cells.begin(), cells.end(), [](const CellReport& c) { return c.pass; });
}

double TableReport::total_seconds() const {
  double t = 0;
  for (const auto& c : cells) t += c.seconds;
  return t;
}

TableReport verify_table(int n_max, const TableOptions& options) {
  if (n_max > 16) throw std::invalid_argument("verify_table covers n <= 16");
  TableReport report;
  for (int n = std::max(options.n_min, 3); n <= n_max; ++n) {
    for (int k = 2; k <= n - 1; ++k) {
      CellReport cell;
      cell.n = n;
      cell.k = k;
      cell.expected = *table_entry(n, k);
      const auto start = Clock::now();
      const LargestD got = largest_d(n, k, options.jobs);
      cell.seconds = seconds_since(start);
      cell.computed = {got.d, got.result.count};
      cell.pass = cell.computed.d == cell.expected.d && cell.computed.count == cell.expected.count;
      cell.over_budget = options.cell_budget_seconds > 0 && cell.seconds > options.cell_budget_seconds;
      report.cells.push_back(cell);
    }
  }
  return report;
}

std::vector<CoverIdentityRow> verify_cover_count_identity(int m_max, int jobs) {
  if (m_max > 11) throw std::invalid_argument("verify_cover_count_identity needs m_max <= 11");
  std::vector<CoverIdentityRow> rows;
  for (int m = 1; m <= m_max; ++m) {
    CoverIdentityRow row;
    row.m = m;
    const LargestD odd = largest_d(2 * m + 3, 2 * m, jobs);
    const LargestD even = largest_d(2 * m + 4, 2 * m + 1, jobs);
    row.odd_length = odd.d == 2 ? odd.result.count : 0;
    row.even_length = even.d == 2 ? even.result.count : 0;
    row.covers = count_disordered_covers(m, 3);
    row.pass = odd.d == 2 && even.d == 2 && row.odd_length == row.covers &&
               row.even_length == row.covers;
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lcd
