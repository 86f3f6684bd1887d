#include "lcd/code.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace lcd {

namespace {

// Exhaustive sweeps beyond this many message bits are refused.
constexpr int kMaxSweepDimension = 30;

using Binomials = std::array<std::array<std::int64_t, kMaxLength + 1>,
                             kMaxLength + 1>;

const Binomials& binomials() {
  static const Binomials table = [] {
    Binomials t{};
    for (int n = 0; n <= kMaxLength; ++n) {
      t[n][0] = 1;
      for (int r = 1; r <= n; ++r) t[n][r] = t[n - 1][r - 1] + t[n - 1][r];
    }
    return t;
  }();
  return table;
}

std::int64_t krawtchouk(int n, int j, int i) {
  const Binomials& c = binomials();
  std::int64_t sum = 0;
  for (int s = 0; s <= j; ++s) {
    if (s > i || j - s > n - i) continue;
    const std::int64_t term = c[i][s] * c[n - i][j - s];
    sum += (s & 1) ? -term : term;
  }
  return sum;
}

std::vector<std::uint64_t> sweep_weights(const BinaryMatrix& gen) {
  const int k = gen.rows();
  if (k > kMaxSweepDimension) {
    throw std::length_error("code dimension too large for a codeword sweep");
  }
  std::vector<std::uint64_t> counts(gen.cols() + 1, 0);
  std::uint64_t word = 0;
  counts[0] = 1;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t i = 1; i < total; ++i) {
    word ^= gen.row_bits(std::countr_zero(i));
    ++counts[std::popcount(word)];
  }
  return counts;
}

}  // namespace

std::uint64_t WeightEnumerator::total() const {
  std::uint64_t t = 0;
  for (auto a : coeffs) t += a;
  return t;
}

int WeightEnumerator::min_nonzero_weight() const {
  for (int i = 1; i < static_cast<int>(coeffs.size()); ++i) {
    if (coeffs[i]) return i;
  }
  return 0;
}

std::string WeightEnumerator::to_string() const {
  std::string s;
  for (int i = 0; i < static_cast<int>(coeffs.size()); ++i) {
    const std::uint64_t a = coeffs[i];
    if (!a) continue;
    if (!s.empty()) s += " + ";
    if (i == 0) {
      s += std::to_string(a);
      continue;
    }
    if (a != 1) s += std::to_string(a);
    s += 'y';
    if (i > 1) s += '^' + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

WeightEnumerator make_weight_enumerator(
    int n, const std::vector<std::pair<int, std::uint64_t>>& terms) {
  WeightEnumerator we{std::vector<std::uint64_t>(n + 1, 0)};
  for (const auto& [w, a] : terms) {
    if (w < 0 || w > n) throw std::invalid_argument("exponent out of range");
    we.coeffs[w] += a;
  }
  return we;
}

LinearCode::LinearCode(BinaryMatrix generator) : gen_(std::move(generator)) {
  if (rank(gen_) != gen_.rows()) {
    throw std::invalid_argument("generator rows are linearly dependent");
  }
}

LinearCode LinearCode::zero(int n) { return LinearCode(BinaryMatrix(0, n)); }

LinearCode LinearCode::full(int n) {
  return LinearCode(BinaryMatrix::identity(n));
}

LinearCode LinearCode::span(const BinaryMatrix& rows) {
  return LinearCode(reduced_row_echelon(rows));
}

bool LinearCode::same_code(const LinearCode& other) const {
  return length() == other.length() && dimension() == other.dimension() &&
         reduced_row_echelon(gen_) == reduced_row_echelon(other.gen_);
}

bool LinearCode::contains(std::uint64_t word) const {
  const BinaryMatrix rref = reduced_row_echelon(gen_);
  const std::vector<int> pivots = pivot_columns(rref);
  for (int i = 0; i < rref.rows(); ++i) {
    if ((word >> pivots[i]) & 1U) word ^= rref.row_bits(i);
  }
  return word == 0;
}

LinearCode dual(const LinearCode& c) {
  return LinearCode(null_space_basis(c.generator()));
}

bool is_lcd(const LinearCode& c) {
  const BinaryMatrix& g = c.generator();
  return is_nonsingular(mat_mul(g, g.transpose()));
}

WeightEnumerator weight_enumerator(const LinearCode& c) {
  const int n = c.length();
  const int k = c.dimension();
  if (k <= n - k) return WeightEnumerator{sweep_weights(c.generator())};

  // MacWilliams: A_j = 2^{-(n-k)} sum_i B_i K_j(i).
  const std::vector<std::uint64_t> b = sweep_weights(null_space_basis(c.generator()));
  const int r = n - k;
  WeightEnumerator we{std::vector<std::uint64_t>(n + 1, 0)};
  for (int j = 0; j <= n; ++j) {
    __int128 acc = 0;
    for (int i = 0; i <= n; ++i) {
      if (b[i]) acc += static_cast<__int128>(b[i]) * krawtchouk(n, j, i);
    }
    we.coeffs[j] = static_cast<std::uint64_t>(acc >> r);
  }
  return we;
}

int min_weight(const LinearCode& c) {
  if (c.dimension() == 0) {
    throw std::invalid_argument("min_weight: the zero code has no nonzero word");
  }
  return weight_enumerator(c).min_nonzero_weight();
}

bool dual_min_weight_at_least(const LinearCode& c, int t) {
  if (t != 2 && t != 3) {
    throw std::invalid_argument("dual_min_weight_at_least supports t = 2, 3");
  }
  std::vector<std::uint64_t> cols = c.generator().column_words();
  if (std::find(cols.begin(), cols.end(), 0) != cols.end()) return false;
  if (t == 2) return true;
  std::sort(cols.begin(), cols.end());
  return std::adjacent_find(cols.begin(), cols.end()) == cols.end();
}

StandardForm standard_form(const LinearCode& c) {
  const BinaryMatrix rref = reduced_row_echelon(c.generator());
  const std::vector<int> pivots = pivot_columns(rref);
  const int n = c.length();
  std::vector<int> perm(n, -1);
  int next = 0;
  for (int p : pivots) perm[p] = next++;
  for (int j = 0; j < n; ++j) {
    if (perm[j] < 0) perm[j] = next++;
  }
  return {LinearCode(rref.permute_columns(perm)), std::move(perm)};
}

bool is_standard_form(const LinearCode& c) {
  const BinaryMatrix& g = c.generator();
  const std::uint64_t lead = low_mask(g.rows());
  for (int i = 0; i < g.rows(); ++i) {
    if ((g.row_bits(i) & lead) != (std::uint64_t{1} << i)) return false;
  }
  return true;
}

LinearCode delete_identical_column_pair(const LinearCode& c) {
  if (!is_standard_form(c)) {
    throw std::invalid_argument(
        "delete_identical_column_pair: generator is not of the form (I_k | M)");
  }
  const int k = c.dimension();
  const int n = c.length();
  const std::vector<std::uint64_t> cols = c.generator().column_words();
  for (int i = k; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (cols[i] != cols[j]) continue;
      std::vector<int> keep;
      for (int x = 0; x < n; ++x) {
        if (x != i && x != j) keep.push_back(x);
      }
      return LinearCode(c.generator().select_columns(keep));
    }
  }
  throw std::invalid_argument(
      "delete_identical_column_pair: no two columns of M are identical");
}

int griesmer_max_d(int n, int k) {
  if (k < 1 || k > n || n > kMaxLength) {
    throw std::invalid_argument("griesmer_max_d requires 1 <= k <= n <= 64");
  }
  for (int d = n; d >= 1; --d) {
    long long sum = 0;
    for (int i = 0; i < k && sum <= n; ++i) {
      sum += i >= 7 ? 1 : (d + (1LL << i) - 1) >> i;
    }
    if (sum <= n) return d;
  }
  return 1;
}

}  // namespace lcd
