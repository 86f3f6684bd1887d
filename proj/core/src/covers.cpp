#include "lcd/covers.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace lcd {

namespace {

std::uint64_t column_mask_repeat(std::uint64_t set, int m, int copies, int offset) {
  std::uint64_t out = 0;
  for (int c = 0; c < copies; ++c) out |= set << (offset + c * m);
  return out;
}

// d(n,2): floor(2n/3), one less when n = 0 or 5 (mod 6).
int d_dim2(int n) {
  const int r = n % 6;
  return 2 * n / 3 - ((r == 0 || r == 5) ? 1 : 0);
}

// Orderly enumeration of nondecreasing incidence sequences that are least in
// their orbit under permutations of the k set indices.
class CoverWalker {
 public:
  CoverWalker(int m, int k) : m_(m), k_(k) {
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::vector<std::uint32_t> image(1U << k, 0);
      for (std::uint32_t v = 0; v < image.size(); ++v) {
        std::uint32_t w = 0;
        for (int i = 0; i < k; ++i) {
          if ((v >> i) & 1U) w |= 1U << perm[i];
        }
        image[v] = w;
      }
      bool identity = true;
      for (std::uint32_t v = 0; v < image.size(); ++v) identity = identity && image[v] == v;
      if (!identity) images_.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
    seq_.reserve(m);
  }

  template <typename Visit>
  void run(Visit&& visit) {
    extend(1, visit);
  }

 private:
  // A prefix is dead if some relabelling sorts it strictly below itself; the
  // least elements of any completion can only be smaller still.
  bool prefix_is_least() {
    const std::size_t len = seq_.size();
    scratch_.resize(len);
    for (const auto& image : images_) {
      for (std::size_t i = 0; i < len; ++i) scratch_[i] = image[seq_[i]];
      std::sort(scratch_.begin(), scratch_.end());
      if (std::lexicographical_compare(scratch_.begin(), scratch_.end(), seq_.begin(),
                                       seq_.end())) {
        return false;
      }
    }
    return true;
  }

  template <typename Visit>
  void extend(std::uint32_t lo, Visit& visit) {
    if (static_cast<int>(seq_.size()) == m_) {
      visit(seq_);
      return;
    }
    const std::uint32_t top = 1U << k_;
    for (std::uint32_t v = lo; v < top; ++v) {
      seq_.push_back(v);
      if (prefix_is_least()) extend(v, visit);
      seq_.pop_back();
    }
  }

  int m_;
  int k_;
  std::vector<std::vector<std::uint32_t>> images_;
  std::vector<std::uint32_t> seq_;
  std::vector<std::uint32_t> scratch_;
};

void check_cover_args(int m, int k) {
  if (m < 1 || k < 1 || k > 16 || m > kMaxLength) {
    throw std::invalid_argument("disordered covers need 1 <= m <= 64, 1 <= k <= 16");
  }
}

void check_nonnegative(std::initializer_list<int> values, int delta) {
  for (int v : values) {
    if (v < 0) throw std::invalid_argument("code family parameters must be >= 0");
  }
  if (delta != 0 && delta != 1) throw std::invalid_argument("delta must be 0 or 1");
}

BinaryMatrix block_from_counts(int rows, const std::vector<std::pair<std::uint64_t, int>>& spec) {
  std::vector<std::uint64_t> cols;
  for (const auto& [col, count] : spec) cols.insert(cols.end(), count, col);
  return BinaryMatrix::from_columns(rows, cols);
}

// (I_r | M | M | extra) as columns.
LinearCode doubled_code(int rows, const BinaryMatrix& block, std::uint64_t extra, bool with_extra) {
  std::vector<std::uint64_t> cols;
  for (int i = 0; i < rows; ++i) cols.push_back(std::uint64_t{1} << i);
  const std::vector<std::uint64_t> mcols = block.column_words();
  cols.insert(cols.end(), mcols.begin(), mcols.end());
  cols.insert(cols.end(), mcols.begin(), mcols.end());
  if (with_extra) cols.push_back(extra);
  if (static_cast<int>(cols.size()) > kMaxLength) {
    throw std::invalid_argument("code length exceeds 64");
  }
  return LinearCode(BinaryMatrix::from_columns(rows, cols));
}

}  // namespace

void KCover::validate() const {
  if (m < 0 || m > kMaxLength) throw std::invalid_argument("cover ground set size out of range");
  std::uint64_t all = 0;
  for (std::uint64_t s : sets) {
    if (s & ~low_mask(m)) throw std::invalid_argument("cover set has points beyond m");
    all |= s;
  }
  if (all != low_mask(m)) throw std::invalid_argument("cover sets do not cover {1..m}");
}

LinearCode cover_code(const KCover& y, int ell) {
  y.validate();
  if (ell < 2 || ell % 2 != 0) throw std::invalid_argument("cover_code needs an even ell >= 2");
  const int k = y.k();
  if (k < 1) throw std::invalid_argument("cover_code needs at least one set");
  const long long n = static_cast<long long>(ell) * y.m + k;
  if (n > kMaxLength) throw std::invalid_argument("cover code length exceeds 64");
  std::vector<std::uint64_t> rows(k);
  for (int i = 0; i < k; ++i) {
    rows[i] = (std::uint64_t{1} << i) | column_mask_repeat(y.sets[i], y.m, ell, k);
  }
  return LinearCode(BinaryMatrix(static_cast<int>(n), std::move(rows)));
}

LinearCode cover_code_extended(const KCover& y) {
  const int k = y.k();
  if (k != 2 && k != 3) throw std::invalid_argument("cover_code_extended needs k = 2 or 3");
  const LinearCode base = cover_code(y, 2);
  const int n = base.length() + 1;
  if (n > kMaxLength) throw std::invalid_argument("cover code length exceeds 64");
  std::vector<std::uint64_t> rows(base.generator().row_words().begin(),
                                  base.generator().row_words().end());
  const std::uint64_t last = std::uint64_t{1} << (n - 1);
  if (k == 2) {
    rows[0] |= last;
    rows[1] |= last;
  } else {
    rows[1] |= last;
    rows[2] |= last;
  }
  return LinearCode(BinaryMatrix(n, std::move(rows)));
}

std::vector<KCover> enumerate_disordered_covers(int m, int k) {
  check_cover_args(m, k);
  std::vector<KCover> out;
  CoverWalker walker(m, k);
  walker.run([&](const std::vector<std::uint32_t>& seq) {
    KCover y{m, std::vector<std::uint64_t>(k, 0)};
    for (int p = 0; p < m; ++p) {
      for (int i = 0; i < k; ++i) {
        if ((seq[p] >> i) & 1U) y.sets[i] |= std::uint64_t{1} << p;
      }
    }
    out.push_back(std::move(y));
  });
  return out;
}

std::uint64_t count_disordered_covers(int m, int k) {
  check_cover_args(m, k);
  std::uint64_t count = 0;
  CoverWalker walker(m, k);
  walker.run([&](const std::vector<std::uint32_t>&) { ++count; });
  return count;
}

BinaryMatrix dim2_block(int a, int b, int c) {
  return block_from_counts(2, {{0b11, a}, {0b01, b}, {0b10, c}});
}

LinearCode code_dim2(const Dim2Params& p) {
  check_nonnegative({p.a, p.b, p.c}, p.delta);
  return doubled_code(2, dim2_block(p.a, p.b, p.c), 0b11, p.delta == 1);
}

WeightEnumerator we_formula_dim2(const Dim2Params& p) {
  check_nonnegative({p.a, p.b, p.c}, p.delta);
  const int n = 2 * (p.a + p.b + p.c) + 2 + p.delta;
  return make_weight_enumerator(n, {{0, 1},
                                    {1 + 2 * (p.a + p.b) + p.delta, 1},
                                    {1 + 2 * (p.a + p.c) + p.delta, 1},
                                    {2 + 2 * (p.b + p.c), 1}});
}

BinaryMatrix dim3_block(int a, int b, int c, int d, int e, int f, int g) {
  // Bit 0 is the top row.
  return block_from_counts(3, {{0b111, a},
                               {0b001, b},
                               {0b010, c},
                               {0b100, d},
                               {0b110, e},
                               {0b101, f},
                               {0b011, g}});
}

LinearCode code_dim3(const Dim3Params& p) {
  check_nonnegative({p.a, p.b, p.c, p.d, p.e, p.f, p.g}, p.delta);
  return doubled_code(3, dim3_block(p.a, p.b, p.c, p.d, p.e, p.f, p.g), 0b110,
                      p.delta == 1);
}

LinearCode code_dim3_raw(const Dim3Params& p) {
  check_nonnegative({p.a, p.b, p.c, p.d, p.e, p.f, p.g}, p.delta);
  const BinaryMatrix block = dim3_block(p.a, p.b, p.c, p.d, p.e, p.f, p.g);
  if (rank(block) != 3) throw std::invalid_argument("code_dim3_raw: block has rank < 3");
  return LinearCode(block);
}

WeightEnumerator we_formula_dim3(const Dim3Params& p) {
  check_nonnegative({p.a, p.b, p.c, p.d, p.e, p.f, p.g}, p.delta);
  const int dl = p.delta;
  const int n = 2 * (p.a + p.b + p.c + p.d + p.e + p.f + p.g) + 3 + dl;
  return make_weight_enumerator(n, {{0, 1},
                                    {1 + 2 * (p.a + p.b + p.f + p.g), 1},
                                    {1 + 2 * (p.a + p.c + p.e + p.g) + dl, 1},
                                    {1 + 2 * (p.a + p.d + p.e + p.f) + dl, 1},
                                    {2 + 2 * (p.b + p.c + p.e + p.f) + dl, 1},
                                    {2 + 2 * (p.b + p.d + p.e + p.g) + dl, 1},
                                    {2 + 2 * (p.c + p.d + p.f + p.g), 1},
                                    {3 + 2 * (p.a + p.b + p.c + p.d), 1}});
}

std::vector<Dim2Params> solve_params_dim2(int n) {
  if (n < 4) throw std::invalid_argument("solve_params_dim2 needs n >= 4");
  const int delta = n % 2;
  const int s = (n - 2 - delta) / 2;
  const int dn = d_dim2(n);
  std::vector<Dim2Params> out;
  for (int a = 0; a <= s; ++a) {
    for (int b = 0; a + b <= s; ++b) {
      const int c = s - a - b;
      if (b > c) continue;
      if (dn <= 1 + 2 * (a + b) + delta && dn <= 1 + 2 * (a + c) + delta &&
          dn <= 2 + 2 * (b + c)) {
        out.push_back({a, b, c, delta});
      }
    }
  }
  return out;
}

namespace {

bool meets_dim3(const Dim3Params& p, int alpha) {
  const int dl = p.delta;
  return alpha <= 1 + 2 * (p.a + p.b + p.f + p.g) &&
         alpha <= 1 + 2 * (p.a + p.c + p.e + p.g) + dl &&
         alpha <= 1 + 2 * (p.a + p.d + p.e + p.f) + dl &&
         alpha <= 2 + 2 * (p.b + p.c + p.e + p.f) + dl &&
         alpha <= 2 + 2 * (p.b + p.d + p.e + p.g) + dl &&
         alpha <= 2 + 2 * (p.c + p.d + p.f + p.g) &&
         alpha <= 3 + 2 * (p.a + p.b + p.c + p.d);
}

bool ordered_dim3(const Dim3Params& p) {
  return p.delta == 0 ? (p.b <= p.c && p.c <= p.d) : p.c <= p.d;
}

int floor_div(int x, int y) { return x >= 0 ? x / y : -((-x + y - 1) / y); }
int ceil_div(int x, int y) { return -floor_div(-x, y); }

struct Interval {
  int lo;
  int hi;
};

// Scans a..g over per-variable intervals, all summing to m.
std::vector<Dim3Params> scan_dim3(int m, int delta, int alpha, const Interval (&iv)[7]) {
  std::vector<Dim3Params> out;
  int v[7];
  auto rec = [&](auto&& self, int i, int remaining) -> void {
    if (i == 6) {
      if (remaining < iv[6].lo || remaining > iv[6].hi) return;
      v[6] = remaining;
      const Dim3Params p{v[0], v[1], v[2], v[3], v[4], v[5], v[6], delta};
      if (ordered_dim3(p) && meets_dim3(p, alpha)) out.push_back(p);
      return;
    }
    const int hi = std::min(iv[i].hi, remaining);
    for (int x = std::max(iv[i].lo, 0); x <= hi; ++x) {
      v[i] = x;
      self(self, i + 1, remaining - x);
    }
  };
  rec(rec, 0, m);
  return out;
}

void check_dim3_args(int n, int alpha) {
  if (n < 5 || alpha < 1) throw std::invalid_argument("solve_params_dim3 needs n >= 5, alpha >= 1");
}

}  // namespace

std::vector<Dim3Params> solve_params_dim3(int n, int alpha) {
  check_dim3_args(n, alpha);
  const int delta = (n - 3) % 2;
  const int m = (n - 3 - delta) / 2;
  // Interval bounds scaled by 4 to stay in integers.
  const Interval r1{ceil_div(4 * alpha - 4 * m - 6 - 2 * delta, 4),
                    floor_div(4 * m - 3 * alpha + 6 + 2 * delta, 4)};
  const Interval r2{ceil_div(4 * alpha - 4 * m - 8 - 2 * delta, 4),
                    floor_div(4 * m - 3 * alpha + 4 + 2 * delta, 4)};
  // delta = 0: a,e,f,g in R1 and b,c,d in R2; delta = 1 moves e into R2.
  const Interval iv[7] = {r1, r2, r2, r2, delta == 0 ? r1 : r2, r1, r1};
  return scan_dim3(m, delta, alpha, iv);
}

std::vector<Dim3Params> solve_params_dim3_exhaustive(int n, int alpha) {
  check_dim3_args(n, alpha);
  const int delta = (n - 3) % 2;
  const int m = (n - 3 - delta) / 2;
  const Interval all{0, m};
  const Interval iv[7] = {all, all, all, all, all, all, all};
  return scan_dim3(m, delta, alpha, iv);
}

}  // namespace lcd
