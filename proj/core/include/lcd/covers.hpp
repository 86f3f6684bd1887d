#pragma once

// k-covers of an m-set, the LCD codes built from them, and the dimension 2
// and 3 code families with their closed-form weight enumerators.

#include <cstdint>
#include <vector>

#include "lcd/code.hpp"

namespace lcd {

/// Ordered subsets Y_1..Y_k of {1..m}; point p is bit p-1 of a set word.
struct KCover {
  int m = 0;
  std::vector<std::uint64_t> sets;

  int k() const { return static_cast<int>(sets.size()); }
  /// Throws std::invalid_argument unless every set lies in {1..m} and the
  /// union is all of {1..m}.
  void validate() const;

  friend bool operator==(const KCover&, const KCover&) = default;
};

/// The [ell*m + k, k] code whose row i is e_i followed by ell copies of the
/// characteristic vector of Y_i. ell must be even and positive.
LinearCode cover_code(const KCover& y, int ell = 2);

/// cover_code(y, 2) with one extra column: (1,1)^T for k = 2, (0,1,1)^T for
/// k = 3. Other k are rejected.
LinearCode cover_code_extended(const KCover& y);

/// One k-cover per orbit under permuting the sets and permuting the points.
/// Each cover is the lexicographically least sorted list of point incidence
/// vectors in its orbit; covers come out in increasing order of that list.
std::vector<KCover> enumerate_disordered_covers(int m, int k);
std::uint64_t count_disordered_covers(int m, int k);

struct Dim2Params {
  int a = 0, b = 0, c = 0;
  int delta = 0;
  friend bool operator==(const Dim2Params&, const Dim2Params&) = default;
  friend auto operator<=>(const Dim2Params&, const Dim2Params&) = default;
};

struct Dim3Params {
  int a = 0, b = 0, c = 0, d = 0, e = 0, f = 0, g = 0;
  int delta = 0;
  friend bool operator==(const Dim3Params&, const Dim3Params&) = default;
  friend auto operator<=>(const Dim3Params&, const Dim3Params&) = default;
};

/// Column block with a copies of (1,1), b of (1,0) and c of (0,1).
BinaryMatrix dim2_block(int a, int b, int c);
/// (I_2 | M | M) followed by (1,1)^T when delta = 1.
LinearCode code_dim2(const Dim2Params& p);
WeightEnumerator we_formula_dim2(const Dim2Params& p);

/// Column block with a..g copies of 111, 100, 010, 001, 011, 101, 110 (top
/// row first).
BinaryMatrix dim3_block(int a, int b, int c, int d, int e, int f, int g);
/// (I_3 | M | M) followed by (0,1,1)^T when delta = 1.
LinearCode code_dim3(const Dim3Params& p);
/// The code generated by the block M alone; delta is ignored. Throws if M
/// has rank below 3.
LinearCode code_dim3_raw(const Dim3Params& p);
WeightEnumerator we_formula_dim3(const Dim3Params& p);

/// Every (a,b,c,delta) with 2(a+b+c)+2+delta = n, b <= c, whose code meets
/// the largest minimum weight for [n,2] LCD codes. Sorted ascending.
std::vector<Dim2Params> solve_params_dim2(int n);

/// Every (a..g,delta) with 2(a+..+g)+3+delta = n whose code has minimum
/// weight >= alpha, under the ordering b <= c <= d (delta = 0) or c <= d
/// (delta = 1). Sorted ascending.
std::vector<Dim3Params> solve_params_dim3(int n, int alpha);

/// solve_params_dim3 without the interval pruning: scans every composition.
std::vector<Dim3Params> solve_params_dim3_exhaustive(int n, int alpha);

}  // namespace lcd
