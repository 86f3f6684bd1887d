#pragma once

// Binary linear [n,k] codes: duality, the LCD test, weight distributions and
// the column surgery used to shrink LCD codes.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "lcd/gf2.hpp"

namespace lcd {

/// Weight distribution A_0..A_n of a code.
struct WeightEnumerator {
  std::vector<std::uint64_t> coeffs;

  int length() const { return static_cast<int>(coeffs.size()) - 1; }
  std::uint64_t operator[](int i) const { return coeffs[i]; }
  std::uint64_t total() const;
  /// Smallest i > 0 with A_i != 0, or 0 when the code is {0}.
  int min_nonzero_weight() const;

  /// Ascending powers, e.g. "1 + 6y^2 + 9y^4".
  std::string to_string() const;

  friend auto operator<=>(const WeightEnumerator&,
                          const WeightEnumerator&) = default;
};

/// Builds an enumerator from (weight, count) terms over a length-n code;
/// repeated exponents are summed.
WeightEnumerator make_weight_enumerator(
    int n, const std::vector<std::pair<int, std::uint64_t>>& terms);

class LinearCode {
 public:
  /// Takes a full-rank generator matrix; throws std::invalid_argument if the
  /// rows are linearly dependent.
  explicit LinearCode(BinaryMatrix generator);

  /// The [n,0] code.
  static LinearCode zero(int n);
  /// The [n,n] code F_2^n.
  static LinearCode full(int n);
  /// Row space of an arbitrary matrix; dependent rows are discarded.
  static LinearCode span(const BinaryMatrix& rows);

  int length() const { return gen_.cols(); }
  int dimension() const { return gen_.rows(); }
  const BinaryMatrix& generator() const { return gen_; }

  /// Row space equality.
  bool same_code(const LinearCode& other) const;
  bool contains(std::uint64_t word) const;

 private:
  BinaryMatrix gen_;
};

/// The [n, n-k] dual code, generated by a null space basis of the generator.
LinearCode dual(const LinearCode& c);

/// G G^T nonsingular.
bool is_lcd(const LinearCode& c);

/// Exact distribution. Sweeps the 2^k codewords, or sweeps the dual and
/// applies the MacWilliams transform when n - k < k.
WeightEnumerator weight_enumerator(const LinearCode& c);

/// Throws std::invalid_argument for k = 0.
int min_weight(const LinearCode& c);

/// d(C^perp) >= t for t in {2, 3}, read off the generator columns: no zero
/// column (t = 2), and additionally no repeated column (t = 3).
bool dual_min_weight_at_least(const LinearCode& c, int t);

/// A generator of the form (I_k | M) for a code equivalent to the input.
struct StandardForm {
  LinearCode code;
  /// Column j of the input sits at position perm[j] of `code`.
  std::vector<int> perm;
};

StandardForm standard_form(const LinearCode& c);

/// True when the first k generator columns are the identity.
bool is_standard_form(const LinearCode& c);

/// For (I_k | M) with two identical columns in M, deletes the leftmost such
/// pair. Throws std::invalid_argument if the generator is not in standard
/// form or no identical pair exists.
LinearCode delete_identical_column_pair(const LinearCode& c);

/// Largest d with sum_{i<k} ceil(d / 2^i) <= n.
int griesmer_max_d(int n, int k);

}  // namespace lcd
