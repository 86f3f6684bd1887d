#pragma once

// Dense linear algebra over GF(2). Vectors and matrix rows live in a single
// 64-bit word: coordinate j is bit j, so every length is capped at 64.

#include <bit>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lcd {

inline constexpr int kMaxLength = 64;

/// Mask with the low `len` bits set.
constexpr std::uint64_t low_mask(int len) {
  return len >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
}

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(int len);
  /// Throws std::invalid_argument if `bits` has a coordinate at or beyond `len`.
  BitVector(int len, std::uint64_t bits);

  /// Parses a string of '0'/'1' characters, coordinate 0 first.
  static BitVector parse(std::string_view text);
  static BitVector zeros(int len) { return BitVector(len); }
  static BitVector ones(int len) { return BitVector(len, low_mask(len)); }

  int size() const { return len_; }
  std::uint64_t bits() const { return bits_; }
  bool operator[](int i) const { return (bits_ >> i) & 1U; }
  void set(int i, bool value);
  int weight() const { return std::popcount(bits_); }

  /// Standard inner product over GF(2).
  bool dot(const BitVector& other) const;

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  friend bool operator==(const BitVector&, const BitVector&) = default;

  std::string to_string() const;

 private:
  int len_ = 0;
  std::uint64_t bits_ = 0;
};

class BinaryMatrix {
 public:
  BinaryMatrix() = default;
  /// Zero matrix.
  BinaryMatrix(int nrows, int ncols);
  /// Rows given as packed words; bits at or beyond `ncols` are rejected.
  BinaryMatrix(int ncols, std::vector<std::uint64_t> rows);

  static BinaryMatrix identity(int n);
  /// One string of '0'/'1' per row; all rows must share a length.
  static BinaryMatrix parse(const std::vector<std::string>& rows);
  /// Builds a matrix from its columns, each a packed word of `nrows` bits.
  static BinaryMatrix from_columns(int nrows, std::span<const std::uint64_t> cols);

  int rows() const { return static_cast<int>(rows_.size()); }
  int cols() const { return ncols_; }

  bool get(int i, int j) const { return (rows_[i] >> j) & 1U; }
  void set(int i, int j, bool value);

  std::uint64_t row_bits(int i) const { return rows_[i]; }
  BitVector row(int i) const { return BitVector(ncols_, rows_[i]); }
  std::span<const std::uint64_t> row_words() const { return rows_; }

  /// Column j packed as a word whose bit i is entry (i, j).
  std::uint64_t column_bits(int j) const;
  std::vector<std::uint64_t> column_words() const;

  BinaryMatrix transpose() const;
  /// Keeps the listed columns, in the listed order.
  BinaryMatrix select_columns(std::span<const int> cols) const;
  /// Column j of the input lands at position perm[j] of the result.
  BinaryMatrix permute_columns(std::span<const int> perm) const;

  friend bool operator==(const BinaryMatrix&, const BinaryMatrix&) = default;

  /// Rows separated by newlines.
  std::string to_string() const;

 private:
  int ncols_ = 0;
  std::vector<std::uint64_t> rows_;
};

/// Product over GF(2); throws std::invalid_argument on a shape mismatch.
BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b);

int rank(const BinaryMatrix& m);

/// Throws std::invalid_argument for non-square input.
bool is_nonsingular(const BinaryMatrix& m);

/// Reduced row echelon form with zero rows dropped. Pivots are taken left to
/// right using row swaps only, so the result depends only on the row space.
BinaryMatrix reduced_row_echelon(const BinaryMatrix& m);

/// Pivot column of each row of a reduced row echelon matrix.
std::vector<int> pivot_columns(const BinaryMatrix& rref);

/// Basis of {x : m x^T = 0}, one row per free column in increasing order.
BinaryMatrix null_space_basis(const BinaryMatrix& m);

}  // namespace lcd
