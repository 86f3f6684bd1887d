#include "lcd/gf2.hpp"

#include <stdexcept>
#include <utility>

namespace lcd {

namespace {

void check_length(int len) {
  if (len < 0 || len > kMaxLength) {
    throw std::invalid_argument("length " + std::to_string(len) +
                                " outside [0, 64]");
  }
}

// In-place reduced row echelon form. Returns the rank; rows [0, rank) hold the
// reduced basis and the remaining rows are zero.
int reduce_in_place(std::vector<std::uint64_t>& rows, int ncols) {
  int rank = 0;
  const int nrows = static_cast<int>(rows.size());
  for (int col = 0; col < ncols && rank < nrows; ++col) {
    const std::uint64_t bit = std::uint64_t{1} << col;
    int pivot = -1;
    for (int i = rank; i < nrows; ++i) {
      if (rows[i] & bit) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int i = 0; i < nrows; ++i) {
      if (i != rank && (rows[i] & bit)) rows[i] ^= rows[rank];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

BitVector::BitVector(int len) : len_(len) { check_length(len); }

BitVector::BitVector(int len, std::uint64_t bits) : len_(len), bits_(bits) {
  check_length(len);
  if (bits & ~low_mask(len)) {
    throw std::invalid_argument("bits set beyond vector length");
  }
}

BitVector BitVector::parse(std::string_view text) {
  check_length(static_cast<int>(text.size()));
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits |= std::uint64_t{1} << i;
    } else if (text[i] != '0') {
      throw std::invalid_argument("non-binary character in vector");
    }
  }
  return BitVector(static_cast<int>(text.size()), bits);
}

void BitVector::set(int i, bool value) {
  if (i < 0 || i >= len_) throw std::out_of_range("BitVector::set");
  const std::uint64_t bit = std::uint64_t{1} << i;
  bits_ = value ? (bits_ | bit) : (bits_ & ~bit);
}

bool BitVector::dot(const BitVector& other) const {
  if (len_ != other.len_) throw std::invalid_argument("length mismatch in dot");
  return std::popcount(bits_ & other.bits_) & 1;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (len_ != other.len_) throw std::invalid_argument("length mismatch in xor");
  bits_ ^= other.bits_;
  return *this;
}

std::string BitVector::to_string() const {
  std::string s(len_, '0');
  for (int i = 0; i < len_; ++i) {
    if ((*this)[i]) s[i] = '1';
  }
  return s;
}

BinaryMatrix::BinaryMatrix(int nrows, int ncols)
    : ncols_(ncols), rows_(nrows < 0 ? 0 : nrows, 0) {
  check_length(ncols);
  if (nrows < 0) throw std::invalid_argument("negative row count");
}

BinaryMatrix::BinaryMatrix(int ncols, std::vector<std::uint64_t> rows)
    : ncols_(ncols), rows_(std::move(rows)) {
  check_length(ncols);
  const std::uint64_t outside = ~low_mask(ncols);
  for (std::uint64_t r : rows_) {
    if (r & outside) throw std::invalid_argument("row has bits beyond ncols");
  }
}

BinaryMatrix BinaryMatrix::identity(int n) {
  BinaryMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.rows_[i] = std::uint64_t{1} << i;
  return m;
}

BinaryMatrix BinaryMatrix::parse(const std::vector<std::string>& rows) {
  if (rows.empty()) return BinaryMatrix(0, 0);
  const std::size_t width = rows.front().size();
  std::vector<std::uint64_t> words;
  words.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != width) throw std::invalid_argument("ragged matrix rows");
    words.push_back(BitVector::parse(r).bits());
  }
  return BinaryMatrix(static_cast<int>(width), std::move(words));
}

BinaryMatrix BinaryMatrix::from_columns(int nrows,
                                        std::span<const std::uint64_t> cols) {
  check_length(static_cast<int>(cols.size()));
  BinaryMatrix m(nrows, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] & ~low_mask(nrows)) {
      throw std::invalid_argument("column has bits beyond nrows");
    }
    for (std::uint64_t c = cols[j]; c; c &= c - 1) {
      m.rows_[std::countr_zero(c)] |= std::uint64_t{1} << j;
    }
  }
  return m;
}

void BinaryMatrix::set(int i, int j, bool value) {
  if (i < 0 || i >= rows() || j < 0 || j >= ncols_) {
    throw std::out_of_range("BinaryMatrix::set");
  }
  const std::uint64_t bit = std::uint64_t{1} << j;
  rows_[i] = value ? (rows_[i] | bit) : (rows_[i] & ~bit);
}

std::uint64_t BinaryMatrix::column_bits(int j) const {
  std::uint64_t c = 0;
  for (int i = 0; i < rows(); ++i) c |= ((rows_[i] >> j) & 1U) << i;
  return c;
}

std::vector<std::uint64_t> BinaryMatrix::column_words() const {
  std::vector<std::uint64_t> cols(ncols_, 0);
  for (int i = 0; i < rows(); ++i) {
    for (std::uint64_t r = rows_[i]; r; r &= r - 1) {
      cols[std::countr_zero(r)] |= std::uint64_t{1} << i;
    }
  }
  return cols;
}

BinaryMatrix BinaryMatrix::transpose() const {
  if (rows() > kMaxLength) throw std::invalid_argument("too many rows");
  return BinaryMatrix(rows(), column_words());
}

BinaryMatrix BinaryMatrix::select_columns(std::span<const int> cols) const {
  BinaryMatrix out(rows(), static_cast<int>(cols.size()));
  for (int i = 0; i < rows(); ++i) {
    std::uint64_t r = 0;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] < 0 || cols[j] >= ncols_) {
        throw std::out_of_range("select_columns index");
      }
      r |= ((rows_[i] >> cols[j]) & 1U) << j;
    }
    out.rows_[i] = r;
  }
  return out;
}

BinaryMatrix BinaryMatrix::permute_columns(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != ncols_) {
    throw std::invalid_argument("permutation size mismatch");
  }
  std::uint64_t seen = 0;
  for (int p : perm) {
    if (p < 0 || p >= ncols_ || ((seen >> p) & 1U)) {
      throw std::invalid_argument("not a permutation");
    }
    seen |= std::uint64_t{1} << p;
  }
  BinaryMatrix out(rows(), ncols_);
  for (int i = 0; i < rows(); ++i) {
    std::uint64_t r = 0;
    for (std::uint64_t b = rows_[i]; b; b &= b - 1) {
      r |= std::uint64_t{1} << perm[std::countr_zero(b)];
    }
    out.rows_[i] = r;
  }
  return out;
}

std::string BinaryMatrix::to_string() const {
  std::string s;
  for (int i = 0; i < rows(); ++i) {
    if (i) s += '\n';
    s += row(i).to_string();
  }
  return s;
}

BinaryMatrix mat_mul(const BinaryMatrix& a, const BinaryMatrix& b) {
  if (a.cols() != b.rows()) {
    throw std::invalid_argument("mat_mul: inner dimensions differ");
  }
  std::vector<std::uint64_t> rows(a.rows(), 0);
  for (int i = 0; i < a.rows(); ++i) {
    std::uint64_t acc = 0;
    for (std::uint64_t r = a.row_bits(i); r; r &= r - 1) {
      acc ^= b.row_bits(std::countr_zero(r));
    }
    rows[i] = acc;
  }
  return BinaryMatrix(b.cols(), std::move(rows));
}

int rank(const BinaryMatrix& m) {
  std::vector<std::uint64_t> rows(m.row_words().begin(), m.row_words().end());
  return reduce_in_place(rows, m.cols());
}

bool is_nonsingular(const BinaryMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("is_nonsingular: matrix is not square");
  }
  return rank(m) == m.rows();
}

BinaryMatrix reduced_row_echelon(const BinaryMatrix& m) {
  std::vector<std::uint64_t> rows(m.row_words().begin(), m.row_words().end());
  rows.resize(reduce_in_place(rows, m.cols()));
  return BinaryMatrix(m.cols(), std::move(rows));
}

std::vector<int> pivot_columns(const BinaryMatrix& rref) {
  std::vector<int> pivots;
  pivots.reserve(rref.rows());
  for (int i = 0; i < rref.rows(); ++i) {
    const std::uint64_t r = rref.row_bits(i);
    pivots.push_back(r ? std::countr_zero(r) : -1);
  }
  return pivots;
}

BinaryMatrix null_space_basis(const BinaryMatrix& m) {
  const BinaryMatrix rref = reduced_row_echelon(m);
  const std::vector<int> pivots = pivot_columns(rref);
  std::uint64_t pivot_mask = 0;
  for (int p : pivots) pivot_mask |= std::uint64_t{1} << p;

  std::vector<std::uint64_t> basis;
  for (int f = 0; f < m.cols(); ++f) {
    const std::uint64_t fbit = std::uint64_t{1} << f;
    if (pivot_mask & fbit) continue;
    std::uint64_t v = fbit;
    for (int i = 0; i < rref.rows(); ++i) {
      if (rref.row_bits(i) & fbit) v |= std::uint64_t{1} << pivots[i];
    }
    basis.push_back(v);
  }
  return BinaryMatrix(m.cols(), std::move(basis));
}

}  // namespace lcd
