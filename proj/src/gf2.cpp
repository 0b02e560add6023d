#include "secomp/gf2.hpp"

#include <bit>
#include <string>

#include "secomp/errors.hpp"

namespace secomp {

BitVector BitVector::from_bits(const std::vector<int>& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] != 0 && bits[i] != 1) throw DomainError("bit entries must be 0 or 1");
    v.set(i, bits[i] != 0);
  }
  return v;
}

BitVector BitVector::from_index(std::uint64_t value, std::size_t len) {
  if (len > 63) throw DomainError("from_index supports at most 63 bits");
  if (len < 64 && (value >> len) != 0) throw DomainError("index value does not fit in len bits");
  BitVector v(len);
  for (std::size_t i = 0; i < len; ++i) v.set(i, (value >> (len - 1 - i)) & 1u);
  return v;
}

std::size_t BitVector::weight() const {
  std::size_t w = 0;
  for (std::uint64_t word : words_) w += std::popcount(word);
  return w;
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (len_ != other.len_) throw DimensionError("BitVector xor: length mismatch");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

std::uint64_t BitVector::to_index() const {
  if (len_ > 63) throw DomainError("to_index supports at most 63 bits");
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < len_; ++i) v |= static_cast<std::uint64_t>(get(i)) << (len_ - 1 - i);
  return v;
}

std::vector<int> BitVector::to_bits() const {
  std::vector<int> bits(len_);
  for (std::size_t i = 0; i < len_; ++i) bits[i] = get(i) ? 1 : 0;
  return bits;
}

std::size_t hamming_distance(const BitVector& a, const BitVector& b) {
  if (a.len_ != b.len_) throw DimensionError("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.words_.size(); ++i) d += std::popcount(a.words_[i] ^ b.words_[i]);
  return d;
}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows[0].size();
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("from_rows: ragged rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) throw DomainError("bit entries must be 0 or 1");
      m.set(i, j, rows[i][j] != 0);
    }
  }
  return m;
}

BitVector BitMatrix::row(std::size_t r) const {
  if (r >= rows_) throw DomainError("row index out of range");
  BitVector v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v.set(c, get(r, c));
  return v;
}

BitVector BitMatrix::column(std::size_t c) const {
  if (c >= cols_) throw DomainError("column index out of range");
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.set(r, get(r, c));
  return v;
}

std::vector<BitVector> BitMatrix::columns() const {
  std::vector<BitVector> cols;
  cols.reserve(cols_);
  for (std::size_t c = 0; c < cols_; ++c) cols.push_back(column(c));
  return cols;
}

BitMatrix BitMatrix::transposed() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (get(r, c)) t.set(c, r, true);
  return t;
}

BitVector mat_vec_mul(const BitMatrix& a, const BitVector& x) {
  if (a.cols() != x.size())
    throw DimensionError("mat_vec_mul: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times length " + std::to_string(x.size()));
  BitVector y(a.rows());
  const std::size_t wpr = a.words_per_row();
  const auto& xw = x.words();
  for (std::size_t r = 0; r < a.rows(); ++r) {
    const std::uint64_t* row = a.row_words(r);
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < wpr; ++w) acc ^= row[w] & xw[w];
    y.set(r, std::popcount(acc) & 1u);
  }
  return y;
}

BitMatrix mat_mat_mul(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("mat_mat_mul: inner dimensions differ");
  BitMatrix c(a.rows(), b.cols());
  // Row method: row r of C is the xor of B's rows selected by row r of A.
  std::vector<std::uint64_t> acc(b.words_per_row());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.get(r, j)) {
        const std::uint64_t* brow = b.row_words(j);
        for (std::size_t w = 0; w < acc.size(); ++w) acc[w] ^= brow[w];
      }
    }
    for (std::size_t cidx = 0; cidx < b.cols(); ++cidx)
      c.set(r, cidx, (acc[cidx >> 6] >> (cidx & 63)) & 1u);
  }
  return c;
}

namespace {

// Row-echelon reduction of a copy; returns pivot column per reduced row.
struct Echelon {
  std::vector<std::vector<std::uint64_t>> rows;
  std::vector<std::size_t> pivot_cols;
  std::size_t cols = 0;

  bool get(std::size_t r, std::size_t c) const { return (rows[r][c >> 6] >> (c & 63)) & 1u; }
};

Echelon reduce(const BitMatrix& m) {
  Echelon e;
  e.cols = m.cols();
  const std::size_t wpr = m.words_per_row();
  e.rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    e.rows.emplace_back(m.row_words(r), m.row_words(r) + wpr);

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < m.cols() && pivot_row < e.rows.size(); ++c) {
    std::size_t sel = pivot_row;
    while (sel < e.rows.size() && !((e.rows[sel][c >> 6] >> (c & 63)) & 1u)) ++sel;
    if (sel == e.rows.size()) continue;
    std::swap(e.rows[pivot_row], e.rows[sel]);
    for (std::size_t r = 0; r < e.rows.size(); ++r) {
      if (r != pivot_row && ((e.rows[r][c >> 6] >> (c & 63)) & 1u)) {
        for (std::size_t w = 0; w < wpr; ++w) e.rows[r][w] ^= e.rows[pivot_row][w];
      }
    }
    e.pivot_cols.push_back(c);
    ++pivot_row;
  }
  return e;
}

}  // namespace

std::size_t rank(const BitMatrix& a) { return reduce(a).pivot_cols.size(); }

std::vector<BitVector> kernel_basis(const BitMatrix& b) {
  const Echelon e = reduce(b);
  std::vector<bool> is_pivot(b.cols(), false);
  for (std::size_t c : e.pivot_cols) is_pivot[c] = true;

  std::vector<BitVector> basis;
  for (std::size_t free_col = 0; free_col < b.cols(); ++free_col) {
    if (is_pivot[free_col]) continue;
    BitVector v(b.cols());
    v.set(free_col, true);
    for (std::size_t pr = 0; pr < e.pivot_cols.size(); ++pr) {
      if (e.get(pr, free_col)) v.set(e.pivot_cols[pr], true);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

BitMatrix random_matrix(std::size_t rows, std::size_t cols, RngStream& rng) {
  if (rows < 1 || cols < 1) throw DomainError("random_matrix: dimensions must be >= 1");
  BitMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.next_u64() >> 63) m.set(r, c, true);
  return m;
}

BitVector random_noise(std::size_t len, double p, RngStream& rng) {
  BitVector v(len);
  for (std::size_t i = 0; i < len; ++i)
    if (rng.bernoulli(p)) v.set(i, true);
  return v;
}

}  // namespace secomp
