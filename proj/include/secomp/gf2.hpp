#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

#include "secomp/rng.hpp"

namespace secomp {

/// Dense bit vector over GF(2), packed 64 bits per word (LSB-first inside a
/// word). Unused tail bits of the last word are kept zero, so whole-word
/// comparison and popcount are valid.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t len) : len_(len), words_((len + 63) / 64, 0) {}

  static BitVector from_bits(const std::vector<int>& bits);
  /// Component 0 is the most significant bit of `value`, so integer order on
  /// indices equals lexicographic order on vectors.
  static BitVector from_index(std::uint64_t value, std::size_t len);

  std::size_t size() const { return len_; }
  bool empty() const { return len_ == 0; }

  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (v)
      words_[i >> 6] |= mask;
    else
      words_[i >> 6] &= ~mask;
  }

  std::size_t weight() const;

  BitVector& operator^=(const BitVector& other);
  BitVector operator^(const BitVector& other) const {
    BitVector r = *this;
    r ^= other;
    return r;
  }

  bool operator==(const BitVector& other) const {
    return len_ == other.len_ && words_ == other.words_;
  }
  bool operator!=(const BitVector& other) const { return !(*this == other); }

  /// Integer with component 0 as MSB; requires size() <= 63.
  std::uint64_t to_index() const;
  std::vector<int> to_bits() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t len_ = 0;
  std::vector<std::uint64_t> words_;

  friend std::size_t hamming_distance(const BitVector& a, const BitVector& b);
};

std::size_t hamming_distance(const BitVector& a, const BitVector& b);

/// Dense row-major bit matrix over GF(2).
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), words_(rows * wpr_, 0) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(const std::vector<std::vector<int>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  bool get(std::size_t r, std::size_t c) const {
    return (words_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
  }
  void set(std::size_t r, std::size_t c, bool v) {
    const std::uint64_t mask = std::uint64_t{1} << (c & 63);
    if (v)
      words_[r * wpr_ + (c >> 6)] |= mask;
    else
      words_[r * wpr_ + (c >> 6)] &= ~mask;
  }

  BitVector row(std::size_t r) const;
  BitVector column(std::size_t c) const;
  /// All columns as length-rows() vectors; the workhorse of the Gray-code
  /// codebook walks in the decoders.
  std::vector<BitVector> columns() const;

  BitMatrix transposed() const;

  bool operator==(const BitMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && words_ == other.words_;
  }
  bool operator!=(const BitMatrix& other) const { return !(*this == other); }

  const std::uint64_t* row_words(std::size_t r) const { return words_.data() + r * wpr_; }
  std::size_t words_per_row() const { return wpr_; }

 private:
  std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
  std::vector<std::uint64_t> words_;
};

/// y = A x over GF(2). Throws DimensionError if A.cols() != x.size().
BitVector mat_vec_mul(const BitMatrix& a, const BitVector& x);

/// C = A B over GF(2). Throws DimensionError if A.cols() != B.rows().
BitMatrix mat_mat_mul(const BitMatrix& a, const BitMatrix& b);

/// Rank over GF(2) via Gaussian elimination on a copy.
std::size_t rank(const BitMatrix& a);

/// Basis of the null space {v : B v = 0}; size is cols - rank. Vectors are
/// emitted in ascending free-column order, deterministically.
std::vector<BitVector> kernel_basis(const BitMatrix& b);

/// Matrix with i.i.d. uniform entries, reproducible from the stream.
BitMatrix random_matrix(std::size_t rows, std::size_t cols, RngStream& rng);

/// Vector with i.i.d. Bernoulli(p) entries.
BitVector random_noise(std::size_t len, double p, RngStream& rng);

}  // namespace secomp
