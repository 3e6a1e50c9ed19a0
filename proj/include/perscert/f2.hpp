#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace perscert {

// Dense vector over F2, bit-packed into 64-bit words. Bits past size() are
// always zero.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  static BitVector unit(std::size_t size, std::size_t index) {
    BitVector v(size);
    v.set(index);
    return v;
  }

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (value)
      words_[i / 64] |= mask;
    else
      words_[i / 64] &= ~mask;
  }
  void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

  BitVector& operator^=(const BitVector& o);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

  bool none() const;
  std::size_t count() const;
  // Index of the highest set bit.
  std::optional<std::size_t> highest() const;

  const std::vector<std::uint64_t>& words() const { return words_; }

  // One character per bit, index 0 first.
  std::string str() const;
  static BitVector parse(std::string_view bits);

  friend bool operator==(const BitVector& a, const BitVector& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Linear map F2^cols -> F2^rows, stored by columns (column j is the image of
// the j-th basis vector).
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols, BitVector(rows)) {}

  static F2Matrix identity(std::size_t n);
  static F2Matrix from_columns(std::size_t rows, std::vector<BitVector> columns);
  // Row strings of '0'/'1', all of length `cols`.
  static F2Matrix from_rows(std::size_t rows, std::size_t cols, const std::vector<std::string>& row_bits);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return columns_[c].test(r); }
  void set(std::size_t r, std::size_t c, bool v = true) { columns_[c].set(r, v); }
  const BitVector& column(std::size_t c) const { return columns_[c]; }

  BitVector apply(const BitVector& v) const;
  std::vector<std::string> row_strings() const;

  std::size_t rank() const;
  bool is_injective() const { return rank() == cols_; }

  friend bool operator==(const F2Matrix&, const F2Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> columns_;
};

// g * f, i.e. the composite "g after f". Throws PreconditionError on a
// shape mismatch.
F2Matrix operator*(const F2Matrix& g, const F2Matrix& f);

// Incremental Gaussian elimination with bookkeeping. Every stored vector
// carries a tag (a vector in an arbitrary label space); reduction XORs tags
// alongside vectors, so a fully reduced input reports which stored tags sum
// to it. Stored vectors have pairwise distinct highest bits.
class F2Reducer {
 public:
  F2Reducer(std::size_t ambient, std::size_t tag_size) : ambient_(ambient), tag_size_(tag_size), owner_(ambient, -1) {}

  struct Reduction {
    BitVector residual;
    BitVector tag;
  };

  Reduction reduce(BitVector v, BitVector tag) const;

  // Inserts `v`. Returns true when it was independent of the current span.
  // When dependent, `relation` (if given) receives tag + accumulated tags,
  // the tag combination of a linear relation.
  bool insert(const BitVector& v, const BitVector& tag, BitVector* relation = nullptr);

  // Tag combination expressing v, or nullopt when v is outside the span.
  std::optional<BitVector> express(const BitVector& v) const;

  std::size_t rank() const { return stored_.size(); }
  std::size_t ambient() const { return ambient_; }

 private:
  std::size_t ambient_;
  std::size_t tag_size_;
  std::vector<std::ptrdiff_t> owner_;
  std::vector<Reduction> stored_;
};

// Basis of ker(M) as vectors of length M.cols().
std::vector<BitVector> kernel_basis(const F2Matrix& m);

}  // namespace perscert
