#include "perscert/f2.hpp"

#include "perscert/errors.hpp"
#include "perscert/simd/f2_kernels.hpp"

namespace perscert {

namespace {

const simd::F2Kernels& kernels() {
  static const simd::F2Kernels& k = simd::active_kernels();
  return k;
}

}  // namespace

BitVector& BitVector::operator^=(const BitVector& o) {
  if (o.size_ != size_) throw PreconditionError("bit vector size mismatch");
  kernels().xor_into(words_.data(), o.words_.data(), words_.size());
  return *this;
}

bool BitVector::none() const { return kernels().is_zero(words_.data(), words_.size()); }

std::size_t BitVector::count() const { return kernels().popcount(words_.data(), words_.size()); }

std::optional<std::size_t> BitVector::highest() const {
  const std::size_t w = kernels().last_nonzero(words_.data(), words_.size());
  if (w == words_.size()) return std::nullopt;
  return w * 64 + (63 - static_cast<std::size_t>(__builtin_clzll(words_[w])));
}

std::string BitVector::str() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

BitVector BitVector::parse(std::string_view bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      v.set(i);
    else if (bits[i] != '0')
      throw SchemaError("bit string may only contain '0' and '1'");
  }
  return v;
}

bool operator==(const BitVector& a, const BitVector& b) {
  return a.size_ == b.size_ && kernels().equal(a.words_.data(), b.words_.data(), a.words_.size());
}

F2Matrix F2Matrix::identity(std::size_t n) {
  F2Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

F2Matrix F2Matrix::from_columns(std::size_t rows, std::vector<BitVector> columns) {
  F2Matrix m;
  m.rows_ = rows;
  m.cols_ = columns.size();
  for (const auto& c : columns)
    if (c.size() != rows) throw PreconditionError("column length does not match row count");
  m.columns_ = std::move(columns);
  return m;
}

F2Matrix F2Matrix::from_rows(std::size_t rows, std::size_t cols, const std::vector<std::string>& row_bits) {
  if (row_bits.size() != rows) throw SchemaError("matrix row count does not match 'rows'");
  F2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (row_bits[r].size() != cols) throw SchemaError("matrix row length does not match 'cols'");
    for (std::size_t c = 0; c < cols; ++c) {
      if (row_bits[r][c] == '1')
        m.set(r, c);
      else if (row_bits[r][c] != '0')
        throw SchemaError("matrix rows may only contain '0' and '1'");
    }
  }
  return m;
}

BitVector F2Matrix::apply(const BitVector& v) const {
  if (v.size() != cols_) throw PreconditionError("vector length does not match matrix columns");
  BitVector out(rows_);
  for (std::size_t c = 0; c < cols_; ++c)
    if (v.test(c)) out ^= columns_[c];
  return out;
}

std::vector<std::string> F2Matrix::row_strings() const {
  std::vector<std::string> rows(rows_, std::string(cols_, '0'));
  for (std::size_t c = 0; c < cols_; ++c)
    for (std::size_t r = 0; r < rows_; ++r)
      if (get(r, c)) rows[r][c] = '1';
  return rows;
}

std::size_t F2Matrix::rank() const {
  F2Reducer reducer(rows_, 0);
  for (const auto& c : columns_) reducer.insert(c, BitVector(0));
  return reducer.rank();
}

F2Matrix operator*(const F2Matrix& g, const F2Matrix& f) {
  if (g.cols() != f.rows())
    throw PreconditionError("matrix shape mismatch in composition: " + std::to_string(g.cols()) +
                            " vs " + std::to_string(f.rows()));
  std::vector<BitVector> cols;
  cols.reserve(f.cols());
  for (std::size_t c = 0; c < f.cols(); ++c) cols.push_back(g.apply(f.column(c)));
  return F2Matrix::from_columns(g.rows(), std::move(cols));
}

F2Reducer::Reduction F2Reducer::reduce(BitVector v, BitVector tag) const {
  while (auto h = v.highest()) {
    const std::ptrdiff_t o = owner_[*h];
    if (o < 0) break;
    v ^= stored_[static_cast<std::size_t>(o)].residual;
    tag ^= stored_[static_cast<std::size_t>(o)].tag;
  }
  return {std::move(v), std::move(tag)};
}

bool F2Reducer::insert(const BitVector& v, const BitVector& tag, BitVector* relation) {
  if (v.size() != ambient_ || tag.size() != tag_size_) throw PreconditionError("reducer input size mismatch");
  Reduction r = reduce(v, tag);
  if (auto h = r.residual.highest()) {
    owner_[*h] = static_cast<std::ptrdiff_t>(stored_.size());
    stored_.push_back(std::move(r));
    return true;
  }
  if (relation) *relation = std::move(r.tag);
  return false;
}

std::optional<BitVector> F2Reducer::express(const BitVector& v) const {
  Reduction r = reduce(v, BitVector(tag_size_));
  if (!r.residual.none()) return std::nullopt;
  return std::move(r.tag);
}

std::vector<BitVector> kernel_basis(const F2Matrix& m) {
  F2Reducer reducer(m.rows(), m.cols());
  std::vector<BitVector> basis;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    BitVector relation;
    if (!reducer.insert(m.column(c), BitVector::unit(m.cols(), c), &relation)) basis.push_back(std::move(relation));
  }
  return basis;
}

}  // namespace perscert
