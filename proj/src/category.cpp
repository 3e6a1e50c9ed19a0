#include "perscert/category.hpp"

#include <algorithm>

#include "perscert/errors.hpp"

namespace perscert {

FinSet::Map FinSet::identity(const Object& n) {
  Map m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<std::uint32_t>(i);
  return m;
}

FinSet::Map FinSet::compose(const Map& g, const Map& f) {
  Map out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (f[i] >= g.size()) throw PreconditionError("FinSet composition: image outside the domain of the outer map");
    out[i] = g[f[i]];
  }
  return out;
}

bool FinSet::is_valid(const Map& f, const Object& source, const Object& target) {
  if (f.size() != source) return false;
  return std::all_of(f.begin(), f.end(), [&](std::uint32_t v) { return v < target; });
}

bool FinSet::is_mono(const Map& f) {
  std::vector<std::uint32_t> s = f;
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) == s.end();
}

std::vector<FinSet::Map> FinSet::all_maps(const Object& source, const Object& target, std::size_t limit) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < source; ++i) {
    count *= target;
    if (count > limit) throw BudgetExceeded("FinSet map enumeration exceeds the enumeration limit");
  }
  std::vector<Map> out;
  if (count == 0) return out;
  out.reserve(count);
  Map cur(source, 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = 0;
    while (i < source && ++cur[i] == target) cur[i++] = 0;
    if (i == source) break;
  }
  return out;
}

std::vector<F2Vec::Map> F2Vec::all_maps(const Object& source, const Object& target, std::size_t limit) {
  const std::size_t bits = source * target;
  if (bits >= 63 || (std::size_t{1} << bits) > limit)
    throw BudgetExceeded("F2Vec map enumeration exceeds the enumeration limit");
  std::vector<Map> out;
  out.reserve(std::size_t{1} << bits);
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    F2Matrix m(target, source);
    for (std::size_t k = 0; k < bits; ++k)
      if ((code >> k) & 1u) m.set(k % target, k / target);
    out.push_back(std::move(m));
  }
  return out;
}

Complex::Map Complex::compose(const Map& g, const Map& f) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(f.pairs().size());
  for (const auto& [a, b] : f.pairs()) pairs.emplace_back(a, g(b));
  return VertexMap(std::move(pairs));
}

bool Complex::is_valid(const Map& f, const Object& source, const Object& target) {
  if (f.domain() != source.vertices()) return false;
  for (const auto& s : source.simplices()) {
    Simplex image;
    try {
      image = f(s);
    } catch (const PreconditionError&) {
      return false;
    }
    if (!target.contains(image)) return false;
  }
  return true;
}

std::string Complex::describe(const Object& k) {
  return "complex with " + std::to_string(k.vertices().size()) + " vertices and " + std::to_string(k.size()) +
         " simplices";
}

FiberProduct<FinSet>::FiberProduct(const FinSet::Object& x, const FinSet::Object& b, const FinSet::Map& x_to_y,
                                   const FinSet::Map& b_to_y)
    : b_size_(b), index_(x * b, -1) {
  if (x_to_y.size() != x || b_to_y.size() != b) throw PreconditionError("fiber product: map/object size mismatch");
  for (std::size_t i = 0; i < x; ++i)
    for (std::size_t j = 0; j < b; ++j)
      if (x_to_y[i] == b_to_y[j]) {
        index_[i * b + j] = static_cast<std::int64_t>(apex++);
        to_x.push_back(static_cast<std::uint32_t>(i));
        to_b.push_back(static_cast<std::uint32_t>(j));
      }
}

FinSet::Map FiberProduct<FinSet>::lift(const FinSet::Map& into_x, const FinSet::Map& into_b) const {
  if (into_x.size() != into_b.size()) throw PreconditionError("fiber product lift: domain mismatch");
  FinSet::Map out(into_x.size());
  for (std::size_t w = 0; w < into_x.size(); ++w) {
    const std::int64_t k = index_.at(into_x[w] * b_size_ + into_b[w]);
    if (k < 0) throw PreconditionError("fiber product lift: the pair does not agree over the base");
    out[w] = static_cast<std::uint32_t>(k);
  }
  return out;
}

FiberProduct<F2Vec>::FiberProduct(const F2Vec::Object& x, const F2Vec::Object& b, const F2Vec::Map& x_to_y,
                                  const F2Vec::Map& b_to_y)
    : x_dim_(x), b_dim_(b) {
  if (x_to_y.cols() != x || b_to_y.cols() != b || x_to_y.rows() != b_to_y.rows())
    throw PreconditionError("fiber product: matrix shape mismatch");
  // ker [x_to_y | b_to_y] (signs vanish over F2)
  std::vector<BitVector> cols;
  for (std::size_t c = 0; c < x; ++c) cols.push_back(x_to_y.column(c));
  for (std::size_t c = 0; c < b; ++c) cols.push_back(b_to_y.column(c));
  const auto kernel = kernel_basis(F2Matrix::from_columns(x_to_y.rows(), std::move(cols)));
  apex = kernel.size();
  to_x = F2Matrix(x, apex);
  to_b = F2Matrix(b, apex);
  coords_ = F2Reducer(x + b, apex);
  for (std::size_t k = 0; k < apex; ++k) {
    for (std::size_t i = 0; i < x; ++i) to_x.set(i, k, kernel[k].test(i));
    for (std::size_t j = 0; j < b; ++j) to_b.set(j, k, kernel[k].test(x + j));
    coords_.insert(kernel[k], BitVector::unit(apex, k));
  }
}

F2Vec::Map FiberProduct<F2Vec>::lift(const F2Vec::Map& into_x, const F2Vec::Map& into_b) const {
  if (into_x.cols() != into_b.cols() || into_x.rows() != x_dim_ || into_b.rows() != b_dim_)
    throw PreconditionError("fiber product lift: shape mismatch");
  std::vector<BitVector> cols;
  for (std::size_t w = 0; w < into_x.cols(); ++w) {
    BitVector stacked(x_dim_ + b_dim_);
    for (std::size_t i = 0; i < x_dim_; ++i) stacked.set(i, into_x.get(i, w));
    for (std::size_t j = 0; j < b_dim_; ++j) stacked.set(x_dim_ + j, into_b.get(j, w));
    auto c = coords_.express(stacked);
    if (!c) throw PreconditionError("fiber product lift: the pair does not agree over the base");
    cols.push_back(std::move(*c));
  }
  return F2Matrix::from_columns(apex, std::move(cols));
}

}  // namespace perscert
