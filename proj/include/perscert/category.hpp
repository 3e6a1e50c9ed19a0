#pragma once

// The three concrete categories persistent objects take values in. Each is
// a stateless traits type exposing the same fixed surface:
//
//   Object, Map, initial(), identity(o), initial_map(target), compose(g, f),
//   is_valid(f, source, target), is_mono(f), describe(o)
//
// FinSet and F2Vec additionally enumerate all maps between two objects (for
// exhaustive interleaving search) and form fiber products.

#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "perscert/f2.hpp"
#include "perscert/simplicial.hpp"

namespace perscert {

// Finite sets {0, ..., n-1}; maps are value tables.
struct FinSet {
  static constexpr std::string_view kName = "FinSet";
  using Object = std::size_t;
  using Map = std::vector<std::uint32_t>;

  static Object initial() { return 0; }
  static Map identity(const Object& n);
  static Map initial_map(const Object&) { return {}; }
  static Map compose(const Map& g, const Map& f);
  static bool is_valid(const Map& f, const Object& source, const Object& target);
  static bool is_mono(const Map& f);
  static std::string describe(const Object& n) { return "set of size " + std::to_string(n); }
  // All |target|^|source| maps. Throws BudgetExceeded past `limit`.
  static std::vector<Map> all_maps(const Object& source, const Object& target, std::size_t limit);
};

// Finite-dimensional F2-vector spaces F2^d; maps are matrices.
struct F2Vec {
  static constexpr std::string_view kName = "F2Vec";
  using Object = std::size_t;
  using Map = F2Matrix;

  static Object initial() { return 0; }
  static Map identity(const Object& d) { return F2Matrix::identity(d); }
  static Map initial_map(const Object& target) { return F2Matrix(target, 0); }
  static Map compose(const Map& g, const Map& f) { return g * f; }
  static bool is_valid(const Map& f, const Object& source, const Object& target) {
    return f.cols() == source && f.rows() == target;
  }
  static bool is_mono(const Map& f) { return f.is_injective(); }
  static std::string describe(const Object& d) { return "F2^" + std::to_string(d); }
  static std::vector<Map> all_maps(const Object& source, const Object& target, std::size_t limit);
};

// Finite simplicial complexes; maps are simplicial vertex maps.
struct Complex {
  static constexpr std::string_view kName = "Complex";
  using Object = SimplicialComplex;
  using Map = VertexMap;

  static Object initial() { return {}; }
  static Map identity(const Object& k) { return VertexMap::identity_on(k.vertices()); }
  static Map initial_map(const Object&) { return {}; }
  static Map compose(const Map& g, const Map& f);
  static bool is_valid(const Map& f, const Object& source, const Object& target);
  static bool is_mono(const Map& f) { return f.is_injective(); }
  static std::string describe(const Object& k);
};

template <class C>
concept Category = requires(const typename C::Object& o, const typename C::Map& f) {
  { C::initial() } -> std::convertible_to<typename C::Object>;
  { C::identity(o) } -> std::convertible_to<typename C::Map>;
  { C::initial_map(o) } -> std::convertible_to<typename C::Map>;
  { C::compose(f, f) } -> std::convertible_to<typename C::Map>;
  { C::is_valid(f, o, o) } -> std::convertible_to<bool>;
  { f == f } -> std::convertible_to<bool>;
  { o == o } -> std::convertible_to<bool>;
};

template <class C>
concept Enumerable = Category<C> && requires(const typename C::Object& o) {
  { C::all_maps(o, o, std::size_t{}) } -> std::convertible_to<std::vector<typename C::Map>>;
};

// Pullback of  X --to_y--> Y <--from_b-- B  with its two projections and the
// universal-property factorization.
template <class C>
struct FiberProduct;

template <>
struct FiberProduct<FinSet> {
  FiberProduct(const FinSet::Object& x, const FinSet::Object& b, const FinSet::Map& x_to_y, const FinSet::Map& b_to_y);

  FinSet::Object apex = 0;
  FinSet::Map to_x;
  FinSet::Map to_b;

  // The unique map W -> apex whose projections are (into_x, into_b). Throws
  // PreconditionError when the pair does not land in the fiber product.
  FinSet::Map lift(const FinSet::Map& into_x, const FinSet::Map& into_b) const;

 private:
  std::size_t b_size_ = 0;
  std::vector<std::int64_t> index_;  // (x, b) -> apex element, or -1
};

template <>
struct FiberProduct<F2Vec> {
  FiberProduct(const F2Vec::Object& x, const F2Vec::Object& b, const F2Vec::Map& x_to_y, const F2Vec::Map& b_to_y);

  F2Vec::Object apex = 0;
  F2Vec::Map to_x;
  F2Vec::Map to_b;

  F2Vec::Map lift(const F2Vec::Map& into_x, const F2Vec::Map& into_b) const;

 private:
  std::size_t x_dim_ = 0;
  std::size_t b_dim_ = 0;
  F2Reducer coords_{0, 0};
};

template <class C>
inline constexpr bool kHasFiberProducts = false;
template <>
inline constexpr bool kHasFiberProducts<FinSet> = true;
template <>
inline constexpr bool kHasFiberProducts<F2Vec> = true;

}  // namespace perscert
