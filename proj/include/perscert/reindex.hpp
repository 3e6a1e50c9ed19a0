#pragma once

#include <functional>

#include "perscert/interleaving.hpp"

namespace perscert {

inline void require_one_parameter(const Grid& g, const char* what) {
  if (g.arity() != 1) throw DimensionError(std::string(what) + " needs a one-parameter object");
}

// Samples X at the integers of [floor(min), ceil(max)] of its grid.
template <Category C>
PersistentObject<C> restrict_to_Z(const PersistentObject<C>& x) {
  require_one_parameter(x.grid(), "restrict_to_Z");
  const auto& axis = x.grid().axis(0);
  return resample(x, Grid::integer_window(floor_int(axis.front()), ceil_int(axis.back())), Indexing::Integer);
}

// A o floor as an R-indexed object. Since A lives on integer breakpoints,
// piecewise-constant evaluation already is floor evaluation; only the tag
// changes.
template <Category C>
PersistentObject<C> extend_floor(const PersistentObject<C>& a) {
  require_one_parameter(a.grid(), "extend_floor");
  for (const auto& v : a.grid().axis(0))
    if (!v.is_integer()) throw PreconditionError("extend_floor: breakpoint " + v.str() + " is not an integer");
  return a.with_indexing(Indexing::Real);
}

template <Category C>
DeltaMorphism<C> extend_floor(const DeltaMorphism<C>& f) {
  return DeltaMorphism<C>(extend_floor(f.source()), extend_floor(f.target()), f.shift(), f.components());
}

template <Category C>
InterleavingCert<C> extend_floor(const InterleavingCert<C>& cert) {
  return {extend_floor(cert.f), extend_floor(cert.g)};
}

// (X, W) with W = extend_floor(restrict_to_Z(X)) and the 1-interleaving
// f_r = phi^X_{r, floor(r)+1}, g_r = phi^X_{floor(r), r+1}.
template <Category C>
InterleavingCert<C> floor_roundtrip_certificate(const PersistentObject<C>& x) {
  const auto w = extend_floor(restrict_to_Z(x));
  const Grade one{Rational(1)};
  auto floor_of = [](const Grade& r) { return Grade{Rational(floor_int(r[0]))}; };
  auto f = DeltaMorphism<C>::build(x, w, one, [&](const Grade& r) { return x.structure_map(r, floor_of(r) + one); });
  auto g = DeltaMorphism<C>::build(w, x, one, [&](const Grade& r) { return x.structure_map(floor_of(r), r + one); });
  return {std::move(f), std::move(g)};
}

// (M_c)^*(X), i.e. r |-> X(c r): every breakpoint divided by c.
template <Category C>
PersistentObject<C> rescale(const PersistentObject<C>& x, const Rational& c) {
  require_one_parameter(x.grid(), "rescale");
  if (c.sign() <= 0) throw PreconditionError("rescale factor must be positive, got " + c.str());
  return PersistentObject<C>(x.grid().divided(c), x.objects(), x.edge_maps(), x.indexing());
}

// A delta-morphism of X, Y becomes a (delta/c)-morphism of the rescaled
// objects with the same component table.
template <Category C>
DeltaMorphism<C> rescale(const DeltaMorphism<C>& f, const Rational& c) {
  return DeltaMorphism<C>(rescale(f.source(), c), rescale(f.target(), c), Grade{f.shift()[0] / c}, f.components());
}

template <Category C>
InterleavingCert<C> rescale(const InterleavingCert<C>& cert, const Rational& c) {
  return {rescale(cert.f, c), rescale(cert.g, c)};
}

// Z-indexed reindexing n |-> X(k(n)) on [lo, hi] for a monotone k.
template <Category C>
PersistentObject<C> reindex(const PersistentObject<C>& x, const std::function<std::int64_t(std::int64_t)>& k,
                            std::int64_t lo, std::int64_t hi) {
  require_one_parameter(x.grid(), "reindex");
  const Grid grid = Grid::integer_window(lo, hi);
  auto at = [&](std::size_t p) { return Grade{Rational(k(lo + static_cast<std::int64_t>(p)))}; };
  return PersistentObject<C>::build(
      grid, [&](std::size_t p) { return x.evaluate(at(p)); },
      [&](std::size_t p, std::size_t) { return x.structure_map(at(p), at(p + 1)); }, Indexing::Integer);
}

}  // namespace perscert
