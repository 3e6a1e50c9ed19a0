#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perscert/morphism.hpp"

namespace perscert {

// An (eps, delta)-interleaving candidate: f : X ->_eps Y and g : Y ->_delta X.
template <Category C>
struct InterleavingCert {
  DeltaMorphism<C> f;
  DeltaMorphism<C> g;

  const Grade& epsilon() const { return f.shift(); }
  const Grade& delta() const { return g.shift(); }
  const PersistentObject<C>& x() const { return f.source(); }
  const PersistentObject<C>& y() const { return f.target(); }

  friend bool operator==(const InterleavingCert&, const InterleavingCert&) = default;
};

struct CheckReport {
  bool valid = true;
  // "naturality of f", "naturality of g", "g^eps o f = S_{0,eps+delta}(id_X)",
  // or "f^delta o g = S_{0,eps+delta}(id_Y)"
  std::string identity;
  std::optional<Grade> at;
  std::string detail;

  static CheckReport failure(std::string identity, std::optional<Grade> at, std::string detail) {
    return {false, std::move(identity), std::move(at), std::move(detail)};
  }
};

inline constexpr const char* kFirstTriangle = "g^eps o f = S_{0,eps+delta}(id_X)";
inline constexpr const char* kSecondTriangle = "f^delta o g = S_{0,eps+delta}(id_Y)";

// Points at which a triangle identity is checked: every breakpoint of the
// three functors involved, pulled back to the source's coordinate.
inline Grid triangle_grid(const Grid& source, const Grid& middle, const Grade& first_shift, const Grade& total_shift) {
  const Grade zero = Grade::zero(first_shift.arity());
  return Grid::merge(Grid::merge(source, middle.translated(zero - first_shift)), source.translated(zero - total_shift));
}

template <Category C>
void require_cert_shape(const InterleavingCert<C>& cert) {
  if (!(cert.f.source() == cert.g.target()) || !(cert.f.target() == cert.g.source()))
    throw MismatchError("interleaving maps do not run between the same two objects");
}

// Valid iff f and g are natural and both triangle identities hold at every
// grade. On failure reports the first violation.
template <Category C>
CheckReport check_interleaving(const InterleavingCert<C>& cert) {
  require_cert_shape(cert);
  if (auto v = cert.f.naturality_violation()) return CheckReport::failure("naturality of f", std::nullopt, *v);
  if (auto v = cert.g.naturality_violation()) return CheckReport::failure("naturality of g", std::nullopt, *v);
  const Grade& eps = cert.epsilon();
  const Grade& delta = cert.delta();
  const Grade total = eps + delta;
  const auto& x = cert.x();
  const auto& y = cert.y();

  const Grid first = triangle_grid(x.grid(), y.grid(), eps, total);
  for (std::size_t p = 0; p < first.size(); ++p) {
    const Grade r = first.point(p);
    if (!(C::compose(cert.g.at(r + eps), cert.f.at(r)) == x.structure_map(r, r + total)))
      return CheckReport::failure(kFirstTriangle, r, "composite differs from the structure map of X");
  }
  const Grid second = triangle_grid(y.grid(), x.grid(), delta, total);
  for (std::size_t p = 0; p < second.size(); ++p) {
    const Grade r = second.point(p);
    if (!(C::compose(cert.f.at(r + delta), cert.g.at(r)) == y.structure_map(r, r + total)))
      return CheckReport::failure(kSecondTriangle, r, "composite differs from the structure map of Y");
  }
  return {};
}

// The self-interleaving (S_{0,delta}(id_X), S_{0,delta}(id_X)).
template <Category C>
InterleavingCert<C> self_interleaving(const PersistentObject<C>& x, const Grade& delta) {
  return {structure_morphism(x, delta), structure_morphism(x, delta)};
}

// Raise both shifts of a valid certificate to (eps2, delta2) >= (eps, delta).
template <Category C>
InterleavingCert<C> shift_certificate(const InterleavingCert<C>& cert, const Grade& eps2, const Grade& delta2) {
  return {shift_morphism(cert.f, eps2), shift_morphism(cert.g, delta2)};
}

// (f2^eps1 o f1, g1^delta2 o g2): an (eps1+delta1, eps2+delta2)-interleaving
// of X and Z from X ~(eps1,eps2)~ Y and Y ~(delta1,delta2)~ Z.
template <Category C>
InterleavingCert<C> compose_interleavings(const InterleavingCert<C>& c1, const InterleavingCert<C>& c2) {
  require_cert_shape(c1);
  require_cert_shape(c2);
  if (!(c1.y() == c2.x())) throw MismatchError("compose_interleavings: middle objects differ");
  return {compose(c1.f, c2.f), compose(c2.g, c1.g)};
}

template <Category C>
struct PullbackResult {
  PersistentObject<C> apex;          // A
  InterleavingCert<C> cert;          // (k, l) : A ~(eps,delta)~ B
  DeltaMorphism<C> projection;       // A -> X
};

// Pulls an interleaving X ~ Y back along a morphism h : B -> Y. A is the
// pointwise fiber product of f_r : X(r) -> Y(r+eps) and h_{r+eps}; k is its
// projection to B^eps, and l : B ->_delta A is induced by the pair
// (g o h, S_{0,eps+delta}(id_B)).
template <Category C>
  requires kHasFiberProducts<C>
PullbackResult<C> pullback_interleaving(const InterleavingCert<C>& cert, const DeltaMorphism<C>& h) {
  require_cert_shape(cert);
  if (h.shift() != Grade::zero(h.shift().arity()))
    throw PreconditionError("pullback_interleaving: h must be a plain morphism (shift 0)");
  if (!(h.target() == cert.y())) throw MismatchError("pullback_interleaving: h does not land in Y");
  if (auto v = h.naturality_violation()) throw PreconditionError("pullback_interleaving: h is not natural: " + *v);

  using Map = typename C::Map;
  const Grade& eps = cert.epsilon();
  const Grade& delta = cert.delta();
  const Grade zero = Grade::zero(eps.arity());
  const auto& x = cert.x();
  const auto& b = h.source();

  const Grid grid = Grid::merge(Grid::merge(x.grid(), b.grid().translated(zero - eps)), cert.y().grid().translated(zero - eps));
  std::vector<FiberProduct<C>> fibers;
  fibers.reserve(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const Grade r = grid.point(p);
    fibers.emplace_back(x.evaluate(r), b.evaluate(r + eps), cert.f.at(r), h.at(r + eps));
  }
  const auto apex = PersistentObject<C>::build(
      grid, [&](std::size_t p) { return fibers[p].apex; },
      [&](std::size_t p, std::size_t a) {
        const std::size_t q = grid.successor(p, a);
        const Grade rp = grid.point(p);
        const Grade rq = grid.point(q);
        return fibers[q].lift(C::compose(x.structure_map(rp, rq), fibers[p].to_x),
                              C::compose(b.structure_map(rp + eps, rq + eps), fibers[p].to_b));
      },
      x.indexing());

  auto fiber_at = [&](const Grade& r) -> const FiberProduct<C>* {
    auto p = grid.locate(r);
    return p ? &fibers[*p] : nullptr;
  };
  auto k = DeltaMorphism<C>::build(apex, b, eps, [&](const Grade& r) {
    const auto* fp = fiber_at(r);
    return fp ? fp->to_b : C::initial_map(b.evaluate(r + eps));
  });
  auto projection = DeltaMorphism<C>::build(apex, x, zero, [&](const Grade& r) {
    const auto* fp = fiber_at(r);
    return fp ? fp->to_x : C::initial_map(x.evaluate(r));
  });
  auto l = DeltaMorphism<C>::build(b, apex, delta, [&](const Grade& r) -> Map {
    const auto* fp = fiber_at(r + delta);
    if (!fp) return C::initial_map(apex.evaluate(r + delta));
    return fp->lift(C::compose(cert.g.at(r), h.at(r)), b.structure_map(r, r + delta + eps));
  });
  return {apex, {std::move(k), std::move(l)}, std::move(projection)};
}

}  // namespace perscert
