#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "perscert/persistent.hpp"

namespace perscert {

// A delta-morphism f : X ->_delta Y, i.e. a natural transformation
// X -> Y^delta. Components are stored at the points of the evaluation grid,
// the common refinement of X's grid and Y's grid translated by -delta; on
// every cell of that grid both X(r) and Y(r + delta) are constant, so the
// component there is constant too.
template <Category C>
class DeltaMorphism {
 public:
  using Object = typename C::Object;
  using Map = typename C::Map;
  using ComponentFn = std::function<Map(const Grade& r)>;

  DeltaMorphism(PersistentObject<C> source, PersistentObject<C> target, Grade shift, std::vector<Map> components)
      : source_(std::move(source)),
        target_(std::move(target)),
        shift_(std::move(shift)),
        grid_(evaluation_grid(source_, target_, shift_)),
        components_(std::move(components)) {
    if (components_.size() != grid_.size())
      throw PreconditionError("delta-morphism needs one component per evaluation point (" +
                              std::to_string(grid_.size()) + "), got " + std::to_string(components_.size()));
    for (std::size_t p = 0; p < grid_.size(); ++p) {
      const Grade r = grid_.point(p);
      if (!C::is_valid(components_[p], source_.evaluate(r), target_.evaluate(r + shift_)))
        throw PreconditionError("ill-typed component at " + r.str());
    }
  }

  static Grid evaluation_grid(const PersistentObject<C>& source, const PersistentObject<C>& target,
                              const Grade& shift) {
    if (source.arity() != target.arity() || shift.arity() != source.arity())
      throw DimensionError("delta-morphism arity mismatch");
    if (!is_nonnegative(shift)) throw PreconditionError("delta-morphism shift must be nonnegative, got " + shift.str());
    return Grid::merge(source.grid(), target.grid().translated(Grade::zero(shift.arity()) - shift));
  }

  static DeltaMorphism build(PersistentObject<C> source, PersistentObject<C> target, Grade shift,
                             const ComponentFn& component_at) {
    const Grid g = evaluation_grid(source, target, shift);
    std::vector<Map> comps;
    comps.reserve(g.size());
    for (std::size_t p = 0; p < g.size(); ++p) comps.push_back(component_at(g.point(p)));
    return DeltaMorphism(std::move(source), std::move(target), std::move(shift), std::move(comps));
  }

  const PersistentObject<C>& source() const { return source_; }
  const PersistentObject<C>& target() const { return target_; }
  const Grade& shift() const { return shift_; }
  const Grid& grid() const { return grid_; }
  const std::vector<Map>& components() const { return components_; }

  // f_r : X(r) -> Y(r + shift) for any grade r.
  Map at(const Grade& r) const {
    auto p = grid_.locate(r);
    if (!p) return C::initial_map(target_.evaluate(r + shift_));
    return components_[*p];
  }

  // First evaluation-grid edge where the naturality square fails.
  std::optional<std::string> naturality_violation() const {
    for (std::size_t p = 0; p < grid_.size(); ++p)
      for (std::size_t a = 0; a < grid_.arity(); ++a) {
        if (!grid_.has_successor(p, a)) continue;
        const std::size_t q = grid_.successor(p, a);
        const Grade rp = grid_.point(p);
        const Grade rq = grid_.point(q);
        const Map down_right = C::compose(target_.structure_map(rp + shift_, rq + shift_), components_[p]);
        const Map right_down = C::compose(components_[q], source_.structure_map(rp, rq));
        if (!(down_right == right_down))
          return "naturality fails between " + rp.str() + " and " + rq.str();
      }
    return std::nullopt;
  }

  friend bool operator==(const DeltaMorphism&, const DeltaMorphism&) = default;

 private:
  PersistentObject<C> source_;
  PersistentObject<C> target_;
  Grade shift_;
  Grid grid_;
  std::vector<Map> components_;
};

template <Category C>
DeltaMorphism<C> identity_morphism(const PersistentObject<C>& x) {
  return DeltaMorphism<C>::build(x, x, Grade::zero(x.arity()), [&](const Grade& r) { return C::identity(x.evaluate(r)); });
}

// S_{eps,delta}(f): components phi^Y_{r+eps, r+delta} o f_r. Throws
// OrderError unless eps <= delta.
template <Category C>
DeltaMorphism<C> shift_morphism(const DeltaMorphism<C>& f, const Grade& delta) {
  const Grade& eps = f.shift();
  if (!leq(eps, delta)) throw OrderError("cannot shift a " + eps.str() + "-morphism to " + delta.str());
  const auto& y = f.target();
  return DeltaMorphism<C>::build(f.source(), y, delta, [&](const Grade& r) {
    return C::compose(y.structure_map(r + eps, r + delta), f.at(r));
  });
}

// S_{0,delta}(id_X): the structure maps phi^X_{r, r+delta}.
template <Category C>
DeltaMorphism<C> structure_morphism(const PersistentObject<C>& x, const Grade& delta) {
  return shift_morphism(identity_morphism(x), delta);
}

// g^eps o f : X ->_{eps+delta} Z for f : X ->_eps Y and g : Y ->_delta Z.
template <Category C>
DeltaMorphism<C> compose(const DeltaMorphism<C>& f, const DeltaMorphism<C>& g) {
  if (!(f.target() == g.source())) throw MismatchError("compose: target of the first morphism is not the source of the second");
  const Grade& eps = f.shift();
  return DeltaMorphism<C>::build(f.source(), g.target(), eps + g.shift(),
                                 [&](const Grade& r) { return C::compose(g.at(r + eps), f.at(r)); });
}

}  // namespace perscert
