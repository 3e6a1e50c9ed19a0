#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "perscert/category.hpp"
#include "perscert/errors.hpp"
#include "perscert/grade.hpp"
#include "perscert/grid.hpp"

namespace perscert {

// A functor R^m -> C (or Z -> C) presented on a finite grid.
//
// Evaluation is piecewise constant: X(r) is the value at the largest grid
// point below r on every axis, the initial object when r is below the grid
// on some axis, and constant past the top of each axis. One structure map is
// stored per grid successor edge; construction checks that maps are well
// typed and that every elementary square commutes.
template <Category C>
class PersistentObject {
 public:
  using Object = typename C::Object;
  using Map = typename C::Map;
  using ObjectFn = std::function<Object(std::size_t flat)>;
  using EdgeFn = std::function<Map(std::size_t flat, std::size_t axis)>;

  PersistentObject() = default;

  // edge_maps[axis][flat] is the map X(p) -> X(p + e_axis); entries at points
  // without a successor along `axis` are ignored and normalized.
  PersistentObject(Grid grid, std::vector<Object> objects, std::vector<std::vector<Map>> edge_maps,
                   Indexing indexing = Indexing::Real)
      : grid_(std::move(grid)), indexing_(indexing), objects_(std::move(objects)), edges_(std::move(edge_maps)) {
    if (objects_.size() != grid_.size()) throw PreconditionError("one object per grid point is required");
    if (edges_.size() != grid_.arity()) throw PreconditionError("one edge-map table per axis is required");
    for (std::size_t a = 0; a < grid_.arity(); ++a) {
      if (edges_[a].size() != grid_.size()) throw PreconditionError("one edge map per grid point is required");
      for (std::size_t p = 0; p < grid_.size(); ++p) {
        if (!grid_.has_successor(p, a)) {
          edges_[a][p] = Map{};
          continue;
        }
        if (!C::is_valid(edges_[a][p], objects_[p], objects_[grid_.successor(p, a)]))
          throw PreconditionError("ill-typed structure map at " + grid_.point(p).str() + " along axis " +
                                  std::to_string(a));
      }
    }
    if (auto violation = functoriality_violation()) throw PreconditionError(*violation);
  }

  static PersistentObject build(Grid grid, const ObjectFn& object_at, const EdgeFn& edge_at,
                                Indexing indexing = Indexing::Real) {
    std::vector<Object> objects;
    objects.reserve(grid.size());
    for (std::size_t p = 0; p < grid.size(); ++p) objects.push_back(object_at(p));
    std::vector<std::vector<Map>> edges(grid.arity(), std::vector<Map>(grid.size()));
    for (std::size_t a = 0; a < grid.arity(); ++a)
      for (std::size_t p = 0; p < grid.size(); ++p)
        if (grid.has_successor(p, a)) edges[a][p] = edge_at(p, a);
    return PersistentObject(std::move(grid), std::move(objects), std::move(edges), indexing);
  }

  // Constant functor with value `value` from `from` upwards, initial below.
  static PersistentObject constant_from(const Grade& from, Object value, Indexing indexing = Indexing::Real) {
    std::vector<std::vector<Rational>> axes;
    for (const auto& c : from) axes.push_back({c});
    return build(Grid(std::move(axes)), [&](std::size_t) { return value; },
                 [&](std::size_t, std::size_t) { return Map{}; }, indexing);
  }

  const Grid& grid() const { return grid_; }
  Indexing indexing() const { return indexing_; }
  std::size_t arity() const { return grid_.arity(); }
  const std::vector<Object>& objects() const { return objects_; }
  const Object& object(std::size_t flat) const { return objects_[flat]; }
  const Map& edge(std::size_t flat, std::size_t axis) const { return edges_[axis][flat]; }
  const std::vector<std::vector<Map>>& edge_maps() const { return edges_; }

  PersistentObject with_indexing(Indexing indexing) const {
    PersistentObject out = *this;
    out.indexing_ = indexing;
    return out;
  }

  const Object& evaluate(const Grade& r) const {
    static const Object kInitial = C::initial();
    auto p = grid_.locate(r);
    return p ? objects_[*p] : kInitial;
  }

  // Composite of edge maps from grid point `from` to grid point `to`
  // (from <= to componentwise).
  Map map_between(std::size_t from, std::size_t to) const {
    if (!grid_.flat_leq(from, to)) throw OrderError("map_between: points are not ordered");
    Map m = C::identity(objects_[from]);
    std::size_t cur = from;
    for (std::size_t a = 0; a < grid_.arity(); ++a)
      while (grid_.coordinate(cur, a) < grid_.coordinate(to, a)) {
        m = C::compose(edges_[a][cur], m);
        cur = grid_.successor(cur, a);
      }
    return m;
  }

  // phi_{r,s}. Throws OrderError unless r <= s.
  Map structure_map(const Grade& r, const Grade& s) const {
    if (!leq(r, s)) throw OrderError("structure map requested for " + r.str() + " !<= " + s.str());
    auto pr = grid_.locate(r);
    if (!pr) return C::initial_map(evaluate(s));
    return map_between(*pr, *grid_.locate(s));
  }

  // Description of the first non-commuting elementary square, if any.
  std::optional<std::string> functoriality_violation() const {
    for (std::size_t p = 0; p < grid_.size(); ++p)
      for (std::size_t a = 0; a < grid_.arity(); ++a)
        for (std::size_t b = a + 1; b < grid_.arity(); ++b) {
          if (!grid_.has_successor(p, a) || !grid_.has_successor(p, b)) continue;
          const std::size_t pa = grid_.successor(p, a);
          const std::size_t pb = grid_.successor(p, b);
          const Map via_a = C::compose(edges_[b][pa], edges_[a][p]);
          const Map via_b = C::compose(edges_[a][pb], edges_[b][p]);
          if (!(via_a == via_b))
            return "square at " + grid_.point(p).str() + " spanned by axes " + std::to_string(a) + " and " +
                   std::to_string(b) + " does not commute";
        }
    return std::nullopt;
  }

  friend bool operator==(const PersistentObject&, const PersistentObject&) = default;

 private:
  Grid grid_;
  Indexing indexing_ = Indexing::Real;
  std::vector<Object> objects_;
  std::vector<std::vector<Map>> edges_;
};

// Re-presents X on another grid by evaluation: objects X(p) and structure
// maps phi_{p, p+e_i}.
template <Category C>
PersistentObject<C> resample(const PersistentObject<C>& x, const Grid& grid,
                             std::optional<Indexing> indexing = std::nullopt) {
  return PersistentObject<C>::build(
      grid, [&](std::size_t p) { return x.evaluate(grid.point(p)); },
      [&](std::size_t p, std::size_t a) { return x.structure_map(grid.point(p), grid.point(grid.successor(p, a))); },
      indexing.value_or(x.indexing()));
}

// Equality as functors: same values and structure maps on the common
// refinement of both grids.
template <Category C>
bool functor_equal(const PersistentObject<C>& x, const PersistentObject<C>& y) {
  if (x.arity() != y.arity()) return false;
  const Grid g = Grid::merge(x.grid(), y.grid());
  return resample(x, g, Indexing::Real) == resample(y, g, Indexing::Real);
}

// The delta-shift to the left: X^delta(r) = X(r + delta). Throws
// PreconditionError unless delta >= 0.
template <Category C>
PersistentObject<C> shift_left(const PersistentObject<C>& x, const Grade& delta) {
  if (!is_nonnegative(delta)) throw PreconditionError("shift must be nonnegative, got " + delta.str());
  return PersistentObject<C>(x.grid().translated(Grade::zero(delta.arity()) - delta), x.objects(), x.edge_maps(),
                             x.indexing());
}

// Restriction of an m-parameter object to the axis-parallel line through
// `base` along `axis`: a one-parameter object on that axis' breakpoints.
template <Category C>
PersistentObject<C> restrict_to_line(const PersistentObject<C>& x, std::size_t axis, const Grade& base) {
  if (axis >= x.arity() || base.arity() != x.arity()) throw DimensionError("restrict_to_line: bad axis or base");
  const Grid line({x.grid().axis(axis)});
  auto lift = [&](const Rational& t) {
    std::vector<Rational> c = base.coords();
    c[axis] = t;
    return Grade(std::move(c));
  };
  return PersistentObject<C>::build(
      line, [&](std::size_t p) { return x.evaluate(lift(line.axis(0)[p])); },
      [&](std::size_t p, std::size_t) { return x.structure_map(lift(line.axis(0)[p]), lift(line.axis(0)[p + 1])); },
      x.indexing());
}

}  // namespace perscert
