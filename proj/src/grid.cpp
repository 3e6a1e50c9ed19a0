#include "perscert/grid.hpp"

#include <algorithm>

#include "perscert/errors.hpp"

namespace perscert {

Grid::Grid(std::vector<std::vector<Rational>> axes) : axes_(std::move(axes)) {
  if (axes_.empty()) throw PreconditionError("grid needs at least one axis");
  for (const auto& a : axes_) {
    if (a.empty()) throw PreconditionError("grid axes must be nonempty");
    for (std::size_t i = 1; i < a.size(); ++i)
      if (!(a[i - 1] < a[i])) throw PreconditionError("grid axes must be strictly increasing");
  }
  strides_.assign(axes_.size(), 1);
  for (std::size_t i = axes_.size() - 1; i-- > 0;) strides_[i] = strides_[i + 1] * axes_[i + 1].size();
  size_ = strides_[0] * axes_[0].size();
}

Grid Grid::integer_window(std::int64_t lo, std::int64_t hi) {
  if (hi < lo) throw PreconditionError("empty integer window");
  std::vector<Rational> axis;
  for (std::int64_t n = lo; n <= hi; ++n) axis.emplace_back(n);
  return Grid({std::move(axis)});
}

Grid Grid::merge(const Grid& a, const Grid& b) {
  if (a.arity() != b.arity()) throw DimensionError("cannot merge grids of different arity");
  std::vector<std::vector<Rational>> axes;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    std::vector<Rational> merged;
    std::set_union(a.axes_[i].begin(), a.axes_[i].end(), b.axes_[i].begin(), b.axes_[i].end(),
                   std::back_inserter(merged));
    axes.push_back(std::move(merged));
  }
  return Grid(std::move(axes));
}

Grade Grid::point(std::size_t flat) const {
  std::vector<Rational> coords;
  coords.reserve(axes_.size());
  for (std::size_t i = 0; i < axes_.size(); ++i) coords.push_back(axes_[i][coordinate(flat, i)]);
  return Grade(std::move(coords));
}

bool Grid::flat_leq(std::size_t a, std::size_t b) const {
  for (std::size_t i = 0; i < axes_.size(); ++i)
    if (coordinate(a, i) > coordinate(b, i)) return false;
  return true;
}

std::optional<std::size_t> Grid::locate(const Grade& r) const {
  if (r.arity() != axes_.size())
    throw DimensionError("grade of arity " + std::to_string(r.arity()) + " on a grid of arity " +
                         std::to_string(axes_.size()));
  std::size_t flat = 0;
  for (std::size_t i = 0; i < axes_.size(); ++i) {
    auto it = std::upper_bound(axes_[i].begin(), axes_[i].end(), r[i]);
    if (it == axes_[i].begin()) return std::nullopt;
    flat += static_cast<std::size_t>(it - axes_[i].begin() - 1) * strides_[i];
  }
  return flat;
}

Grid Grid::translated(const Grade& by) const {
  if (by.arity() != axes_.size()) throw DimensionError("translation arity mismatch");
  auto axes = axes_;
  for (std::size_t i = 0; i < axes.size(); ++i)
    for (auto& v : axes[i]) v += by[i];
  return Grid(std::move(axes));
}

Grid Grid::divided(const Rational& c) const {
  if (c.sign() <= 0) throw PreconditionError("grid scale must be positive");
  auto axes = axes_;
  for (auto& axis : axes)
    for (auto& v : axis) v /= c;
  return Grid(std::move(axes));
}

}  // namespace perscert
