#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "perscert/grade.hpp"
#include "perscert/rational.hpp"

namespace perscert {

// Whether a persistent object is meant as a functor on R^m or on Z. Both are
// stored the same way (Z-indexed objects use consecutive integer axes); the
// tag only affects which grades callers evaluate at.
enum class Indexing { Real, Integer };

// Finite product grid: one strictly increasing list of rationals per axis.
// Points are flattened row-major with the last axis fastest, so every
// predecessor p - e_i of p has a smaller flat index.
class Grid {
 public:
  Grid() = default;
  explicit Grid(std::vector<std::vector<Rational>> axes);

  // Single axis {lo, lo+1, ..., hi}.
  static Grid integer_window(std::int64_t lo, std::int64_t hi);
  // Per-axis union of breakpoints.
  static Grid merge(const Grid& a, const Grid& b);

  std::size_t arity() const { return axes_.size(); }
  std::size_t size() const { return size_; }
  std::size_t extent(std::size_t axis) const { return axes_[axis].size(); }
  const std::vector<Rational>& axis(std::size_t i) const { return axes_[i]; }
  const std::vector<std::vector<Rational>>& axes() const { return axes_; }

  Grade point(std::size_t flat) const;
  std::size_t coordinate(std::size_t flat, std::size_t axis) const { return (flat / strides_[axis]) % axes_[axis].size(); }
  std::size_t stride(std::size_t axis) const { return strides_[axis]; }
  bool has_successor(std::size_t flat, std::size_t axis) const {
    return coordinate(flat, axis) + 1 < axes_[axis].size();
  }
  bool has_predecessor(std::size_t flat, std::size_t axis) const { return coordinate(flat, axis) > 0; }
  std::size_t successor(std::size_t flat, std::size_t axis) const { return flat + strides_[axis]; }
  std::size_t predecessor(std::size_t flat, std::size_t axis) const { return flat - strides_[axis]; }
  // Componentwise maximum point.
  std::size_t top() const { return size_ - 1; }
  bool flat_leq(std::size_t a, std::size_t b) const;

  // Flat index of the largest grid point <= r along every axis, or nullopt
  // when r lies below the grid on some axis.
  std::optional<std::size_t> locate(const Grade& r) const;

  Grid translated(const Grade& by) const;
  // Every breakpoint divided by c (c > 0).
  Grid divided(const Rational& c) const;

  Grade min_point() const { return point(0); }
  Grade max_point() const { return point(top()); }

  friend bool operator==(const Grid& a, const Grid& b) { return a.axes_ == b.axes_; }

 private:
  std::vector<std::vector<Rational>> axes_;
  std::vector<std::size_t> strides_;
  std::size_t size_ = 0;
};

}  // namespace perscert
