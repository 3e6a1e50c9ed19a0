#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "perscert/rational.hpp"

namespace perscert {

// A point of R^m with exact rational coordinates. Immutable value type.
//
// operator<=> is the lexicographic order, used only for keying containers;
// the persistence order is the product order `leq`.
class Grade {
 public:
  Grade() = default;
  explicit Grade(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Grade(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Grade zero(std::size_t arity) { return Grade(std::vector<Rational>(arity)); }
  static Grade uniform(std::size_t arity, const Rational& value) {
    return Grade(std::vector<Rational>(arity, value));
  }

  std::size_t arity() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  std::string str() const;

  friend bool operator==(const Grade&, const Grade&) = default;
  friend auto operator<=>(const Grade&, const Grade&) = default;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Grade& g);

// Product order: a <= b iff a_i <= b_i for every i. Throws DimensionError on
// an arity mismatch.
bool leq(const Grade& a, const Grade& b);
bool is_nonnegative(const Grade& g);

Grade add(const Grade& a, const Grade& b);
Grade sub(const Grade& a, const Grade& b);
inline Grade operator+(const Grade& a, const Grade& b) { return add(a, b); }
inline Grade operator-(const Grade& a, const Grade& b) { return sub(a, b); }

// Coordinatewise meet and join.
Grade meet(const Grade& a, const Grade& b);
Grade join(const Grade& a, const Grade& b);

// M_c(r) = c * r on a one-parameter grade. Throws PreconditionError unless
// c > 0, DimensionError unless r has arity 1.
Grade scale(const Grade& r, const Rational& c);

// n // m: the largest l with l * m <= n.
std::int64_t floor_div(std::int64_t n, std::int64_t m);

// e_m(n) = e(n // m) * m where e fixes even numbers and sends odd n to n - 1.
std::int64_t even_reindex(std::int64_t n, std::int64_t m);
// o_m(n) = o(n // m) * m where o fixes odd numbers and sends even n to n - 1.
std::int64_t odd_reindex(std::int64_t n, std::int64_t m);

}  // namespace perscert
