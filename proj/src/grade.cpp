#include "perscert/grade.hpp"

#include <ostream>

#include "perscert/errors.hpp"

namespace perscert {

namespace {

void require_same_arity(const Grade& a, const Grade& b) {
  if (a.arity() != b.arity())
    throw DimensionError("grade arity mismatch: " + std::to_string(a.arity()) + " vs " +
                         std::to_string(b.arity()));
}

template <class Op>
Grade zip(const Grade& a, const Grade& b, Op op) {
  require_same_arity(a, b);
  std::vector<Rational> out;
  out.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) out.push_back(op(a[i], b[i]));
  return Grade(std::move(out));
}

}  // namespace

std::string Grade::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ", ";
    s += coords_[i].str();
  }
  return s + ")";
}

std::ostream& operator<<(std::ostream& os, const Grade& g) { return os << g.str(); }

bool leq(const Grade& a, const Grade& b) {
  require_same_arity(a, b);
  for (std::size_t i = 0; i < a.arity(); ++i)
    if (b[i] < a[i]) return false;
  return true;
}

bool is_nonnegative(const Grade& g) {
  for (const auto& c : g)
    if (c.sign() < 0) return false;
  return true;
}

Grade add(const Grade& a, const Grade& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return x + y; });
}

Grade sub(const Grade& a, const Grade& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return x - y; });
}

Grade meet(const Grade& a, const Grade& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return min(x, y); });
}

Grade join(const Grade& a, const Grade& b) {
  return zip(a, b, [](const Rational& x, const Rational& y) { return max(x, y); });
}

Grade scale(const Grade& r, const Rational& c) {
  if (r.arity() != 1) throw DimensionError("scale is defined on one-parameter grades");
  if (c.sign() <= 0) throw PreconditionError("scale factor must be positive, got " + c.str());
  return Grade{r[0] * c};
}

std::int64_t floor_div(std::int64_t n, std::int64_t m) {
  if (m <= 0) throw PreconditionError("floor_div requires a positive divisor");
  std::int64_t q = n / m;
  if ((n % m != 0) && (n < 0)) --q;
  return q;
}

std::int64_t even_reindex(std::int64_t n, std::int64_t m) {
  const std::int64_t q = floor_div(n, m);
  const std::int64_t e = (q % 2 == 0) ? q : q - 1;
  return e * m;
}

std::int64_t odd_reindex(std::int64_t n, std::int64_t m) {
  const std::int64_t q = floor_div(n, m);
  const std::int64_t o = (q % 2 != 0) ? q : q - 1;
  return o * m;
}

}  // namespace perscert
