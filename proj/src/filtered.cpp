#include "perscert/filtered.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace perscert {

FilteredComplex::FilteredComplex(std::size_t arity, std::vector<Vertex> vertices, std::vector<FilteredSimplex> simplices)
    : arity_(arity), vertices_(std::move(vertices)), simplices_(std::move(simplices)) {
  if (arity_ == 0) throw PreconditionError("filtered complex needs arity >= 1");
  std::sort(vertices_.begin(), vertices_.end());
  vertices_.erase(std::unique(vertices_.begin(), vertices_.end()), vertices_.end());
  for (auto& s : simplices_) {
    std::sort(s.vertices.begin(), s.vertices.end());
    if (s.grade.arity() != arity_) throw DimensionError("simplex grade has the wrong arity");
  }
  std::sort(simplices_.begin(), simplices_.end(),
            [](const FilteredSimplex& a, const FilteredSimplex& b) { return SimplexOrder{}(a.vertices, b.vertices); });
}

std::optional<Grade> FilteredComplex::grade_of(const Simplex& s) const {
  auto it = std::lower_bound(simplices_.begin(), simplices_.end(), s,
                             [](const FilteredSimplex& a, const Simplex& b) { return SimplexOrder{}(a.vertices, b); });
  if (it == simplices_.end() || it->vertices != s) return std::nullopt;
  return it->grade;
}

static std::string simplex_str(const Simplex& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "]";
}

ValidationReport validate(const FilteredComplex& f) {
  const auto& ss = f.simplices();
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const auto& s = ss[i].vertices;
    if (s.empty()) return {false, "empty simplex"};
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return {false, "repeated vertex in " + simplex_str(s)};
    if (i > 0 && ss[i - 1].vertices == s) return {false, "duplicate simplex " + simplex_str(s)};
    for (Vertex v : s)
      if (!std::binary_search(f.vertices().begin(), f.vertices().end(), v))
        return {false, "simplex " + simplex_str(s) + " uses undeclared vertex " + std::to_string(v)};
    if (s.size() < 2) continue;
    for (const auto& face : facets(s)) {
      auto g = f.grade_of(face);
      if (!g) return {false, "face " + simplex_str(face) + " of " + simplex_str(s) + " is missing"};
      if (!leq(*g, ss[i].grade))
        return {false, "face " + simplex_str(face) + " enters at " + g->str() + ", after " + simplex_str(s) +
                           " at " + ss[i].grade.str()};
    }
  }
  return {};
}

PersistentObject<Complex> to_persistent(const FilteredComplex& f) {
  if (auto r = validate(f); !r.valid) throw PreconditionError("invalid filtered complex: " + r.violation);
  std::vector<std::vector<Rational>> axes(f.arity());
  for (const auto& s : f.simplices())
    for (std::size_t i = 0; i < f.arity(); ++i) axes[i].push_back(s.grade[i]);
  for (auto& a : axes) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    if (a.empty()) a.push_back(Rational(0));
  }
  const Grid grid(std::move(axes));
  std::vector<SimplicialComplex> objects;
  objects.reserve(grid.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const Grade r = grid.point(p);
    std::vector<Simplex> present;
    for (const auto& s : f.simplices())
      if (leq(s.grade, r)) present.push_back(s.vertices);
    objects.emplace_back(std::move(present));
  }
  return PersistentObject<Complex>::build(
      grid, [&](std::size_t p) { return objects[p]; },
      [&](std::size_t p, std::size_t) { return Complex::identity(objects[p]); });
}

FilteredCheck is_filtered(const PersistentObject<Complex>& x) {
  const Grid& grid = x.grid();
  FilteredCheck out;
  for (std::size_t a = 0; a < grid.arity(); ++a)
    for (std::size_t p = 0; p < grid.size(); ++p) {
      if (!grid.has_successor(p, a)) continue;
      if (!x.edge(p, a).is_injective()) {
        out.filtered = false;
        out.violated_condition = 1;
        out.detail = "structure map at " + grid.point(p).str() + " along axis " + std::to_string(a) +
                     " is not a monomorphism";
        for (const auto& [v, w] : x.edge(p, a).pairs())
          for (const auto& [v2, w2] : x.edge(p, a).pairs())
            if (v != v2 && w == w2 && !out.simplex) out.simplex = Simplex{v};
        return out;
      }
    }

  const std::size_t top = grid.top();
  const SimplicialComplex& whole = x.object(top);
  // appears[i]: grid points whose complex maps onto simplex i of the top.
  std::vector<std::vector<std::size_t>> appears(whole.size());
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const VertexMap to_top = x.map_between(p, top);
    for (const auto& s : x.object(p).simplices()) appears[whole.index_of(to_top(s))].push_back(p);
  }
  std::vector<FilteredSimplex> beta;
  for (std::size_t i = 0; i < whole.size(); ++i) {
    const auto& pts = appears[i];
    std::vector<std::size_t> low(grid.arity(), SIZE_MAX);
    for (std::size_t p : pts)
      for (std::size_t a = 0; a < grid.arity(); ++a) low[a] = std::min(low[a], grid.coordinate(p, a));
    std::size_t q = 0;
    for (std::size_t a = 0; a < grid.arity(); ++a) q += low[a] * grid.stride(a);
    if (!std::binary_search(pts.begin(), pts.end(), q)) {
      out.filtered = false;
      out.violated_condition = 2;
      out.simplex = whole.simplices()[i];
      out.detail = "has a minimum fails: simplex " + simplex_str(whole.simplices()[i]) +
                   " has no least entrance grade (componentwise lower bound " + grid.point(q).str() + " is outside its appearance set)";
      return out;
    }
    beta.push_back({whole.simplices()[i], grid.point(q)});
  }
  out.witness = FilteredComplex(grid.arity(), whole.vertices(), std::move(beta));
  return out;
}

int dimension(const FilteredComplex& f) {
  int d = -1;
  for (const auto& s : f.simplices()) d = std::max(d, static_cast<int>(s.vertices.size()) - 1);
  return d;
}

bool is_n_skeletal(const FilteredComplex& f, int n) { return dimension(f) <= n; }

int cofibrant_dimension(const FilteredComplex& f) { return dimension(f); }

FilteredComplex skeleton(const FilteredComplex& f, int n) {
  if (n < 0) throw PreconditionError("skeleton needs n >= 0");
  std::vector<FilteredSimplex> kept;
  for (const auto& s : f.simplices())
    if (static_cast<int>(s.vertices.size()) - 1 <= n) kept.push_back(s);
  return FilteredComplex(f.arity(), f.vertices(), std::move(kept));
}

void MetricInput::check() const {
  const std::size_t n = distances.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (distances[i].size() != n) throw PreconditionError("distance matrix is not square");
    if (distances[i][i] != Rational(0)) throw PreconditionError("distance matrix has a nonzero diagonal entry");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (distances[i][j] != distances[j][i]) throw PreconditionError("distance matrix is not symmetric");
  if (function && function->size() != n) throw PreconditionError("function has the wrong number of values");
}

MetricInput metric_from_points(const std::vector<std::vector<Rational>>& points, Norm norm) {
  MetricInput m;
  const std::size_t n = points.size();
  m.distances.assign(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (points[i].size() != points[j].size()) throw DimensionError("points of different dimension");
      Rational d(0);
      for (std::size_t k = 0; k < points[i].size(); ++k) {
        const Rational diff = abs(points[i][k] - points[j][k]);
        d = norm == Norm::L1 ? d + diff : max(d, diff);
      }
      m.distances[i][j] = d;
    }
  return m;
}

namespace {

// Every nonempty subset of {0..n-1} with at most `max_size` elements, in
// lexicographic order.
void for_each_subset(std::size_t n, std::size_t max_size, const std::function<void(const Simplex&)>& visit) {
  Simplex cur;
  std::function<void(Vertex)> rec = [&](Vertex start) {
    for (Vertex v = start; v < static_cast<Vertex>(n); ++v) {
      cur.push_back(v);
      visit(cur);
      if (cur.size() < max_size) rec(v + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

Rational diameter(const MetricInput& m, const Simplex& s) {
  Rational d(0);
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) d = max(d, m.distances[s[i]][s[j]]);
  return d;
}

std::vector<Vertex> iota_vertices(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Vertex>(i);
  return v;
}

}  // namespace

FilteredComplex vietoris_rips(const MetricInput& metric, int d_max) {
  metric.check();
  if (d_max < 0) throw PreconditionError("d_max must be >= 0");
  std::vector<FilteredSimplex> out;
  for_each_subset(metric.size(), static_cast<std::size_t>(d_max) + 1,
                  [&](const Simplex& s) { out.push_back({s, Grade{diameter(metric, s)}}); });
  return FilteredComplex(1, iota_vertices(metric.size()), std::move(out));
}

FilteredComplex function_rips(const MetricInput& metric, int d_max) {
  metric.check();
  if (!metric.function) throw PreconditionError("function_rips needs vertex function values");
  if (d_max < 0) throw PreconditionError("d_max must be >= 0");
  const auto& f = *metric.function;
  std::vector<FilteredSimplex> out;
  for_each_subset(metric.size(), static_cast<std::size_t>(d_max) + 1, [&](const Simplex& s) {
    Rational top = f[s.front()];
    for (Vertex v : s) top = max(top, f[v]);
    out.push_back({s, Grade{diameter(metric, s), top}});
  });
  return FilteredComplex(2, iota_vertices(metric.size()), std::move(out));
}

PersistentObject<Complex> degree_rips(const MetricInput& metric, int d_max) {
  metric.check();
  if (d_max < 0) throw PreconditionError("d_max must be >= 0");
  const std::size_t n = metric.size();
  std::set<Rational> scales{Rational(0)};
  for (const auto& row : metric.distances) scales.insert(row.begin(), row.end());
  std::vector<Rational> degree_axis;
  const long kmax = n == 0 ? 0 : static_cast<long>(n) - 1;
  for (long k = kmax; k >= 0; --k) degree_axis.emplace_back(-k);
  const Grid grid({{scales.begin(), scales.end()}, degree_axis});

  std::vector<Simplex> all;
  for_each_subset(n, static_cast<std::size_t>(d_max) + 1, [&](const Simplex& s) { all.push_back(s); });
  std::vector<SimplicialComplex> objects;
  for (std::size_t p = 0; p < grid.size(); ++p) {
    const Grade g = grid.point(p);
    const Rational& r = g[0];
    const long k = -floor_int(g[1]);
    std::vector<bool> keep(n);
    for (std::size_t v = 0; v < n; ++v) {
      long deg = 0;
      for (std::size_t w = 0; w < n; ++w)
        if (w != v && metric.distances[v][w] <= r) ++deg;
      keep[v] = deg >= k;
    }
    std::vector<Simplex> present;
    for (const auto& s : all)
      if (diameter(metric, s) <= r && std::all_of(s.begin(), s.end(), [&](Vertex v) { return keep[v]; }))
        present.push_back(s);
    objects.emplace_back(std::move(present));
  }
  return PersistentObject<Complex>::build(
      grid, [&](std::size_t p) { return objects[p]; },
      [&](std::size_t p, std::size_t) { return Complex::identity(objects[p]); });
}

PersistentObject<Complex> sq_gadget(const SquareDiagram& d) {
  if (!Complex::is_valid(d.m00_10, d.d00, d.d10) || !Complex::is_valid(d.m00_01, d.d00, d.d01) ||
      !Complex::is_valid(d.m10_11, d.d10, d.d11) || !Complex::is_valid(d.m01_11, d.d01, d.d11))
    throw PreconditionError("square diagram has an ill-typed map");
  if (!(Complex::compose(d.m10_11, d.m00_10) == Complex::compose(d.m01_11, d.m00_01)))
    throw PreconditionError("square diagram does not commute");

  std::vector<Rational> axis;
  for (long v = -1; v <= 3; ++v) axis.emplace_back(v);
  const Grid grid({axis, axis});
  const SimplicialComplex point = SimplicialComplex::point(0);
  auto corner = [&](long i, long j) -> const SimplicialComplex& {
    return i == 0 ? (j == 0 ? d.d00 : d.d01) : (j == 0 ? d.d10 : d.d11);
  };
  auto coords = [&](std::size_t p) {
    return std::pair<long, long>{static_cast<long>(grid.coordinate(p, 0)) - 1, static_cast<long>(grid.coordinate(p, 1)) - 1};
  };
  auto object_at = [&](std::size_t p) -> SimplicialComplex {
    const auto [i, j] = coords(p);
    if (i < 0 || j < 0) return {};
    if (i < 2 && j < 2) return corner(i, j);
    return point;
  };
  auto collapse = [](const SimplicialComplex& k) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v : k.vertices()) pairs.emplace_back(v, 0);
    return VertexMap(std::move(pairs));
  };
  return PersistentObject<Complex>::build(grid, object_at, [&](std::size_t p, std::size_t a) -> VertexMap {
    const auto [i, j] = coords(p);
    if (i < 0 || j < 0) return {};
    const long ni = a == 0 ? i + 1 : i, nj = a == 1 ? j + 1 : j;
    if (ni >= 2 || nj >= 2) return collapse(object_at(p));
    if (a == 0) return j == 0 ? d.m00_10 : d.m01_11;
    return i == 0 ? d.m00_01 : d.m10_11;
  });
}

}  // namespace perscert
