#include "perscert/random.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace perscert {

namespace {

std::size_t pick_size(Rng& rng, std::size_t max_size) { return static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_size))); }

FinSet::Map random_function(Rng& rng, std::size_t from, std::size_t to) {
  FinSet::Map f(from);
  for (auto& v : f) v = static_cast<std::uint32_t>(rng.uniform(0, static_cast<std::int64_t>(to) - 1));
  return f;
}

F2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  F2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      if (rng.coin()) m.set(r, c);
  return m;
}

// Cardinalities that never drop to zero after being positive.
std::vector<std::size_t> monotone_support(Rng& rng, std::size_t n, std::size_t max_size) {
  std::vector<std::size_t> sizes(n);
  bool started = false;
  for (auto& s : sizes) {
    s = pick_size(rng, max_size);
    if (started && s == 0) s = 1;
    started = started || s > 0;
  }
  return sizes;
}

std::vector<Rational> random_breakpoints(Rng& rng, std::size_t count) {
  std::set<Rational> pts;
  while (pts.size() < count) pts.insert(Rational(rng.uniform(-12, 12), rng.uniform(1, 4)));
  return {pts.begin(), pts.end()};
}

}  // namespace

PersistentObject<FinSet> random_finset_z(Rng& rng, const RandomShape& shape) {
  const Grid grid = Grid::integer_window(shape.lo, shape.hi);
  const auto sizes = monotone_support(rng, grid.size(), shape.max_size);
  return PersistentObject<FinSet>::build(
      grid, [&](std::size_t p) { return sizes[p]; },
      [&](std::size_t p, std::size_t) { return random_function(rng, sizes[p], sizes[p + 1]); }, Indexing::Integer);
}

PersistentObject<F2Vec> random_f2vec_z(Rng& rng, const RandomShape& shape) {
  const Grid grid = Grid::integer_window(shape.lo, shape.hi);
  std::vector<std::size_t> dims(grid.size());
  for (auto& d : dims) d = pick_size(rng, shape.max_size);
  return PersistentObject<F2Vec>::build(
      grid, [&](std::size_t p) { return dims[p]; },
      [&](std::size_t p, std::size_t) { return random_matrix(rng, dims[p + 1], dims[p]); }, Indexing::Integer);
}

PersistentObject<FinSet> random_finset_real(Rng& rng, std::size_t breakpoints, std::size_t max_size) {
  const Grid grid({random_breakpoints(rng, breakpoints)});
  const auto sizes = monotone_support(rng, grid.size(), max_size);
  return PersistentObject<FinSet>::build(
      grid, [&](std::size_t p) { return sizes[p]; },
      [&](std::size_t p, std::size_t) { return random_function(rng, sizes[p], sizes[p + 1]); });
}

PersistentObject<F2Vec> random_f2vec_real(Rng& rng, std::size_t breakpoints, std::size_t max_size) {
  const Grid grid({random_breakpoints(rng, breakpoints)});
  std::vector<std::size_t> dims(grid.size());
  for (auto& d : dims) d = pick_size(rng, max_size);
  return PersistentObject<F2Vec>::build(
      grid, [&](std::size_t p) { return dims[p]; },
      [&](std::size_t p, std::size_t) { return random_matrix(rng, dims[p + 1], dims[p]); });
}

FilteredComplex random_filtered_complex(Rng& rng, std::size_t max_vertices, std::int64_t max_grade, std::size_t arity) {
  const std::size_t n = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_vertices)));
  std::vector<Vertex> verts(n);
  std::iota(verts.begin(), verts.end(), 0);
  std::map<Simplex, Grade> grade;
  auto random_grade = [&] {
    std::vector<Rational> c(arity);
    for (auto& v : c) v = Rational(rng.uniform(0, max_grade));
    return Grade(std::move(c));
  };
  for (Vertex v : verts) grade[{v}] = random_grade();
  for (Vertex a = 0; a < static_cast<Vertex>(n); ++a)
    for (Vertex b = a + 1; b < static_cast<Vertex>(n); ++b)
      if (rng.coin(45)) grade[{a, b}] = join(join(grade[{a}], grade[{b}]), random_grade());
  for (Vertex a = 0; a < static_cast<Vertex>(n); ++a)
    for (Vertex b = a + 1; b < static_cast<Vertex>(n); ++b)
      for (Vertex c = b + 1; c < static_cast<Vertex>(n); ++c) {
        if (!grade.count({a, b}) || !grade.count({a, c}) || !grade.count({b, c}) || !rng.coin(40)) continue;
        grade[{a, b, c}] = join(join(grade[{a, b}], grade[{a, c}]), join(grade[{b, c}], random_grade()));
      }
  std::vector<FilteredSimplex> simplices;
  for (auto& [s, g] : grade) simplices.push_back({s, g});
  return FilteredComplex(arity, verts, std::move(simplices));
}

PersistentObject<Complex> random_collapsing_complex(Rng& rng, std::size_t points, std::size_t max_vertices) {
  std::vector<SimplicialComplex> objects;
  std::vector<VertexMap> maps;
  auto closure = [](const std::set<Simplex>& generators) {
    std::set<Simplex> all;
    for (const auto& s : generators) {
      // Every nonempty subset of s.
      const std::size_t k = s.size();
      for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        Simplex face;
        for (std::size_t i = 0; i < k; ++i)
          if (mask & (1u << i)) face.push_back(s[i]);
        all.insert(face);
      }
    }
    return SimplicialComplex(std::vector<Simplex>(all.begin(), all.end()));
  };
  auto add_random = [&](std::set<Simplex>& gens, std::vector<Vertex>& verts) {
    const std::size_t fresh = static_cast<std::size_t>(rng.uniform(0, 2));
    for (std::size_t i = 0; i < fresh && verts.size() < max_vertices; ++i) {
      const Vertex v = verts.empty() ? 0 : verts.back() + 1;
      verts.push_back(v);
      gens.insert({v});
    }
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j)
        if (rng.coin(25)) gens.insert({verts[i], verts[j]});
  };
  std::set<Simplex> gens;
  std::vector<Vertex> verts;
  add_random(gens, verts);
  objects.push_back(closure(gens));
  for (std::size_t p = 1; p < points; ++p) {
    const auto& prev = objects.back();
    const auto pv = prev.vertices();
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex v : pv) pairs.emplace_back(v, rng.coin(25) && !pv.empty() ? pv[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(pv.size()) - 1))] : v);
    VertexMap f(std::move(pairs));
    std::set<Simplex> next;
    for (const auto& s : prev.simplices()) next.insert(f(s));
    std::set<Vertex> vs;
    for (const auto& s : next) vs.insert(s.begin(), s.end());
    std::vector<Vertex> nv(vs.begin(), vs.end());
    add_random(next, nv);
    objects.push_back(closure(next));
    maps.push_back(std::move(f));
  }
  std::vector<Rational> axis;
  for (std::size_t p = 0; p < points; ++p) axis.emplace_back(static_cast<long long>(p));
  return PersistentObject<Complex>::build(
      Grid({axis}), [&](std::size_t p) { return objects[p]; }, [&](std::size_t p, std::size_t) { return maps[p]; });
}

std::vector<std::uint32_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::uint32_t> p(n);
  std::iota(p.begin(), p.end(), 0u);
  for (std::size_t i = n; i > 1; --i) std::swap(p[i - 1], p[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(i) - 1))]);
  return p;
}

std::pair<PersistentObject<FinSet>, InterleavingCert<FinSet>> random_relabel(Rng& rng, const PersistentObject<FinSet>& x) {
  const Grid& g = x.grid();
  std::vector<std::vector<std::uint32_t>> perm(g.size()), inverse(g.size());
  for (std::size_t p = 0; p < g.size(); ++p) {
    perm[p] = random_permutation(rng, x.object(p));
    inverse[p].resize(perm[p].size());
    for (std::uint32_t i = 0; i < perm[p].size(); ++i) inverse[p][perm[p][i]] = i;
  }
  auto relabelled = PersistentObject<FinSet>::build(
      g, [&](std::size_t p) { return x.object(p); },
      [&](std::size_t p, std::size_t a) {
        const std::size_t q = g.successor(p, a);
        return FinSet::compose(perm[q], FinSet::compose(x.edge(p, a), inverse[p]));
      },
      x.indexing());
  const Grade zero = Grade::zero(x.arity());
  auto lookup = [&](const std::vector<std::vector<std::uint32_t>>& table, const Grade& r) {
    auto p = g.locate(r);
    return p ? table[*p] : FinSet::Map{};
  };
  auto to = DeltaMorphism<FinSet>::build(x, relabelled, zero, [&](const Grade& r) { return lookup(perm, r); });
  auto back = DeltaMorphism<FinSet>::build(relabelled, x, zero, [&](const Grade& r) { return lookup(inverse, r); });
  return {relabelled, {std::move(to), std::move(back)}};
}

InterleavingCert<FinSet> random_interleaved_finset(Rng& rng, std::int64_t m, const RandomShape& shape) {
  RandomShape zshape = shape;
  zshape.hi = shape.hi - (2 * m - 1);
  const auto z = random_finset_z(rng, zshape);
  auto cert = even_odd_certificate(z, m, shape.lo, shape.hi);
  auto [b, iso] = random_relabel(rng, cert.y());
  return compose_interleavings(cert, iso);
}

InterleavingCert<F2Vec> random_interleaved_f2vec(Rng& rng, std::int64_t m, const RandomShape& shape) {
  RandomShape zshape = shape;
  zshape.hi = shape.hi - (2 * m - 1);
  return even_odd_certificate(random_f2vec_z(rng, zshape), m, shape.lo, shape.hi);
}

DeltaMorphism<FinSet> random_map_into(Rng& rng, const PersistentObject<FinSet>& y, std::size_t max_size) {
  const Grid& g = y.grid();
  if (g.arity() != 1) throw UnsupportedError("random_map_into: one-parameter targets only");
  std::vector<std::size_t> sizes(g.size());
  std::vector<FinSet::Map> h(g.size()), edges(g.size());
  for (std::size_t p = 0; p < g.size(); ++p) {
    const std::size_t ydim = y.object(p);
    FinSet::Map& hp = h[p];
    if (p > 0) {
      // Carry every element of B(p-1) over, merging with an earlier element
      // of the same h-value now and then.
      const FinSet::Map phi = y.edge(p - 1, 0);
      for (std::size_t x = 0; x < sizes[p - 1]; ++x) {
        const std::uint32_t t = phi[h[p - 1][x]];
        std::vector<std::uint32_t> same;
        for (std::uint32_t e = 0; e < hp.size(); ++e)
          if (hp[e] == t) same.push_back(e);
        if (!same.empty() && rng.coin(40)) {
          edges[p - 1].push_back(same[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(same.size()) - 1))]);
        } else {
          edges[p - 1].push_back(static_cast<std::uint32_t>(hp.size()));
          hp.push_back(t);
        }
      }
    }
    if (ydim > 0) {
      const std::size_t fresh = pick_size(rng, 2);
      for (std::size_t i = 0; i < fresh && hp.size() < max_size; ++i)
        hp.push_back(static_cast<std::uint32_t>(rng.uniform(0, static_cast<std::int64_t>(ydim) - 1)));
    }
    sizes[p] = hp.size();
  }
  auto b = PersistentObject<FinSet>::build(
      g, [&](std::size_t p) { return sizes[p]; }, [&](std::size_t p, std::size_t) { return edges[p]; }, y.indexing());
  return DeltaMorphism<FinSet>::build(b, y, Grade::zero(1), [&](const Grade& r) {
    auto p = g.locate(r);
    return p ? h[*p] : FinSet::Map{};
  });
}

DeltaMorphism<F2Vec> random_map_into(Rng& rng, const PersistentObject<F2Vec>& y, std::size_t max_size) {
  const Grid& g = y.grid();
  if (g.arity() != 1) throw UnsupportedError("random_map_into: one-parameter targets only");
  std::vector<std::size_t> dims(g.size());
  std::vector<F2Matrix> h(g.size()), edges(g.size());
  for (std::size_t p = 0; p < g.size(); ++p) {
    const std::size_t carried = p > 0 ? dims[p - 1] : 0;
    const std::size_t fresh = carried >= max_size ? 0 : pick_size(rng, std::min<std::size_t>(2, max_size - carried));
    dims[p] = carried + fresh;
    // B(p) = B(p-1) + F2^fresh; h_p = [phi o h_{p-1} | random].
    F2Matrix hp(y.object(p), dims[p]);
    if (p > 0) {
      const F2Matrix carried_part = y.edge(p - 1, 0) * h[p - 1];
      for (std::size_t c = 0; c < carried; ++c)
        for (std::size_t r = 0; r < hp.rows(); ++r) hp.set(r, c, carried_part.get(r, c));
      F2Matrix inc(dims[p], carried);
      for (std::size_t c = 0; c < carried; ++c) inc.set(c, c);
      edges[p - 1] = inc;
    }
    for (std::size_t c = carried; c < dims[p]; ++c)
      for (std::size_t r = 0; r < hp.rows(); ++r) hp.set(r, c, rng.coin());
    h[p] = hp;
  }
  auto b = PersistentObject<F2Vec>::build(
      g, [&](std::size_t p) { return dims[p]; }, [&](std::size_t p, std::size_t) { return edges[p]; }, y.indexing());
  return DeltaMorphism<F2Vec>::build(b, y, Grade::zero(1), [&](const Grade& r) {
    auto p = g.locate(r);
    return p ? h[*p] : F2Vec::initial_map(y.evaluate(r));
  });
}

Barcode random_barcode(Rng& rng, std::size_t max_bars) {
  Barcode b;
  const std::size_t n = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_bars)));
  for (std::size_t i = 0; i < n; ++i) {
    const Rational birth(rng.uniform(0, 6), 2);
    if (rng.coin(20)) {
      b.push_back({birth, std::nullopt});
    } else {
      b.push_back({birth, birth + Rational(rng.uniform(1, 5), 2)});
    }
  }
  sort_barcode(b);
  return b;
}

MetricInput random_metric(Rng& rng, std::size_t points, std::int64_t max_entry) {
  MetricInput m;
  m.distances.assign(points, std::vector<Rational>(points));
  for (std::size_t i = 0; i < points; ++i)
    for (std::size_t j = i + 1; j < points; ++j) m.distances[i][j] = m.distances[j][i] = Rational(rng.uniform(1, max_entry));
  return m;
}

}  // namespace perscert
