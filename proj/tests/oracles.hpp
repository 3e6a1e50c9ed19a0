#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library's algorithms; only plain data types are shared.

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "perscert/distances.hpp"

namespace oracle {

using perscert::Rational;
using perscert::Simplex;
using perscert::SimplicialComplex;

using Row = std::vector<char>;

// Rank over F2 by dense row reduction.
inline std::size_t gf2_rank(std::vector<Row> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && !rows[pivot][c]) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = 0; k < cols; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

// Basis of {x : M x = 0} where M is given by its columns (each of length
// `height`).
inline std::vector<Row> gf2_kernel(const std::vector<Row>& columns, std::size_t height) {
  const std::size_t n = columns.size();
  // Row-reduce the augmented [M^T | I] and keep the identity parts of rows
  // whose M^T part vanished.
  std::vector<Row> rows(n, Row(height + n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < height; ++k) rows[i][k] = columns[i][k];
    rows[i][height + i] = 1;
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < height && rank < n; ++c) {
    std::size_t pivot = rank;
    while (pivot < n && !rows[pivot][c]) ++pivot;
    if (pivot == n) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < n; ++r)
      if (r != rank && rows[r][c])
        for (std::size_t k = 0; k < height + n; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  std::vector<Row> out;
  for (std::size_t r = rank; r < n; ++r) out.emplace_back(rows[r].begin() + static_cast<long>(height), rows[r].end());
  return out;
}

// Simplices of dimension d in a fixed order, indexed.
inline std::vector<Simplex> of_dim(const std::vector<Simplex>& all, int d) {
  std::vector<Simplex> out;
  for (const auto& s : all)
    if (static_cast<int>(s.size()) == d + 1) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

// Column of the boundary of s in the basis `faces`.
inline Row boundary_column(const Simplex& s, const std::vector<Simplex>& faces) {
  Row col(faces.size(), 0);
  if (s.size() < 2) return col;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Simplex f = s;
    f.erase(f.begin() + static_cast<long>(i));
    auto it = std::lower_bound(faces.begin(), faces.end(), f);
    if (it != faces.end() && *it == f) col[static_cast<std::size_t>(it - faces.begin())] ^= 1;
  }
  return col;
}

// Rank of H_n(K) -> H_n(L) induced by an inclusion K <= L, via
// dim(Z_n(K) + B_n(L)) - dim B_n(L), all inside C_n(L).
inline std::size_t persistent_rank(const std::vector<Simplex>& k, const std::vector<Simplex>& l, int n) {
  const auto ln = of_dim(l, n);
  const auto kn = of_dim(k, n);
  const auto kn1 = of_dim(k, n - 1);
  const auto ln2 = of_dim(l, n + 1);
  std::vector<Row> kcols;
  for (const auto& s : kn) kcols.push_back(boundary_column(s, kn1));
  const auto z = gf2_kernel(kcols, kn1.size());
  std::vector<Row> boundaries;
  for (const auto& s : ln2) boundaries.push_back(boundary_column(s, ln));
  std::vector<Row> both = boundaries;
  for (const auto& v : z) {
    Row r(ln.size(), 0);
    for (std::size_t i = 0; i < kn.size(); ++i)
      if (v[i]) r[static_cast<std::size_t>(std::lower_bound(ln.begin(), ln.end(), kn[i]) - ln.begin())] = 1;
    both.push_back(std::move(r));
  }
  if (ln.empty()) return 0;
  return gf2_rank(both) - gf2_rank(boundaries);
}

// Connected components by breadth-first search over the 1-skeleton.
inline std::size_t bfs_components(const SimplicialComplex& k) {
  std::map<perscert::Vertex, std::vector<perscert::Vertex>> adj;
  for (const auto& s : k.simplices()) {
    if (s.size() == 1) adj[s[0]];
    if (s.size() == 2) {
      adj[s[0]].push_back(s[1]);
      adj[s[1]].push_back(s[0]);
    }
  }
  std::set<perscert::Vertex> seen;
  std::size_t count = 0;
  for (const auto& [v, _] : adj) {
    if (seen.count(v)) continue;
    ++count;
    std::queue<perscert::Vertex> q;
    q.push(v);
    seen.insert(v);
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto w : adj[u])
        if (seen.insert(w).second) q.push(w);
    }
  }
  return count;
}

// Bottleneck distance by enumerating every partial matching. nullopt is
// infinity.
inline std::optional<Rational> brute_bottleneck(const perscert::Barcode& a, const perscert::Barcode& b) {
  auto inf = [](const perscert::Interval& i) { return !i.death.has_value(); };
  auto half = [&](const perscert::Interval& i) -> std::optional<Rational> {
    if (inf(i)) return std::nullopt;
    return (*i.death - i.birth) / Rational(2);
  };
  auto pair_cost = [&](const perscert::Interval& x, const perscert::Interval& y) -> std::optional<Rational> {
    if (inf(x) != inf(y)) return std::nullopt;
    Rational c = perscert::abs(x.birth - y.birth);
    if (!inf(x)) c = perscert::max(c, perscert::abs(*x.death - *y.death));
    return c;
  };
  // nullopt < value ordering helpers with nullopt = infinity.
  auto worse = [](const std::optional<Rational>& u, const std::optional<Rational>& v) {
    if (!u || !v) return std::optional<Rational>{};
    return std::optional<Rational>{perscert::max(*u, *v)};
  };
  auto better = [](const std::optional<Rational>& u, const std::optional<Rational>& v) {
    if (!u) return v;
    if (!v) return u;
    return std::optional<Rational>{perscert::min(*u, *v)};
  };
  std::vector<bool> used(b.size(), false);
  std::optional<Rational> best;
  bool any = false;
  std::function<void(std::size_t, std::optional<Rational>)> go = [&](std::size_t i, std::optional<Rational> cost) {
    if (i == a.size()) {
      for (std::size_t k = 0; k < b.size(); ++k)
        if (!used[k]) cost = worse(cost, half(b[k]));
      best = any ? better(best, cost) : cost;
      any = true;
      return;
    }
    go(i + 1, worse(cost, half(a[i])));
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (used[k]) continue;
      used[k] = true;
      go(i + 1, worse(cost, pair_cost(a[i], b[k])));
      used[k] = false;
    }
  };
  go(0, Rational(0));
  return best;
}

// Pairwise-distance diameter oracle for Vietoris-Rips grades.
inline Rational diameter(const std::vector<std::vector<Rational>>& d, const Simplex& s) {
  Rational out(0);
  for (auto u : s)
    for (auto v : s) out = perscert::max(out, d[u][v]);
  return out;
}

}  // namespace oracle
