#include "perscert/distances.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace perscert {

bool extended_leq(const Extended& a, const Extended& b) {
  if (!b) return true;
  if (!a) return false;
  return *a <= *b;
}

std::string to_string(const Extended& v) { return v ? v->str() : "inf"; }

Extended bar_distance(const Interval& a, const Interval& b) {
  if (a.death.has_value() != b.death.has_value()) return std::nullopt;
  Rational d = abs(a.birth - b.birth);
  if (a.death) d = max(d, abs(*a.death - *b.death));
  return d;
}

Extended deletion_cost(const Interval& a) {
  if (!a.death) return std::nullopt;
  return (*a.death - a.birth) / Rational(2);
}

static Extended extended_max(const Extended& a, const Extended& b) {
  if (!a || !b) return std::nullopt;
  return max(*a, *b);
}

Extended matching_cost(const Barcode& a, const Barcode& b, const Matching& m) {
  std::vector<int> used_a(a.size(), 0), used_b(b.size(), 0);
  Extended cost = Rational(0);
  for (const auto& [i, j] : m.pairs) {
    if (i && *i >= a.size()) throw PreconditionError("matching index out of range");
    if (j && *j >= b.size()) throw PreconditionError("matching index out of range");
    if (i) ++used_a[*i];
    if (j) ++used_b[*j];
    if (i && j)
      cost = extended_max(cost, bar_distance(a[*i], b[*j]));
    else if (i)
      cost = extended_max(cost, deletion_cost(a[*i]));
    else if (j)
      cost = extended_max(cost, deletion_cost(b[*j]));
  }
  if (std::any_of(used_a.begin(), used_a.end(), [](int u) { return u != 1; }) ||
      std::any_of(used_b.begin(), used_b.end(), [](int u) { return u != 1; }))
    throw PreconditionError("matching does not use every bar exactly once");
  return cost;
}

namespace {

// Kuhn's augmenting-path bipartite matching; returns match_of_right.
std::vector<long> max_matching(std::size_t left, std::size_t right, const std::vector<std::vector<std::size_t>>& adj,
                               std::size_t& size) {
  std::vector<long> match_right(right, -1);
  std::vector<char> seen;
  std::function<bool(std::size_t)> augment = [&](std::size_t u) {
    for (std::size_t v : adj[u]) {
      if (seen[v]) continue;
      seen[v] = 1;
      if (match_right[v] < 0 || augment(static_cast<std::size_t>(match_right[v]))) {
        match_right[v] = static_cast<long>(u);
        return true;
      }
    }
    return false;
  };
  size = 0;
  for (std::size_t u = 0; u < left; ++u) {
    seen.assign(right, 0);
    if (augment(u)) ++size;
  }
  return match_right;
}

}  // namespace

BottleneckResult bottleneck(const Barcode& a, const Barcode& b) {
  std::vector<std::size_t> fa, fb, ia, ib;
  for (std::size_t i = 0; i < a.size(); ++i) (a[i].death ? fa : ia).push_back(i);
  for (std::size_t j = 0; j < b.size(); ++j) (b[j].death ? fb : ib).push_back(j);
  BottleneckResult out;
  if (ia.size() != ib.size()) return out;

  auto by_birth = [](const Barcode& bc) { return [&bc](std::size_t x, std::size_t y) { return bc[x].birth < bc[y].birth; }; };
  std::sort(ia.begin(), ia.end(), by_birth(a));
  std::sort(ib.begin(), ib.end(), by_birth(b));
  Rational infinite_cost(0);
  for (std::size_t k = 0; k < ia.size(); ++k) {
    infinite_cost = max(infinite_cost, abs(a[ia[k]].birth - b[ib[k]].birth));
    out.matching.pairs.emplace_back(ia[k], ib[k]);
  }

  // Left: finite bars of a, then diagonal copies of b's bars.
  // Right: finite bars of b, then diagonal copies of a's bars.
  const std::size_t n = fa.size(), k = fb.size();
  std::set<Rational> thresholds{Rational(0)};
  for (std::size_t i : fa) thresholds.insert(*deletion_cost(a[i]));
  for (std::size_t j : fb) thresholds.insert(*deletion_cost(b[j]));
  for (std::size_t i : fa)
    for (std::size_t j : fb) thresholds.insert(*bar_distance(a[i], b[j]));

  for (const Rational& t : thresholds) {
    std::vector<std::vector<std::size_t>> adj(n + k);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < k; ++y)
        if (*bar_distance(a[fa[x]], b[fb[y]]) <= t) adj[x].push_back(y);
      if (*deletion_cost(a[fa[x]]) <= t) adj[x].push_back(k + x);
    }
    for (std::size_t y = 0; y < k; ++y) {
      if (*deletion_cost(b[fb[y]]) <= t) adj[n + y].push_back(y);
      for (std::size_t x = 0; x < n; ++x) adj[n + y].push_back(k + x);
    }
    std::size_t size = 0;
    const auto match_right = max_matching(n + k, k + n, adj, size);
    if (size < n + k) continue;
    for (std::size_t y = 0; y < k; ++y) {
      const auto u = static_cast<std::size_t>(match_right[y]);
      if (u < n)
        out.matching.pairs.emplace_back(fa[u], fb[y]);
      else
        out.matching.pairs.emplace_back(std::nullopt, fb[y]);
    }
    for (std::size_t x = 0; x < n; ++x)
      if (static_cast<std::size_t>(match_right[k + x]) == x) out.matching.pairs.emplace_back(fa[x], std::nullopt);
    out.value = max(t, infinite_cost);
    return out;
  }
  throw PreconditionError("bottleneck: no threshold admits a perfect matching");
}

StabilityReport stability_audit(const InterleavingCert<Complex>& cert, int n) {
  if (cert.epsilon().arity() != 1) throw UnsupportedError("stability audit needs one-parameter complexes");
  const auto check = check_interleaving(cert);
  if (!check.valid) throw PreconditionError("stability audit: invalid certificate (" + check.identity + ")");
  StabilityReport r;
  r.degree = n;
  const auto module_cert = homology_certificate(cert, n);
  r.hx = module_cert.x();
  r.hy = module_cert.y();
  r.module_check = check_interleaving(module_cert);
  r.bx = barcode(r.hx);
  r.by = barcode(r.hy);
  r.bottleneck_distance = bottleneck(r.bx, r.by).value;
  r.delta = max(cert.epsilon()[0], cert.delta()[0]);
  r.holds = r.module_check.valid && extended_leq(r.bottleneck_distance, r.delta);
  return r;
}

CrosscheckReport module_distance_crosscheck(const PersistentModule& f, const PersistentModule& g, SearchBudget budget) {
  CrosscheckReport r;
  r.bf = barcode(f);
  r.bg = barcode(g);
  r.bottleneck_distance = bottleneck(r.bf, r.bg).value;
  r.interleaving = interleaving_distance_search(f, g, budget);
  r.holds = extended_leq(r.bottleneck_distance, r.interleaving.value);
  return r;
}

}  // namespace perscert
