#include "perscert/invariants.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace perscert {

void sort_barcode(Barcode& b) {
  std::sort(b.begin(), b.end(), [](const Interval& x, const Interval& y) {
    if (x.birth != y.birth) return x.birth < y.birth;
    if (!x.death || !y.death) return x.death.has_value() && !y.death.has_value();
    return *x.death < *y.death;
  });
}

std::string to_string(const Interval& i) {
  return "[" + i.birth.str() + ", " + (i.death ? i.death->str() : "inf") + ")";
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  // Keeps the smaller index as root so roots are least members.
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

Components connected_components(const SimplicialComplex& k) {
  const auto verts = k.vertices();
  auto index = [&](Vertex v) {
    return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
  };
  UnionFind uf(verts.size());
  for (const auto& e : k.simplices_of_dim(1)) uf.unite(index(e[0]), index(e[1]));
  Components out;
  out.component_of.assign(verts.size(), 0);
  std::vector<std::size_t> label(verts.size(), SIZE_MAX);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::size_t root = uf.find(i);
    if (label[root] == SIZE_MAX) label[root] = out.count++;
    out.component_of[i] = label[root];
  }
  return out;
}

FinSet::Map components_map(const VertexMap& f, const SimplicialComplex& k, const SimplicialComplex& l) {
  const auto kc = connected_components(k);
  const auto lc = connected_components(l);
  const auto kv = k.vertices();
  const auto lv = l.vertices();
  FinSet::Map out(kc.count);
  // Components are numbered by least vertex, so the first vertex seen for
  // component c is its representative.
  std::vector<bool> done(kc.count, false);
  for (std::size_t i = 0; i < kv.size(); ++i) {
    const std::size_t c = kc.component_of[i];
    if (done[c]) continue;
    done[c] = true;
    const Vertex w = f(kv[i]);
    const auto j = static_cast<std::size_t>(std::lower_bound(lv.begin(), lv.end(), w) - lv.begin());
    out[c] = static_cast<std::uint32_t>(lc.component_of[j]);
  }
  return out;
}

PersistentSet pi0(const PersistentObject<Complex>& x) {
  const Grid& g = x.grid();
  return PersistentSet::build(
      g, [&](std::size_t p) { return connected_components(x.object(p)).count; },
      [&](std::size_t p, std::size_t a) {
        return components_map(x.edge(p, a), x.object(p), x.object(g.successor(p, a)));
      },
      x.indexing());
}

DeltaMorphism<FinSet> pi0_induced(const DeltaMorphism<Complex>& f) {
  if (auto v = f.naturality_violation()) throw PreconditionError("pi0_induced: morphism is not natural: " + *v);
  const auto& src = f.source();
  const auto& tgt = f.target();
  return DeltaMorphism<FinSet>::build(pi0(src), pi0(tgt), f.shift(), [&](const Grade& r) {
    return components_map(f.at(r), src.evaluate(r), tgt.evaluate(r + f.shift()));
  });
}

namespace {

// H_n of one complex with a fixed basis of representative cycles.
struct PointHomology {
  std::map<Simplex, std::size_t> index;  // n-simplex -> chain coordinate
  std::size_t chains = 0;
  F2Reducer reducer{0, 0};  // boundaries (tag 0) and representatives (unit tags)
  std::vector<BitVector> reps;

  std::size_t rank() const { return reps.size(); }
};

PointHomology point_homology(const SimplicialComplex& k, int n) {
  PointHomology h;
  const auto cells = k.simplices_of_dim(n);
  for (const auto& s : cells) h.index.emplace(s, h.chains++);
  std::map<Simplex, std::size_t> lower;
  if (n > 0)
    for (const auto& s : k.simplices_of_dim(n - 1)) lower.emplace(s, lower.size());

  F2Matrix boundary_n(lower.size(), h.chains);
  for (const auto& s : cells) {
    if (n == 0) break;
    for (const auto& face : facets(s)) boundary_n.set(lower.at(face), h.index.at(s));
  }
  std::vector<BitVector> boundaries;
  for (const auto& t : k.simplices_of_dim(n + 1)) {
    BitVector col(h.chains);
    for (const auto& face : facets(t)) col.flip(h.index.at(face));
    boundaries.push_back(std::move(col));
  }
  const auto cycles = kernel_basis(boundary_n);

  F2Reducer boundary_span(h.chains, 0);
  for (const auto& b : boundaries) boundary_span.insert(b, BitVector(0));
  const std::size_t betti = cycles.size() - boundary_span.rank();

  h.reducer = F2Reducer(h.chains, betti);
  for (const auto& b : boundaries) h.reducer.insert(b, BitVector(betti));
  for (const auto& z : cycles) {
    if (h.reps.size() == betti) break;
    if (h.reducer.insert(z, BitVector::unit(betti, h.reps.size()))) h.reps.push_back(z);
  }
  return h;
}

F2Matrix induced_matrix(const VertexMap& f, const PointHomology& src, const PointHomology& tgt) {
  F2Matrix out(tgt.rank(), src.rank());
  std::vector<Simplex> by_index(src.chains);
  for (const auto& [s, i] : src.index) by_index[i] = s;
  for (std::size_t c = 0; c < src.rank(); ++c) {
    BitVector image(tgt.chains);
    for (std::size_t i = 0; i < src.chains; ++i) {
      if (!src.reps[c].test(i)) continue;
      const Simplex im = f(by_index[i]);
      if (im.size() != by_index[i].size()) continue;  // degenerate image
      image.flip(tgt.index.at(im));
    }
    auto coords = tgt.reducer.express(image);
    if (!coords) throw PreconditionError("induced map: image of a cycle is not a cycle");
    for (std::size_t r = 0; r < tgt.rank(); ++r)
      if (coords->test(r)) out.set(r, c);
  }
  return out;
}

class HomologyTable {
 public:
  HomologyTable(const PersistentObject<Complex>& x, int n) : x_(x) {
    if (x.arity() != 1) throw UnsupportedError("homology is implemented for one-parameter objects only");
    if (n < 0) throw PreconditionError("homology degree must be >= 0");
    for (const auto& k : x.objects()) points_.push_back(point_homology(k, n));
  }

  const PointHomology& at(const Grade& r) const {
    auto p = x_.grid().locate(r);
    return p ? points_[*p] : empty_;
  }
  const PointHomology& point(std::size_t p) const { return points_[p]; }

  PersistentModule module() const {
    const Grid& g = x_.grid();
    return PersistentModule::build(
        g, [&](std::size_t p) { return points_[p].rank(); },
        [&](std::size_t p, std::size_t a) {
          return induced_matrix(x_.edge(p, a), points_[p], points_[g.successor(p, a)]);
        },
        x_.indexing());
  }

 private:
  const PersistentObject<Complex>& x_;
  std::vector<PointHomology> points_;
  PointHomology empty_;
};

}  // namespace

PersistentModule homology(const PersistentObject<Complex>& x, int n) { return HomologyTable(x, n).module(); }

DeltaMorphism<F2Vec> homology_induced(const DeltaMorphism<Complex>& f, int n) {
  if (auto v = f.naturality_violation()) throw PreconditionError("homology_induced: morphism is not natural: " + *v);
  const HomologyTable src(f.source(), n);
  const HomologyTable tgt(f.target(), n);
  return DeltaMorphism<F2Vec>::build(src.module(), tgt.module(), f.shift(), [&](const Grade& r) {
    return induced_matrix(f.at(r), src.at(r), tgt.at(r + f.shift()));
  });
}

InterleavingCert<F2Vec> homology_certificate(const InterleavingCert<Complex>& cert, int n) {
  return {homology_induced(cert.f, n), homology_induced(cert.g, n)};
}

std::size_t structure_rank(const PersistentModule& x, const Grade& r, const Grade& s) {
  return x.structure_map(r, s).rank();
}

Barcode barcode(const PersistentModule& x) {
  if (x.arity() != 1) throw UnsupportedError("barcodes are defined for one-parameter modules only");
  const Grid& g = x.grid();
  const std::size_t k = g.size();
  std::vector<std::vector<long>> rk(k, std::vector<long>(k, 0));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) rk[i][j] = static_cast<long>(x.map_between(i, j).rank());
  auto rank = [&](long i, long j) -> long { return i < 0 ? 0 : rk[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; };
  Barcode out;
  const auto& axis = g.axis(0);
  for (long i = 0; i < static_cast<long>(k); ++i) {
    for (long j = i + 1; j < static_cast<long>(k); ++j) {
      const long mult = rank(i, j - 1) - rank(i - 1, j - 1) - rank(i, j) + rank(i - 1, j);
      for (long c = 0; c < mult; ++c) out.push_back({axis[i], axis[j]});
    }
    const long last = static_cast<long>(k) - 1;
    const long mult = rank(i, last) - rank(i - 1, last);
    for (long c = 0; c < mult; ++c) out.push_back({axis[i], std::nullopt});
  }
  sort_barcode(out);
  return out;
}

Barcode filtration_barcode(const FilteredComplex& f, int n) {
  if (f.arity() != 1) throw UnsupportedError("filtration barcodes need a one-parameter filtration");
  if (auto r = validate(f); !r.valid) throw PreconditionError("invalid filtered complex: " + r.violation);
  std::vector<FilteredSimplex> order = f.simplices();
  std::stable_sort(order.begin(), order.end(), [](const FilteredSimplex& a, const FilteredSimplex& b) {
    if (a.grade != b.grade) return a.grade[0] < b.grade[0];
    return SimplexOrder{}(a.vertices, b.vertices);
  });
  const std::size_t total = order.size();
  std::map<Simplex, std::size_t> position;
  for (std::size_t i = 0; i < total; ++i) position.emplace(order[i].vertices, i);

  std::vector<BitVector> columns;
  columns.reserve(total);
  for (const auto& s : order) {
    BitVector col(total);
    if (s.vertices.size() > 1)
      for (const auto& face : facets(s.vertices)) col.flip(position.at(face));
    columns.push_back(std::move(col));
  }
  std::vector<std::ptrdiff_t> pivot_owner(total, -1);
  std::vector<bool> paired_birth(total, false);
  Barcode out;
  for (std::size_t j = 0; j < total; ++j) {
    while (auto low = columns[j].highest()) {
      const std::ptrdiff_t o = pivot_owner[*low];
      if (o < 0) {
        pivot_owner[*low] = static_cast<std::ptrdiff_t>(j);
        paired_birth[*low] = true;
        const auto& birth = order[*low];
        if (static_cast<int>(birth.vertices.size()) - 1 == n && birth.grade[0] != order[j].grade[0])
          out.push_back({birth.grade[0], order[j].grade[0]});
        break;
      }
      columns[j] ^= columns[static_cast<std::size_t>(o)];
    }
  }
  for (std::size_t j = 0; j < total; ++j)
    if (static_cast<int>(order[j].vertices.size()) - 1 == n && columns[j].none() && !paired_birth[j])
      out.push_back({order[j].grade[0], std::nullopt});
  sort_barcode(out);
  return out;
}

Pi0InterleavingResult induces_interleaving_in_pi0(const DeltaMorphism<Complex>& f, const Grade& eps, const Grade& delta,
                                                  SearchBudget budget) {
  auto induced = pi0_induced(f);
  if (induced.shift() != eps) induced = shift_morphism(induced, eps);
  auto partner = find_partner(induced, delta, budget);
  return {partner.has_value(), std::move(partner)};
}

}  // namespace perscert
