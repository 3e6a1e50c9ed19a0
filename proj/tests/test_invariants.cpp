#include "doctest.h"
#include "oracles.hpp"
#include "perscert/random.hpp"

using namespace perscert;

namespace {

MetricInput collinear_013() { return {{{0, 1, 3}, {1, 0, 2}, {3, 2, 0}}, std::nullopt}; }

// Four vertices at 0, the boundary edges of a square at 1, the diagonals
// and every triangle at 2.
FilteredComplex four_cycle() {
  std::vector<FilteredSimplex> s;
  for (Vertex v = 0; v < 4; ++v) s.push_back({{v}, Grade{0}});
  for (auto e : std::vector<Simplex>{{0, 1}, {1, 2}, {2, 3}, {0, 3}}) s.push_back({e, Grade{1}});
  for (auto e : std::vector<Simplex>{{0, 2}, {1, 3}}) s.push_back({e, Grade{2}});
  for (auto t : std::vector<Simplex>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}) s.push_back({t, Grade{2}});
  return FilteredComplex(1, {0, 1, 2, 3}, s);
}

Interval bar(Rational b, std::optional<Rational> d) { return {std::move(b), std::move(d)}; }

Barcode sorted(Barcode b) {
  sort_barcode(b);
  return b;
}

}  // namespace

TEST_CASE("connected components against BFS") {
  Rng rng(51);
  for (int trial = 0; trial < 120; ++trial) {
    const auto x = to_persistent(random_filtered_complex(rng, 6, 4, 1));
    const auto p = pi0(x);
    for (std::size_t q = 0; q < x.grid().size(); ++q) {
      const auto& k = x.object(q);
      CHECK(connected_components(k).count == oracle::bfs_components(k));
      CHECK(p.evaluate(x.grid().point(q)) == oracle::bfs_components(k));
    }
  }
}

TEST_CASE("pi0 examples") {
  const auto empty = to_persistent(FilteredComplex(1, {}, {}));
  const auto p_empty = pi0(empty);
  for (auto n : p_empty.objects()) CHECK(n == 0);
  const auto pt = pi0(PersistentObject<Complex>::constant_from(Grade{2}, SimplicialComplex::point(0)));
  CHECK(pt.evaluate(Grade{1}) == 0);
  CHECK(pt.evaluate(Grade{2}) == 1);
  const auto c = pi0(to_persistent(vietoris_rips(collinear_013(), 2)));
  CHECK(c.evaluate(Grade{0}) == 3);
  CHECK(c.evaluate(Grade{1}) == 2);
  CHECK(c.evaluate(Grade{2}) == 1);
  CHECK(c.evaluate(Grade{3}) == 1);
}

TEST_CASE("pi0 maps follow vertices") {
  Rng rng(52);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = random_collapsing_complex(rng, 4, 5);
    const auto p = pi0(x);
    for (std::size_t q = 0; q + 1 < x.grid().size(); ++q) {
      const auto& k = x.object(q);
      const auto& l = x.object(q + 1);
      const auto ck = connected_components(k), cl = connected_components(l);
      const auto kv = k.vertices(), lv = l.vertices();
      for (std::size_t i = 0; i < kv.size(); ++i) {
        const Vertex img = x.edge(q, 0)(kv[i]);
        const auto j = static_cast<std::size_t>(std::lower_bound(lv.begin(), lv.end(), img) - lv.begin());
        CHECK(p.edge(q, 0)[ck.component_of[i]] == cl.component_of[j]);
      }
    }
  }
}

TEST_CASE("pi0_induced is functorial") {
  Rng rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_collapsing_complex(rng, 4, 4);
    CHECK(pi0_induced(identity_morphism(x)) == identity_morphism(pi0(x)));
    const auto s1 = structure_morphism(x, Grade{1});
    const auto xs = x;
    const auto s2 = structure_morphism(xs, Grade{2});
    CHECK(pi0_induced(compose(s1, s2)) == compose(pi0_induced(s1), pi0_induced(s2)));
  }
  // collapsing two vertices induces the surjection 2 -> 1
  const SimplicialComplex two(std::vector<Simplex>{{0}, {1}});
  const auto x = PersistentObject<Complex>::constant_from(Grade{0}, two);
  const auto y = PersistentObject<Complex>::constant_from(Grade{0}, SimplicialComplex::point(5));
  const auto f = DeltaMorphism<Complex>::build(x, y, Grade{0}, [](const Grade&) { return VertexMap({{0, 5}, {1, 5}}); });
  CHECK(pi0_induced(f).at(Grade{0}) == FinSet::Map{0, 0});
}

TEST_CASE("homology examples") {
  const auto h0 = homology(PersistentObject<Complex>::constant_from(Grade{1}, SimplicialComplex::point(0)), 0);
  CHECK(h0.evaluate(Grade{0}) == 0);
  CHECK(h0.evaluate(Grade{1}) == 1);

  const auto c = homology(to_persistent(vietoris_rips(collinear_013(), 2)), 0);
  CHECK(c.evaluate(Grade{0}) == 3);
  CHECK(c.evaluate(Grade{1}) == 2);
  CHECK(c.evaluate(Grade{2}) == 1);

  const auto h1 = homology(to_persistent(four_cycle()), 1);
  CHECK(h1.evaluate(Grade{0}) == 0);
  CHECK(h1.evaluate(Grade{1}) == 1);
  CHECK(h1.evaluate(Grade{Rational(3, 2)}) == 1);
  CHECK(h1.evaluate(Grade{2}) == 0);

  Rng rng(1);
  CHECK_THROWS_AS(homology(to_persistent(random_filtered_complex(rng, 3, 2, 2)), 0), UnsupportedError);
}

TEST_CASE("barcodes of the worked examples") {
  const auto b0 = barcode(homology(to_persistent(vietoris_rips(collinear_013(), 2)), 0));
  CHECK(b0 == sorted({bar(0, std::nullopt), bar(0, 1), bar(0, 2)}));
  CHECK(barcode(homology(to_persistent(vietoris_rips(collinear_013(), 2)), 1)).empty());
  CHECK(barcode(homology(to_persistent(four_cycle()), 1)) == Barcode{bar(1, 2)});
  CHECK(filtration_barcode(four_cycle(), 1) == Barcode{bar(1, 2)});

  const PersistentModule zero = PersistentModule::constant_from(Grade{0}, 0);
  CHECK(barcode(zero).empty());
  CHECK(barcode(PersistentModule::constant_from(Grade{0}, 1)) == Barcode{bar(0, std::nullopt)});
}

TEST_CASE("homology ranks against a dense reduction oracle") {
  Rng rng(54);
  for (int trial = 0; trial < 80; ++trial) {
    const auto f = random_filtered_complex(rng, 5, 4, 1);
    const auto x = to_persistent(f);
    for (int n = 0; n <= 1; ++n) {
      const auto h = homology(x, n);
      const auto b = barcode(h);
      CHECK(b == filtration_barcode(f, n));
      const auto& axis = x.grid().axis(0);
      for (std::size_t i = 0; i < axis.size(); ++i)
        for (std::size_t j = i; j < axis.size(); ++j) {
          const auto rank = oracle::persistent_rank(x.object(i).simplices(), x.object(j).simplices(), n);
          CHECK(structure_rank(h, Grade{axis[i]}, Grade{axis[j]}) == rank);
          std::size_t bars = 0;
          for (const auto& iv : b) bars += iv.contains(axis[i]) && iv.contains(axis[j]);
          CHECK(bars == rank);
        }
    }
  }
}

TEST_CASE("pi0 cardinality equals H0 rank") {
  Rng rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    const auto x = random_collapsing_complex(rng, 4, 5);
    const auto p = pi0(x);
    const auto h = homology(x, 0);
    for (std::size_t q = 0; q < x.grid().size(); ++q) CHECK(p.object(q) == h.object(q));
    for (std::size_t q = 0; q + 1 < x.grid().size(); ++q)
      CHECK(structure_rank(h, x.grid().point(q), x.grid().point(q + 1)) ==
            std::set<std::uint32_t>(p.edge(q, 0).begin(), p.edge(q, 0).end()).size());
  }
}

TEST_CASE("induced homology maps are functorial and carry interleavings") {
  Rng rng(56);
  for (int trial = 0; trial < 30; ++trial) {
    const auto x = random_collapsing_complex(rng, 4, 4);
    for (int n = 0; n <= 1; ++n) {
      CHECK(homology_induced(identity_morphism(x), n) == identity_morphism(homology(x, n)));
      const auto s1 = structure_morphism(x, Grade{1});
      const auto s2 = structure_morphism(x, Grade{1});
      CHECK(homology_induced(compose(s1, s2), n) == compose(homology_induced(s1, n), homology_induced(s2, n)));
      const auto cert = self_interleaving(x, Grade{Rational(1, 2)});
      CHECK(check_interleaving(homology_certificate(cert, n)).valid);
    }
  }
}

TEST_CASE("interleavings in pi0") {
  Rng rng(57);
  const auto x = random_collapsing_complex(rng, 3, 3);
  const auto iso = identity_morphism(x);
  const auto r = induces_interleaving_in_pi0(iso, Grade{0}, Grade{0});
  CHECK(r.holds);
  REQUIRE(r.partner);
  CHECK(*r.partner == identity_morphism(pi0(x)));

  // one point into two points that never merge
  const SimplicialComplex two(std::vector<Simplex>{{0}, {1}});
  const auto a = PersistentObject<Complex>::constant_from(Grade{0}, SimplicialComplex::point(0));
  const auto b = PersistentObject<Complex>::constant_from(Grade{0}, two);
  const auto inc = DeltaMorphism<Complex>::build(a, b, Grade{0}, [](const Grade&) { return VertexMap({{0, 0}}); });
  for (int d = 0; d <= 3; ++d) CHECK_FALSE(induces_interleaving_in_pi0(inc, Grade{0}, Grade{d}).holds);

  // VR of a point set against the same set with grades delayed by one
  const MetricInput m{{{0, 1, 3}, {1, 0, 2}, {3, 2, 0}}, std::nullopt};
  const auto f = vietoris_rips(m, 1);
  std::vector<FilteredSimplex> later;
  for (const auto& s : f.simplices()) later.push_back({s.vertices, s.grade + Grade{1}});
  const auto px = to_persistent(f);
  const auto py = to_persistent(FilteredComplex(1, f.vertices(), later));
  const auto j = DeltaMorphism<Complex>::build(px, py, Grade{1},
                                               [&](const Grade& r) { return Complex::identity(px.evaluate(r)); });
  CHECK(induces_interleaving_in_pi0(j, Grade{1}, Grade{1}).holds);
}

TEST_CASE("homology along a line of a bifiltration") {
  Rng rng(49);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_filtered_complex(rng, 5, 3, 2);
    const auto x = to_persistent(f);
    CHECK_THROWS_AS(homology(x, 0), UnsupportedError);
    for (std::size_t axis = 0; axis < 2; ++axis) {
      const Rational t(rng.uniform(-1, 4));
      // simplices present on the line, graded by the free coordinate
      std::vector<FilteredSimplex> kept;
      std::set<Vertex> vs;
      for (const auto& s : f.simplices())
        if (s.grade[1 - axis] <= t) {
          kept.push_back({s.vertices, Grade{s.grade[axis]}});
          vs.insert(s.vertices.begin(), s.vertices.end());
        }
      const FilteredComplex slice(1, {vs.begin(), vs.end()}, kept);
      std::vector<Rational> base{0, 0};
      base[1 - axis] = t;
      const auto line = restrict_to_line(x, axis, Grade(base));
      CHECK(functor_equal(line, to_persistent(slice)));
      for (int n = 0; n <= 1; ++n) CHECK(barcode(homology(line, n)) == filtration_barcode(slice, n));
    }
  }
}
