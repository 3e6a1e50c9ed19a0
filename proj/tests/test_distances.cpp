#include "doctest.h"
#include "oracles.hpp"
#include "perscert/random.hpp"

using namespace perscert;

namespace {

Interval bar(Rational b, std::optional<Rational> d) { return {std::move(b), std::move(d)}; }

// Module that is F2 on [b, d) and zero elsewhere.
PersistentModule interval_module(const Rational& b, const std::optional<Rational>& d) {
  if (!d) return PersistentModule::constant_from(Grade{b}, 1);
  return PersistentModule(Grid({{b, *d}}), {1, 0}, {{F2Matrix(0, 1), F2Matrix()}});
}

}  // namespace

TEST_CASE("bottleneck examples") {
  Rng rng(71);
  const auto b = random_barcode(rng, 5);
  CHECK(bottleneck(b, b).value == Rational(0));
  CHECK(bottleneck({bar(0, 2)}, {}).value == Rational(1));
  const auto r = bottleneck({bar(0, 2)}, {bar(0, 3)});
  CHECK(r.value == Rational(1));
  REQUIRE(r.matching.pairs.size() == 1);
  CHECK(r.matching.pairs[0].first == 0u);
  CHECK(r.matching.pairs[0].second == 0u);
  CHECK_FALSE(bottleneck({bar(0, std::nullopt)}, {}).value);
  CHECK_FALSE(bottleneck({bar(0, std::nullopt)}, {bar(0, 5)}).value);
  CHECK(bottleneck({bar(0, std::nullopt)}, {bar(Rational(3, 2), std::nullopt)}).value == Rational(3, 2));
}

TEST_CASE("bottleneck agrees with exhaustive matching") {
  Rng rng(72);
  for (int trial = 0; trial < 300; ++trial) {
    const auto a = random_barcode(rng, 5);
    const auto b = random_barcode(rng, 5);
    const auto r = bottleneck(a, b);
    CHECK(r.value == oracle::brute_bottleneck(a, b));
    if (r.value) CHECK(matching_cost(a, b, r.matching) == r.value);
  }
}

TEST_CASE("bottleneck is a pseudometric") {
  Rng rng(73);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_barcode(rng, 4), b = random_barcode(rng, 4), c = random_barcode(rng, 4);
    const auto ab = bottleneck(a, b).value, ba = bottleneck(b, a).value;
    CHECK(ab == ba);
    CHECK(bottleneck(a, a).value == Rational(0));
    const auto ac = bottleneck(a, c).value, bc = bottleneck(b, c).value;
    if (ab && bc) {
      REQUIRE(ac);
      CHECK(*ac <= *ab + *bc);
    }
  }
}

TEST_CASE("matching cost validates coverage") {
  const Barcode a{bar(0, 2)}, b{bar(0, 3)};
  CHECK_THROWS_AS(matching_cost(a, b, Matching{}), PreconditionError);
  Matching m;
  m.pairs = {{0, std::nullopt}, {std::nullopt, 0}};
  CHECK(matching_cost(a, b, m) == Rational(3, 2));
}

TEST_CASE("stability audit") {
  const MetricInput pts{{{0, 1, 3}, {1, 0, 2}, {3, 2, 0}}, std::nullopt};
  const auto f = vietoris_rips(pts, 2);
  const auto x = to_persistent(f);
  const auto self = stability_audit(self_interleaving(x, Grade{0}), 0);
  CHECK(self.holds);
  CHECK(self.bottleneck_distance == Rational(0));

  // grades shifted by 1/2: identity maps interleave with delta = 1/2
  std::vector<FilteredSimplex> later;
  for (const auto& s : f.simplices()) later.push_back({s.vertices, s.grade + Grade{Rational(1, 2)}});
  const auto y = to_persistent(FilteredComplex(1, f.vertices(), later));
  const Grade h{Rational(1, 2)};
  const InterleavingCert<Complex> cert{
      DeltaMorphism<Complex>::build(x, y, h, [&](const Grade& r) { return Complex::identity(x.evaluate(r)); }),
      DeltaMorphism<Complex>::build(y, x, h, [&](const Grade& r) { return Complex::identity(y.evaluate(r)); })};
  for (int n = 0; n <= 1; ++n) {
    const auto r = stability_audit(cert, n);
    CHECK(r.module_check.valid);
    CHECK(r.holds);
    REQUIRE(r.bottleneck_distance);
    CHECK(*r.bottleneck_distance <= Rational(1, 2));
  }
}

TEST_CASE("stability on random jittered Rips pairs") {
  Rng rng(74);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_metric(rng, static_cast<std::size_t>(rng.uniform(2, 5)), 6);
    auto m2 = m;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        m2.distances[i][j] = m2.distances[j][i] = m.distances[i][j] + Rational(rng.uniform(-1, 1));
    Rational jitter(0);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < m.size(); ++j) jitter = max(jitter, abs(m.distances[i][j] - m2.distances[i][j]));
    const auto x = to_persistent(vietoris_rips(m, 2));
    const auto y = to_persistent(vietoris_rips(m2, 2));
    const Grade d{jitter};
    const InterleavingCert<Complex> cert{
        DeltaMorphism<Complex>::build(x, y, d, [&](const Grade& r) { return Complex::identity(x.evaluate(r)); }),
        DeltaMorphism<Complex>::build(y, x, d, [&](const Grade& r) { return Complex::identity(y.evaluate(r)); })};
    REQUIRE(check_interleaving(cert).valid);
    for (int n = 0; n <= 1; ++n) CHECK(stability_audit(cert, n).holds);
  }
}

TEST_CASE("module distance cross-check") {
  const auto a = interval_module(0, Rational(2));
  const auto same = module_distance_crosscheck(a, a);
  CHECK(same.holds);
  CHECK(same.bottleneck_distance == Rational(0));
  CHECK(same.interleaving.value == Rational(0));

  const auto b = interval_module(0, Rational(3));
  const auto ab = module_distance_crosscheck(a, b);
  CHECK(ab.bottleneck_distance == Rational(1));
  CHECK(ab.interleaving.value == Rational(1));
  CHECK(ab.holds);

  const auto zero = PersistentModule::constant_from(Grade{0}, 0);
  const auto az = module_distance_crosscheck(a, zero);
  CHECK(az.bottleneck_distance == Rational(1));
  CHECK(az.interleaving.value == Rational(1));
  CHECK(az.holds);

  Rng rng(75);
  for (int trial = 0; trial < 40; ++trial) {
    const auto f = random_f2vec_real(rng, 2, 2);
    const auto g = random_f2vec_real(rng, 2, 2);
    const auto r = module_distance_crosscheck(f, g);
    CHECK(r.holds);
  }
}
