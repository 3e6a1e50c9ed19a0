#include "doctest.h"
#include "perscert/random.hpp"

using namespace perscert;

namespace {

Grade g1(Rational r) { return Grade{std::move(r)}; }

}  // namespace

TEST_CASE("measured constants") {
  CHECK(measured_piece_shift(1) == 1);
  CHECK(measured_composite_shift(1) == 2);
  for (std::int64_t m = 1; m <= 6; ++m) {
    CHECK(measured_piece_shift(m) == 2 * m - 1);
    CHECK(measured_composite_shift(m) == 3 * m - 1);
  }
}

TEST_CASE("even and odd restrictions") {
  const auto k = PersistentObject<FinSet>::constant_from(g1(-3), 2, Indexing::Integer);
  const auto constant = resample(k, Grid::integer_window(-3, 3));
  const auto [e, o, cert] = even_odd_restrict(constant, 1);
  for (std::int64_t n = -6; n <= 6; ++n) {
    CHECK(e.evaluate(g1(n)) == constant.evaluate(g1(even_reindex(n, 1))));
    CHECK(o.evaluate(g1(n)) == constant.evaluate(g1(odd_reindex(n, 1))));
  }
  CHECK(e.evaluate(g1(-2)) == 2);
  CHECK(check_interleaving(cert).valid);

  Rng rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const auto x = random_finset_z(rng, {-4, 4, 4});
    const auto r1 = even_odd_restrict(x, 1);
    for (std::int64_t n = -4; n <= 4; ++n) {
      const auto src = n % 2 == 0 ? n : n - 1;
      CHECK(r1.even.evaluate(g1(n)) == x.evaluate(g1(src)));
    }
    for (std::int64_t m = 1; m <= 3; ++m) {
      const auto r = even_odd_restrict(x, m);
      CHECK(r.cert.epsilon() == g1(m));
      CHECK(check_interleaving(r.cert).valid);
    }
  }
}

TEST_CASE("zig-zag on a self-interleaving") {
  Rng rng(62);
  for (std::int64_t m = 1; m <= 2; ++m) {
    const auto x = random_finset_z(rng, {-3, 3, 3});
    const auto z = zigzag(self_interleaving(x, g1(m)));
    CHECK(z.even_witness);
    CHECK(z.odd_witness);
    CHECK(check_interleaving(z.composite).valid);
    // with f, g structure maps, C(n) is X at its block start
    for (std::int64_t n = z.window_lo; n <= z.window_hi; ++n)
      CHECK(z.c.evaluate(g1(n)) == x.evaluate(g1(floor_div(n, m) * m)));
  }
}

TEST_CASE("zig-zag at m = 1 gives a (2,2) certificate") {
  Rng rng(63);
  for (int trial = 0; trial < 40; ++trial) {
    const auto cert = random_interleaved_finset(rng, 1, {-4, 4, 5});
    const auto z = zigzag(cert);
    CHECK(z.even_witness);
    CHECK(z.odd_witness);
    CHECK(z.a_to_even.epsilon() == g1(1));
    CHECK(z.a_to_even.delta() == g1(0));
    CHECK(z.even_to_odd.epsilon() == g1(1));
    CHECK(z.odd_to_b.delta() == g1(1));
    for (const auto* piece : {&z.a_to_even, &z.even_to_odd, &z.odd_to_b}) CHECK(check_interleaving(*piece).valid);
    CHECK(z.composite.epsilon() == g1(2));
    CHECK(z.composite.delta() == g1(2));
    CHECK(check_interleaving(z.composite).valid);
    CHECK_FALSE(z.c.functoriality_violation());
  }
}

TEST_CASE("zig-zag for larger m stays within 3m - 1") {
  Rng rng(64);
  for (std::int64_t m = 2; m <= 3; ++m)
    for (int trial = 0; trial < 15; ++trial) {
      const auto cert = random_interleaved_finset(rng, m, {-4, 4 + 2 * m, 3});
      const auto z = zigzag(cert);
      CHECK(z.even_witness);
      CHECK(z.odd_witness);
      CHECK(z.composite.epsilon() == g1(3 * m - 1));
      CHECK(check_interleaving(z.composite).valid);
    }
}

TEST_CASE("zig-zag over F2 modules") {
  Rng rng(65);
  for (int trial = 0; trial < 20; ++trial) {
    const auto z = zigzag(random_interleaved_f2vec(rng, 1, {-3, 3, 3}));
    CHECK(z.even_witness);
    CHECK(z.odd_witness);
    CHECK(check_interleaving(z.composite).valid);
  }
}

TEST_CASE("zig-zag rejects bad input") {
  Rng rng(66);
  const auto cert = random_interleaved_finset(rng, 1, {-3, 3, 3});
  CHECK_THROWS_AS(zigzag(shift_certificate(cert, g1(1), g1(2))), PreconditionError);
  CHECK_THROWS_AS(zigzag(self_interleaving(cert.x(), g1(0))), PreconditionError);
  const auto x = PersistentObject<FinSet>::constant_from(g1(0), 2, Indexing::Integer);
  const InterleavingCert<FinSet> broken{
      DeltaMorphism<FinSet>::build(x, x, g1(1), [](const Grade& r) { return r[0] < 0 ? FinSet::Map{} : FinSet::Map{1, 0}; }),
      structure_morphism(x, g1(1))};
  CHECK_THROWS_AS(zigzag(broken), PreconditionError);
}

TEST_CASE("three-halves reduction") {
  Rng rng(67);
  int done = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto base = random_interleaved_finset(rng, 1, {-3, 3, 3});
    const auto& x = base.x();
    const auto& y = base.y();
    const auto real = find_interleaving(extend_floor(x), extend_floor(y), g1(Rational(5, 4)), g1(Rational(5, 4)));
    if (!real) continue;
    ++done;
    const auto c = three_halves_check(x, y, Rational(5, 4), *real);
    CHECK(c.epsilon() == g1(1));
    CHECK(check_interleaving(c).valid);
  }
  CHECK(done >= 30);

  const auto x = random_finset_z(rng, {-2, 2, 2});
  const auto iso = self_interleaving(extend_floor(x), g1(0));
  CHECK(check_interleaving(three_halves_check(x, x, Rational(0), iso)).valid);
  const auto wide = self_interleaving(extend_floor(x), g1(Rational(3, 2)));
  CHECK_THROWS_AS(three_halves_check(x, x, Rational(3, 2), wide), PreconditionError);
}
