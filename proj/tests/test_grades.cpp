#include "doctest.h"
#include "perscert/grade.hpp"
#include "perscert/errors.hpp"
#include "perscert/random.hpp"

using namespace perscert;

TEST_CASE("rational canonical form and parsing") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK(Rational(4, 2).str() == "2");
  CHECK(Rational::parse("-3/9") == Rational(-1, 3));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1/0"), SchemaError);
  CHECK_THROWS_AS(Rational::parse("x"), SchemaError);
  CHECK_THROWS_AS(Rational::parse(""), SchemaError);
}

TEST_CASE("leq is the product order") {
  CHECK(leq(Grade{0, 0}, Grade{1, 1}));
  CHECK_FALSE(leq(Grade{1, 0}, Grade{0, 1}));
  CHECK_FALSE(leq(Grade{0, 1}, Grade{1, 0}));
  const Grade a{Rational(1, 3), 2};
  CHECK(leq(a, a));
  CHECK_THROWS_AS(leq(Grade{0}, Grade{0, 0}), DimensionError);
}

TEST_CASE("leq is a partial order on random triples") {
  Rng rng(11);
  auto random_grade = [&] {
    return Grade{Rational(rng.uniform(-3, 3), rng.uniform(1, 3)), Rational(rng.uniform(-3, 3), rng.uniform(1, 3))};
  };
  for (int i = 0; i < 500; ++i) {
    const Grade a = random_grade(), b = random_grade(), c = random_grade();
    CHECK(leq(a, a));
    if (leq(a, b) && leq(b, a)) CHECK(a == b);
    if (leq(a, b) && leq(b, c)) CHECK(leq(a, c));
    CHECK(leq(meet(a, b), a));
    CHECK(leq(a, join(a, b)));
  }
}

TEST_CASE("add, sub and scale are exact") {
  CHECK(Grade{Rational(1, 2), Rational(1, 3)} + Grade{Rational(1, 2), Rational(2, 3)} == Grade{1, 1});
  const Grade a{Rational(5, 7), -2};
  CHECK(a + Grade::zero(2) == a);
  CHECK(Grade{3} - Grade{5} == Grade{-2});
  CHECK_THROWS_AS((Grade{1} + Grade{1, 1}), DimensionError);
  CHECK(scale(Grade{3}, 1) == Grade{3});
  CHECK(scale(Grade{Rational(3, 2)}, Rational(2, 3)) == Grade{1});
  CHECK(scale(Grade{-1}, Rational(1, 2)) == Grade{Rational(-1, 2)});
  CHECK_THROWS_AS(scale(Grade{1}, 0), PreconditionError);
  CHECK_THROWS_AS(scale(Grade{1}, -1), PreconditionError);
}

TEST_CASE("floor_int") {
  CHECK(floor_int(Rational(3, 2)) == 1);
  CHECK(floor_int(Rational(-1, 2)) == -1);
  CHECK(floor_int(Rational(2)) == 2);
  CHECK(ceil_int(Rational(-1, 2)) == 0);
  Rng rng(5);
  for (int i = 0; i < 500; ++i) {
    const Rational r(rng.uniform(-50, 50), rng.uniform(1, 7));
    const auto f = floor_int(r);
    CHECK(Rational(f) <= r);
    CHECK(r < Rational(f + 1));
  }
}

TEST_CASE("even and odd reindexing") {
  CHECK(even_reindex(3, 1) == 2);
  CHECK(even_reindex(4, 1) == 4);
  CHECK(odd_reindex(4, 1) == 3);
  CHECK(odd_reindex(3, 1) == 3);
  CHECK(even_reindex(5, 2) == 4);
  CHECK(floor_div(-1, 2) == -1);
  CHECK(floor_div(-4, 2) == -2);
  for (std::int64_t m = 1; m <= 4; ++m) {
    for (std::int64_t n = -20; n <= 20; ++n) {
      const auto e = even_reindex(n, m), o = odd_reindex(n, m);
      CHECK(e <= n);
      CHECK(o <= n);
      CHECK((e > o ? e - o : o - e) == m);
      CHECK(even_reindex(e, m) == e);
      CHECK(odd_reindex(o, m) == o);
      CHECK(e <= even_reindex(n + 1, m));
      CHECK(o <= odd_reindex(n + 1, m));
      // naive: largest l * m <= n, then parity adjustment
      std::int64_t l = 0;
      while (l * m > n) --l;
      while ((l + 1) * m <= n) ++l;
      const std::int64_t ne = (l % 2 == 0 ? l : l - 1) * m;
      CHECK(e == ne);
    }
  }
}
