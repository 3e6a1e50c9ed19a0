#include "doctest.h"
#include "perscert/io.hpp"
#include "perscert/random.hpp"

using namespace perscert;
using io::json;

namespace {

template <class T, class F>
void round_trip(const T& value, F&& decode) {
  const json j = io::to_json(value);
  const json again = json::parse(j.dump());
  CHECK(decode(again) == value);
  CHECK(io::to_json(decode(again)).dump() == j.dump());
}

}  // namespace

TEST_CASE("rationals and grades") {
  CHECK(io::to_json(Rational(3, 6)) == "1/2");
  CHECK(io::to_json(Rational(-4)) == "-4");
  CHECK(io::rational_from_json(json(7)) == Rational(7));
  CHECK(io::grade_from_json(json::parse(R"(["1/3", "2"])")) == Grade{Rational(1, 3), 2});
  CHECK_THROWS_AS(io::grade_from_json(json::parse("[]")), SchemaError);
  CHECK_THROWS_AS(io::rational_from_json(json(1.5)), SchemaError);
  CHECK(io::to_json(Extended{}) == "inf");
  CHECK_FALSE(io::extended_from_json(json("inf")));
}

TEST_CASE("persistent objects round trip") {
  Rng rng(81);
  for (int trial = 0; trial < 30; ++trial) {
    round_trip(random_finset_real(rng, 3, 4), io::object_from_json<FinSet>);
    round_trip(random_f2vec_real(rng, 3, 3), io::object_from_json<F2Vec>);
    round_trip(random_collapsing_complex(rng, 3, 4), io::object_from_json<Complex>);
    round_trip(to_persistent(random_filtered_complex(rng, 4, 3, 2)), io::object_from_json<Complex>);
  }
}

TEST_CASE("certificates round trip") {
  Rng rng(82);
  for (int trial = 0; trial < 20; ++trial) {
    round_trip(random_interleaved_finset(rng, 1, {-3, 3, 3}), io::cert_from_json<FinSet>);
    round_trip(random_interleaved_f2vec(rng, 1, {-3, 3, 2}), io::cert_from_json<F2Vec>);
    round_trip(self_interleaving(random_collapsing_complex(rng, 3, 3), Grade{1}), io::cert_from_json<Complex>);
  }
}

TEST_CASE("documents round trip") {
  Rng rng(83);
  for (int trial = 0; trial < 20; ++trial) {
    round_trip(random_filtered_complex(rng, 5, 3, 1 + static_cast<std::size_t>(trial % 2)), io::filtered_from_json);
    auto b = random_barcode(rng, 5);
    sort_barcode(b);
    round_trip(b, io::barcode_from_json);
    const auto m = random_metric(rng, 4, 5);
    const auto back = io::metric_from_json(json::parse(io::to_json(m).dump()));
    CHECK(back.distances == m.distances);
  }
}

TEST_CASE("schema errors") {
  CHECK_THROWS_AS(io::object_from_json<FinSet>(json::parse("{}")), SchemaError);
  Rng rng(84);
  json j = io::to_json(random_finset_real(rng, 2, 2));
  CHECK_THROWS_AS(io::object_from_json<F2Vec>(j), SchemaError);
  j["objects"].push_back(1);
  CHECK_THROWS_AS(io::object_from_json<FinSet>(j), SchemaError);
  json c = io::to_json(random_interleaved_finset(rng, 1, {-2, 2, 2}));
  c["f_components"].erase(0);
  CHECK_THROWS_AS(io::cert_from_json<FinSet>(c), SchemaError);
  json bad_bar = json::parse(R"({"format":"perscert.barcode/1","intervals":[{"birth":"2","death":"1"}]})");
  CHECK_THROWS_AS(io::barcode_from_json(bad_bar), SchemaError);
  json metric = json::parse(R"({"format":"perscert.metric/1","distances":[["0","1"],["2","0"]]})");
  CHECK_THROWS_AS(io::metric_from_json(metric), SchemaError);
}

TEST_CASE("reports") {
  const auto x = PersistentObject<FinSet>::constant_from(Grade{0}, 2);
  const InterleavingCert<FinSet> c{
      DeltaMorphism<FinSet>::build(x, x, Grade{0}, [](const Grade&) { return FinSet::Map{1, 0}; }),
      identity_morphism(x)};
  const json r = io::to_json(check_interleaving(c));
  CHECK(r["format"] == io::kReportFormat);
  CHECK(r["valid"] == false);
  CHECK(r["at"] == json::parse(R"(["0"])"));
}
