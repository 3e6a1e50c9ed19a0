#include "doctest.h"
#include "oracles.hpp"
#include "perscert/f2.hpp"
#include "perscert/random.hpp"
#include "perscert/simd/f2_kernels.hpp"

using namespace perscert;

namespace {

std::vector<std::uint64_t> random_words(Rng& rng, std::size_t n, int density) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = rng.coin(density) ? rng.next() : 0;
  return w;
}

F2Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  F2Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rng.coin());
  return m;
}

std::vector<oracle::Row> dense_rows(const F2Matrix& m) {
  std::vector<oracle::Row> rows(m.rows(), oracle::Row(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = m.get(r, c);
  return rows;
}

}  // namespace

TEST_CASE("scalar kernels against per-bit loops") {
  const auto& k = simd::scalar_kernels();
  Rng rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(0, 19));
    auto a = random_words(rng, n, 60);
    const auto b = random_words(rng, n, 60);
    std::size_t bits = 0;
    for (auto w : a)
      for (int i = 0; i < 64; ++i) bits += (w >> i) & 1u;
    CHECK(k.popcount(a.data(), n) == bits);
    std::size_t last = n;
    for (std::size_t i = 0; i < n; ++i)
      if (a[i]) last = i;
    CHECK(k.last_nonzero(a.data(), n) == last);
    CHECK(k.is_zero(a.data(), n) == (last == n));
    CHECK(k.equal(a.data(), b.data(), n) == (a == b));
    auto expect = a;
    for (std::size_t i = 0; i < n; ++i) expect[i] ^= b[i];
    k.xor_into(a.data(), b.data(), n);
    CHECK(a == expect);
  }
}

TEST_CASE("AVX2 kernels agree with the scalar reference") {
  const auto* avx = simd::avx2_kernels();
  if (!avx) {
    MESSAGE("AVX2 unavailable on this build or CPU; equivalence not exercised");
    return;
  }
  const auto& ref = simd::scalar_kernels();
  Rng rng(2);
  for (int trial = 0; trial < 2000; ++trial) {
    // lengths straddle the 4-word vector width and its tails
    const std::size_t n = static_cast<std::size_t>(rng.uniform(0, 37));
    const int density = static_cast<int>(rng.uniform(0, 100));
    auto a = random_words(rng, n, density);
    auto b = rng.coin(20) ? a : random_words(rng, n, density);
    CHECK(avx->popcount(a.data(), n) == ref.popcount(a.data(), n));
    CHECK(avx->is_zero(a.data(), n) == ref.is_zero(a.data(), n));
    CHECK(avx->last_nonzero(a.data(), n) == ref.last_nonzero(a.data(), n));
    CHECK(avx->equal(a.data(), b.data(), n) == ref.equal(a.data(), b.data(), n));
    auto a2 = a;
    avx->xor_into(a.data(), b.data(), n);
    ref.xor_into(a2.data(), b.data(), n);
    CHECK(a == a2);
  }
}

TEST_CASE("bit vectors") {
  auto v = BitVector::parse("10110");
  CHECK(v.size() == 5);
  CHECK(v.count() == 3);
  CHECK(v.str() == "10110");
  CHECK(v.highest() == 3u);
  CHECK(BitVector(70).none());
  CHECK_FALSE(BitVector(70).highest());
  auto w = BitVector::unit(130, 129);
  CHECK(w.highest() == 129u);
  w ^= w;
  CHECK(w.none());
}

TEST_CASE("matrix product and rank against dense oracles") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto r = static_cast<std::size_t>(rng.uniform(0, 7));
    const auto k = static_cast<std::size_t>(rng.uniform(0, 7));
    const auto c = static_cast<std::size_t>(rng.uniform(0, 7));
    const auto g = random_matrix(rng, r, k);
    const auto f = random_matrix(rng, k, c);
    const auto gf = g * f;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        bool s = false;
        for (std::size_t t = 0; t < k; ++t) s ^= g.get(i, t) && f.get(t, j);
        CHECK(gf.get(i, j) == s);
      }
    CHECK(g.rank() == oracle::gf2_rank(dense_rows(g)));
    CHECK(g.is_injective() == (oracle::gf2_rank(dense_rows(g)) == k));
  }
  CHECK_THROWS_AS(F2Matrix(2, 3) * F2Matrix(2, 2), PreconditionError);
}

TEST_CASE("row strings round trip") {
  Rng rng(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_matrix(rng, static_cast<std::size_t>(rng.uniform(0, 5)), static_cast<std::size_t>(rng.uniform(0, 5)));
    CHECK(F2Matrix::from_rows(m.rows(), m.cols(), m.row_strings()) == m);
  }
}

TEST_CASE("reducer expresses vectors in its span") {
  Rng rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = 9;
    F2Reducer red(dim, 6);
    std::vector<BitVector> stored, all;
    for (std::size_t i = 0; i < 6; ++i) {
      BitVector v(dim);
      for (std::size_t b = 0; b < dim; ++b) v.set(b, rng.coin(40));
      all.push_back(v);
      if (red.insert(v, BitVector::unit(6, i))) stored.push_back(v);
    }
    BitVector target(dim);
    for (std::size_t b = 0; b < dim; ++b) target.set(b, rng.coin());
    const auto tag = red.express(target);
    std::vector<oracle::Row> rows;
    for (const auto& s : stored) {
      oracle::Row row(dim);
      for (std::size_t b = 0; b < dim; ++b) row[b] = s.test(b);
      rows.push_back(row);
    }
    const auto base = oracle::gf2_rank(rows);
    oracle::Row t(dim);
    for (std::size_t b = 0; b < dim; ++b) t[b] = target.test(b);
    rows.push_back(t);
    const bool in_span = oracle::gf2_rank(rows) == base;
    REQUIRE(tag.has_value() == in_span);
    if (tag) {
      BitVector sum(dim);
      for (std::size_t i = 0; i < 6; ++i)
        if (tag->test(i)) sum ^= all[i];
      CHECK(sum == target);
    }
  }
}
