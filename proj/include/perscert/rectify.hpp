#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>

#include "perscert/reindex.hpp"

namespace perscert {

// Integer window [lo, hi] of a Z-indexed object (consecutive integer axis).
inline std::pair<std::int64_t, std::int64_t> integer_window_of(const Grid& g) {
  require_one_parameter(g, "integer window");
  const auto& axis = g.axis(0);
  for (const auto& v : axis)
    if (!v.is_integer()) throw PreconditionError("expected an integer-indexed object, found breakpoint " + v.str());
  return {floor_int(axis.front()), floor_int(axis.back())};
}

// Smallest s >= 0 with even_reindex(n + s, m) >= n for every n, found by
// scanning one period of the block pattern.
inline std::int64_t measured_piece_shift(std::int64_t m) {
  for (std::int64_t s = 0;; ++s) {
    bool ok = true;
    for (std::int64_t n = 0; n < 2 * m && ok; ++n) ok = even_reindex(n + s, m) >= n;
    if (ok) return s;
  }
}

// Largest shift the zig-zag composite needs: for each n the path
// A(n) -> A(next even block) -> B(following odd block) -> B(n + s).
inline std::int64_t measured_composite_shift(std::int64_t m) {
  std::int64_t worst = 0;
  for (std::int64_t n = 0; n < 2 * m; ++n) {
    const std::int64_t a = even_reindex(n + measured_piece_shift(m), m);
    worst = std::max(worst, a + m - n);
  }
  return worst;
}

// e_m^*(X) ~(m,m)~ o_m^*(X) on [lo, hi], both maps structure maps of X:
// f_n = phi_{e_m(n), o_m(n+m)}, g_n = phi_{o_m(n), e_m(n+m)}.
template <Category C>
InterleavingCert<C> even_odd_certificate(const PersistentObject<C>& x, std::int64_t m, std::int64_t lo, std::int64_t hi) {
  auto e = [m](std::int64_t n) { return even_reindex(n, m); };
  auto o = [m](std::int64_t n) { return odd_reindex(n, m); };
  const auto ex = reindex<C>(x, e, lo, hi);
  const auto ox = reindex<C>(x, o, lo, hi);
  const Grade shift{Rational(m)};
  auto at = [](std::int64_t n) { return Grade{Rational(n)}; };
  auto f = DeltaMorphism<C>::build(ex, ox, shift, [&](const Grade& r) {
    const std::int64_t n = floor_int(r[0]);
    return x.structure_map(at(e(n)), at(o(n + m)));
  });
  auto g = DeltaMorphism<C>::build(ox, ex, shift, [&](const Grade& r) {
    const std::int64_t n = floor_int(r[0]);
    return x.structure_map(at(o(n)), at(e(n + m)));
  });
  return {std::move(f), std::move(g)};
}

template <Category C>
struct EvenOddResult {
  PersistentObject<C> even;
  PersistentObject<C> odd;
  InterleavingCert<C> cert;
};

// Reindexes onto [lo, hi + 2m - 1]: past that point both reindexings have
// reached X's top value, so the constant extension is exact.
template <Category C>
EvenOddResult<C> even_odd_restrict(const PersistentObject<C>& x, std::int64_t m) {
  if (m < 1) throw PreconditionError("block size m must be positive");
  const auto [lo, hi] = integer_window_of(x.grid());
  auto cert = even_odd_certificate(x, m, lo, hi + 2 * m - 1);
  auto even = cert.f.source();
  auto odd = cert.f.target();
  return {std::move(even), std::move(odd), std::move(cert)};
}

template <Category C>
struct ZigzagResult {
  std::int64_t m = 1;
  std::int64_t window_lo = 0, window_hi = 0;  // reindexing window W
  PersistentObject<C> c;                      // the diagonal object on its own window
  PersistentObject<C> even_a, odd_b;          // e_m^*(A), o_m^*(B) on W
  PersistentObject<C> even_c, odd_c;          // e_m^*(C), o_m^*(C) on W
  bool even_witness = false;                  // even_c == even_a
  bool odd_witness = false;                   // odd_c == odd_b
  InterleavingCert<C> a_to_even;              // A ~(2m-1, 0)~ e_m^*(A)
  InterleavingCert<C> even_to_odd;            // e_m^*(C) ~(m, m)~ o_m^*(C)
  InterleavingCert<C> odd_to_b;               // o_m^*(B) ~(0, 2m-1)~ B
  InterleavingCert<C> composite;              // A ~(3m-1, 3m-1)~ B
};

// Diagonal zig-zag through an m-interleaving (f, g) of Z-indexed A and B.
// C(n) = A(qm) when q = n // m is even and B(qm) when q is odd; inside a block
// the maps are identities, and the step out of block q is f_{qm} (q even) or
// g_{qm} (q odd).
template <Category C>
ZigzagResult<C> zigzag(const InterleavingCert<C>& cert) {
  const auto& a = cert.x();
  const auto& b = cert.y();
  if (cert.epsilon() != cert.delta() || cert.epsilon().arity() != 1 || !cert.epsilon()[0].is_integer())
    throw PreconditionError("zigzag needs an (m, m)-interleaving with integer m");
  const std::int64_t m = floor_int(cert.epsilon()[0]);
  if (m < 1) throw PreconditionError("zigzag needs m >= 1");
  const auto report = check_interleaving(cert);
  if (!report.valid) throw PreconditionError("zigzag input certificate is invalid: " + report.identity);

  const auto [alo, ahi] = integer_window_of(a.grid());
  const auto [blo, bhi] = integer_window_of(b.grid());
  const std::int64_t lo = std::min(alo, blo);
  const std::int64_t hi = std::max(ahi, bhi);
  const std::int64_t wlo = lo, whi = hi + 2 * m - 1;
  const std::int64_t chi = hi + 4 * m;

  auto at = [](std::int64_t n) { return Grade{Rational(n)}; };
  auto block_start = [m](std::int64_t n) { return floor_div(n, m) * m; };
  auto even_block = [m](std::int64_t n) { return floor_div(n, m) % 2 == 0; };
  const Grid cgrid = Grid::integer_window(lo, chi);
  auto c = PersistentObject<C>::build(
      cgrid,
      [&](std::size_t p) {
        const std::int64_t n = lo + static_cast<std::int64_t>(p);
        return even_block(n) ? a.evaluate(at(block_start(n))) : b.evaluate(at(block_start(n)));
      },
      [&](std::size_t p, std::size_t) -> typename C::Map {
        const std::int64_t n = lo + static_cast<std::int64_t>(p);
        const std::int64_t s = block_start(n);
        if (block_start(n + 1) == s)
          return C::identity(even_block(n) ? a.evaluate(at(s)) : b.evaluate(at(s)));
        return even_block(n) ? cert.f.at(at(s)) : cert.g.at(at(s));
      },
      Indexing::Integer);

  auto e = [m](std::int64_t n) { return even_reindex(n, m); };
  auto o = [m](std::int64_t n) { return odd_reindex(n, m); };
  auto even_a = reindex<C>(a, e, wlo, whi);
  auto odd_b = reindex<C>(b, o, wlo, whi);
  auto even_to_odd = even_odd_certificate(c, m, wlo, whi);
  const bool even_witness = even_to_odd.f.source() == even_a;
  const bool odd_witness = even_to_odd.f.target() == odd_b;
  if (!even_witness || !odd_witness)
    throw PreconditionError("zigzag restrictions do not match the inputs on the window");

  const Grade piece{Rational(2 * m - 1)};
  const Grade zero{Rational(0)};
  InterleavingCert<C> a_to_even{DeltaMorphism<C>::build(a, even_a, piece,
                                                        [&](const Grade& r) {
                                                          const std::int64_t n = floor_int(r[0]);
                                                          return a.structure_map(r, at(e(n + 2 * m - 1)));
                                                        }),
                                DeltaMorphism<C>::build(even_a, a, zero, [&](const Grade& r) {
                                  return a.structure_map(at(e(floor_int(r[0]))), r);
                                })};
  InterleavingCert<C> odd_to_b{
      DeltaMorphism<C>::build(odd_b, b, zero, [&](const Grade& r) { return b.structure_map(at(o(floor_int(r[0]))), r); }),
      DeltaMorphism<C>::build(b, odd_b, piece, [&](const Grade& r) {
        const std::int64_t n = floor_int(r[0]);
        return b.structure_map(r, at(o(n + 2 * m - 1)));
      })};
  // even_to_odd runs between the C-restrictions, which equal even_a and
  // odd_b literally, so the pieces chain.
  const InterleavingCert<C> middle{
      DeltaMorphism<C>(even_a, odd_b, even_to_odd.f.shift(), even_to_odd.f.components()),
      DeltaMorphism<C>(odd_b, even_a, even_to_odd.g.shift(), even_to_odd.g.components())};
  auto composite = compose_interleavings(compose_interleavings(a_to_even, middle), odd_to_b);
  auto even_c = even_to_odd.f.source();
  auto odd_c = even_to_odd.f.target();
  return ZigzagResult<C>{m,
                         wlo,
                         whi,
                         std::move(c),
                         std::move(even_a),
                         std::move(odd_b),
                         std::move(even_c),
                         std::move(odd_c),
                         even_witness,
                         odd_witness,
                         std::move(a_to_even),
                         std::move(even_to_odd),
                         std::move(odd_to_b),
                         std::move(composite)};
}

// From an (r, r)-interleaving of the floor extensions of Z-indexed X and Y
// with 0 <= r < 3/2, a 1-interleaving of X and Y:
// f'_n = phi^Y_{floor(n+r), n+1} o f_n, and symmetrically for g.
template <Category C>
InterleavingCert<C> three_halves_check(const PersistentObject<C>& x, const PersistentObject<C>& y, const Rational& r,
                                       const InterleavingCert<C>& real_cert) {
  if (r.sign() < 0 || !(r < Rational(3, 2))) throw PreconditionError("three_halves_check needs 0 <= r < 3/2, got " + r.str());
  const Grade shift{r};
  if (real_cert.epsilon() != shift || real_cert.delta() != shift)
    throw MismatchError("certificate shifts differ from r");
  if (!(real_cert.x() == extend_floor(x)) || !(real_cert.y() == extend_floor(y)))
    throw MismatchError("certificate does not interleave the floor extensions of X and Y");
  const auto report = check_interleaving(real_cert);
  if (!report.valid) throw PreconditionError("input certificate is invalid: " + report.identity);

  const Grade one{Rational(1)};
  auto build = [&](const PersistentObject<C>& src, const PersistentObject<C>& tgt, const DeltaMorphism<C>& h) {
    return DeltaMorphism<C>::build(src, tgt, one, [&](const Grade& n) {
      const Grade landing{Rational(floor_int(n[0] + r))};
      return C::compose(tgt.structure_map(landing, n + one), h.at(n));
    });
  };
  const auto xz = x.with_indexing(Indexing::Integer);
  const auto yz = y.with_indexing(Indexing::Integer);
  return {build(xz, yz, real_cert.f), build(yz, xz, real_cert.g)};
}

}  // namespace perscert
