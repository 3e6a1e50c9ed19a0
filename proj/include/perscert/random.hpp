#pragma once

#include <cstdint>
#include <random>

#include "perscert/distances.hpp"
#include "perscert/rectify.hpp"

namespace perscert {

// mt19937_64 with modulo reduction, so streams are identical across standard
// libraries (std distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform-ish integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin(int percent = 50) { return uniform(0, 99) < percent; }
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

struct RandomShape {
  std::int64_t lo = -4;
  std::int64_t hi = 4;
  std::size_t max_size = 5;  // set cardinality or vector-space dimension
};

// Random Z-indexed object on [lo, hi]. FinSet objects stay nonempty once
// nonempty; F2Vec maps are arbitrary matrices.
PersistentObject<FinSet> random_finset_z(Rng& rng, const RandomShape& shape);
PersistentObject<F2Vec> random_f2vec_z(Rng& rng, const RandomShape& shape);

// Random R-indexed object with `breakpoints` rational breakpoints in
// [-3, 3] (denominators up to 4).
PersistentObject<FinSet> random_finset_real(Rng& rng, std::size_t breakpoints, std::size_t max_size);
PersistentObject<F2Vec> random_f2vec_real(Rng& rng, std::size_t breakpoints, std::size_t max_size);

// Random one-parameter filtered complex on at most `max_vertices` vertices
// with integer grades in [0, max_grade], up to dimension 2.
FilteredComplex random_filtered_complex(Rng& rng, std::size_t max_vertices, std::int64_t max_grade, std::size_t arity = 1);

// Random persistent complex whose structure maps may collapse vertices.
PersistentObject<Complex> random_collapsing_complex(Rng& rng, std::size_t points, std::size_t max_vertices);

// Random permutation of {0..n-1}.
std::vector<std::uint32_t> random_permutation(Rng& rng, std::size_t n);

// Relabels every X(p) by a random permutation; returns the new object and
// the isomorphism X -> X' as a 0-interleaving.
std::pair<PersistentObject<FinSet>, InterleavingCert<FinSet>> random_relabel(Rng& rng, const PersistentObject<FinSet>& x);

// (e_m^* Z, o_m^* Z) with random relabelling, for random Z, together with an
// (m, m)-interleaving. Both live on [shape.lo, shape.hi].
InterleavingCert<FinSet> random_interleaved_finset(Rng& rng, std::int64_t m, const RandomShape& shape);
InterleavingCert<F2Vec> random_interleaved_f2vec(Rng& rng, std::int64_t m, const RandomShape& shape);

// Random B with a natural map h : B -> Y (on Y's grid).
DeltaMorphism<FinSet> random_map_into(Rng& rng, const PersistentObject<FinSet>& y, std::size_t max_size);
DeltaMorphism<F2Vec> random_map_into(Rng& rng, const PersistentObject<F2Vec>& y, std::size_t max_size);

// At most `max_bars` bars with endpoints in (1/2)Z within [0, 4]; some
// infinite.
Barcode random_barcode(Rng& rng, std::size_t max_bars);

// Random symmetric matrix with zero diagonal and entries in {1..max_entry}.
MetricInput random_metric(Rng& rng, std::size_t points, std::int64_t max_entry);

}  // namespace perscert
