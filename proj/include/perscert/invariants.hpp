#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perscert/filtered.hpp"
#include "perscert/search.hpp"

namespace perscert {

using PersistentSet = PersistentObject<FinSet>;
using PersistentModule = PersistentObject<F2Vec>;

// [birth, death), death nullopt meaning infinity.
struct Interval {
  Rational birth;
  std::optional<Rational> death;

  bool contains(const Rational& r) const { return birth <= r && (!death || r < *death); }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Sorted by birth, then death with infinity last.
using Barcode = std::vector<Interval>;
void sort_barcode(Barcode& b);
std::string to_string(const Interval& i);

// Connected components of k, numbered by increasing least vertex:
// component_of[i] is the component of k.vertices()[i].
struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> component_of;
};
Components connected_components(const SimplicialComplex& k);

// pi_0 of the induced map f : k -> l on component indices.
FinSet::Map components_map(const VertexMap& f, const SimplicialComplex& k, const SimplicialComplex& l);

PersistentSet pi0(const PersistentObject<Complex>& x);
DeltaMorphism<FinSet> pi0_induced(const DeltaMorphism<Complex>& f);

// H_n with F2 coefficients, one-parameter objects only (UnsupportedError
// otherwise). Bases are chosen deterministically per complex, so induced
// maps from different morphisms compose correctly.
PersistentModule homology(const PersistentObject<Complex>& x, int n);
DeltaMorphism<F2Vec> homology_induced(const DeltaMorphism<Complex>& f, int n);
InterleavingCert<F2Vec> homology_certificate(const InterleavingCert<Complex>& cert, int n);

// Rank of phi_{r,s}.
std::size_t structure_rank(const PersistentModule& x, const Grade& r, const Grade& s);

// Interval decomposition of a one-parameter module by Moebius inversion of
// the rank function on its grid.
Barcode barcode(const PersistentModule& x);

// Barcode of H_n of a one-parameter filtered complex by column reduction of
// the filtration boundary matrix.
Barcode filtration_barcode(const FilteredComplex& f, int n);

struct Pi0InterleavingResult {
  bool holds = false;
  std::optional<DeltaMorphism<FinSet>> partner;
};

// Whether pi_0(f), shifted to eps, is part of an (eps, delta)-interleaving of
// persistent sets.
Pi0InterleavingResult induces_interleaving_in_pi0(const DeltaMorphism<Complex>& f, const Grade& eps, const Grade& delta,
                                                  SearchBudget budget = {});

}  // namespace perscert
