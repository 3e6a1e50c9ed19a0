#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace perscert {

using Vertex = std::int64_t;
// Ascending list of distinct vertices; the dimension is size() - 1.
using Simplex = std::vector<Vertex>;

// Order used everywhere simplices are sorted: by dimension, then
// lexicographically.
struct SimplexOrder {
  bool operator()(const Simplex& a, const Simplex& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

// Codimension-one faces of s, in the order obtained by deleting vertex i.
std::vector<Simplex> facets(const Simplex& s);

// Finite abstract simplicial complex. Always face-closed; construction
// throws PreconditionError otherwise.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  explicit SimplicialComplex(std::vector<Simplex> simplices);

  static SimplicialComplex point(Vertex v = 0) { return SimplicialComplex(std::vector<Simplex>{Simplex{v}}); }

  const std::vector<Simplex>& simplices() const { return simplices_; }
  std::vector<Vertex> vertices() const;
  std::span<const Simplex> simplices_of_dim(int dim) const;
  bool contains(const Simplex& s) const;
  // -1 for the empty complex.
  int dimension() const;
  bool empty() const { return simplices_.empty(); }
  std::size_t size() const { return simplices_.size(); }
  // Position of s in simplices(); s must be present.
  std::size_t index_of(const Simplex& s) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::vector<Simplex> simplices_;  // sorted by SimplexOrder, no duplicates
};

// Vertex-level simplicial map: sorted (source, target) pairs.
class VertexMap {
 public:
  VertexMap() = default;
  explicit VertexMap(std::vector<std::pair<Vertex, Vertex>> pairs);

  static VertexMap identity_on(const std::vector<Vertex>& vertices);

  Vertex operator()(Vertex v) const;
  // Image simplex, sorted and deduplicated (may drop in dimension).
  Simplex operator()(const Simplex& s) const;

  const std::vector<std::pair<Vertex, Vertex>>& pairs() const { return pairs_; }
  std::vector<Vertex> domain() const;
  bool is_injective() const;

  friend bool operator==(const VertexMap&, const VertexMap&) = default;

 private:
  std::vector<std::pair<Vertex, Vertex>> pairs_;
};

}  // namespace perscert
