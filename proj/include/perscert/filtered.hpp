#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perscert/persistent.hpp"

namespace perscert {

struct FilteredSimplex {
  Simplex vertices;
  Grade grade;
  friend bool operator==(const FilteredSimplex&, const FilteredSimplex&) = default;
};

// Simplices with entrance grades. Construction only normalizes (sorts
// simplices by SimplexOrder, vertices ascending); `validate` reports face
// closure and monotonicity problems.
class FilteredComplex {
 public:
  FilteredComplex() = default;
  FilteredComplex(std::size_t arity, std::vector<Vertex> vertices, std::vector<FilteredSimplex> simplices);

  std::size_t arity() const { return arity_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<FilteredSimplex>& simplices() const { return simplices_; }
  std::optional<Grade> grade_of(const Simplex& s) const;

  friend bool operator==(const FilteredComplex&, const FilteredComplex&) = default;

 private:
  std::size_t arity_ = 1;
  std::vector<Vertex> vertices_;
  std::vector<FilteredSimplex> simplices_;
};

struct ValidationReport {
  bool valid = true;
  std::string violation;
};

ValidationReport validate(const FilteredComplex& f);

// Sublevel complexes {sigma : beta(sigma) <= r} on the grid of distinct grade
// coordinates, with inclusions. Throws PreconditionError on invalid input.
PersistentObject<Complex> to_persistent(const FilteredComplex& f);

struct FilteredCheck {
  bool filtered = true;
  // 1: a structure map is not a monomorphism; 2: some simplex has no
  // minimal entrance grade.
  int violated_condition = 0;
  std::optional<Simplex> simplex;  // named by its image in the top complex
  std::string detail;
  std::optional<FilteredComplex> witness;  // beta, when filtered
};

FilteredCheck is_filtered(const PersistentObject<Complex>& x);

// Largest simplex dimension; -1 for the empty complex.
int dimension(const FilteredComplex& f);
bool is_n_skeletal(const FilteredComplex& f, int n);
// Length of the dimension-ordered cell decomposition, i.e. the dimension.
int cofibrant_dimension(const FilteredComplex& f);
// Simplices of dimension <= n. Throws PreconditionError for n < 0.
FilteredComplex skeleton(const FilteredComplex& f, int n);

// Symmetric dissimilarity matrix with zero diagonal, optionally with one
// function value per point.
struct MetricInput {
  std::vector<std::vector<Rational>> distances;
  std::optional<std::vector<Rational>> function;

  std::size_t size() const { return distances.size(); }
  // Throws PreconditionError when not square, not symmetric, or with a
  // nonzero diagonal or a function of the wrong length.
  void check() const;
};

enum class Norm { L1, LInf };
MetricInput metric_from_points(const std::vector<std::vector<Rational>>& points, Norm norm);

// All vertex subsets of size <= d_max + 1, graded by diameter.
FilteredComplex vietoris_rips(const MetricInput& metric, int d_max);
// Grade (diameter, max f over the simplex).
FilteredComplex function_rips(const MetricInput& metric, int d_max);
// Two-parameter object: at (r, -k) the Rips complex at scale r on the
// vertices whose r-neighbourhood degree is at least k.
PersistentObject<Complex> degree_rips(const MetricInput& metric, int d_max);

// Commuting square of complexes indexed by {0,1}^2:
//   d00 -> d10 (first coordinate), d00 -> d01 (second coordinate),
//   d10 -> d11, d01 -> d11.
struct SquareDiagram {
  SimplicialComplex d00, d01, d10, d11;
  VertexMap m00_10, m00_01, m10_11, m01_11;
};

// Grid {-1, 0, 1, 2, 3}^2: empty when a coordinate is negative, D(i, j) on
// [0,2)^2 by floor, and a point elsewhere. Throws PreconditionError when
// the square does not commute or a map is ill-typed.
PersistentObject<Complex> sq_gadget(const SquareDiagram& d);

}  // namespace perscert
