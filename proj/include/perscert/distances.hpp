#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "perscert/invariants.hpp"

namespace perscert {

// Partial bijection between two barcodes. A pair with one side empty is a
// bar sent to the diagonal.
struct Matching {
  std::vector<std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> pairs;
};

// Rational or infinity (nullopt).
using Extended = std::optional<Rational>;
bool extended_leq(const Extended& a, const Extended& b);
std::string to_string(const Extended& v);

// L-infinity cost of matching two bars; infinite unless both deaths are
// finite or both infinite.
Extended bar_distance(const Interval& a, const Interval& b);
// Half-length of a bar; infinite for an infinite bar.
Extended deletion_cost(const Interval& a);
// Maximum cost over a matching. Throws PreconditionError unless every bar
// of both barcodes is used exactly once.
Extended matching_cost(const Barcode& a, const Barcode& b, const Matching& m);

struct BottleneckResult {
  Extended value;
  Matching matching;  // empty when the value is infinite
};

// Exact bottleneck distance: infinite bars are matched among themselves in
// birth order; finite bars by a perfect-matching test at each candidate
// threshold in increasing order.
BottleneckResult bottleneck(const Barcode& a, const Barcode& b);

struct StabilityReport {
  int degree = 0;
  PersistentModule hx, hy;
  CheckReport module_check;
  Barcode bx, by;
  Extended bottleneck_distance;
  Rational delta;  // largest shift of the certificate
  bool holds = false;
};

// H_n of both sides, the induced module interleaving, their barcodes and
// the check d_B <= delta. Throws PreconditionError on an invalid certificate.
StabilityReport stability_audit(const InterleavingCert<Complex>& cert, int n);

struct CrosscheckReport {
  Barcode bf, bg;
  Extended bottleneck_distance;
  DistanceResult<F2Vec> interleaving;
  bool holds = false;
};

CrosscheckReport module_distance_crosscheck(const PersistentModule& f, const PersistentModule& g, SearchBudget budget = {});

}  // namespace perscert
