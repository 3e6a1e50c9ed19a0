#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "perscert/interleaving.hpp"

namespace perscert {

struct SearchBudget {
  // Candidate maps tried, summed over the whole backtracking search.
  std::size_t max_nodes = 2'000'000;
  // Largest admissible hom-set between two component objects.
  std::size_t max_enum = 1u << 16;
};

// Exhaustive backtracking over component tables of f : X ->_eps Y and
// g : Y ->_delta X. Components are assigned in order of their grade, and
// every naturality square and triangle identity is checked as soon as the
// last component it mentions is assigned. With `fixed_f` only g is searched.
template <Enumerable C>
class InterleavingSearch {
 public:
  using Object = typename C::Object;
  using Map = typename C::Map;

  InterleavingSearch(const PersistentObject<C>& x, const PersistentObject<C>& y, const Grade& eps,
                     const Grade& delta, SearchBudget budget, const DeltaMorphism<C>* fixed_f = nullptr)
      : x_(x),
        y_(y),
        eps_(eps),
        delta_(delta),
        budget_(budget),
        fixed_f_(fixed_f),
        gf_(DeltaMorphism<C>::evaluation_grid(x, y, eps)),
        gg_(DeltaMorphism<C>::evaluation_grid(y, x, delta)) {
    if (fixed_f && (!(fixed_f->source() == x) || !(fixed_f->target() == y) || fixed_f->shift() != eps))
      throw MismatchError("fixed morphism does not match the search problem");
    setup();
  }

  std::optional<InterleavingCert<C>> run() {
    if (!feasible_) return std::nullopt;
    for (const auto& c : upfront_)
      if (!holds(c)) return std::nullopt;
    if (!assign(0)) return std::nullopt;
    std::vector<Map> fc, gc;
    for (std::size_t p = 0; p < gf_.size(); ++p) fc.push_back(*value_[p]);
    for (std::size_t q = 0; q < gg_.size(); ++q) gc.push_back(*value_[gf_.size() + q]);
    return InterleavingCert<C>{DeltaMorphism<C>(x_, y_, eps_, std::move(fc)),
                               DeltaMorphism<C>(y_, x_, delta_, std::move(gc))};
  }

  std::size_t nodes() const { return nodes_; }

 private:
  // lhs(a, b) == rhs, where lhs is either outer o inner (two slots) or the
  // naturality square outer o phi_in == phi_out o inner.
  struct Check {
    bool naturality;
    std::size_t inner;
    std::size_t outer;
    Map phi_in;   // naturality: source structure map
    Map phi_out;  // naturality: target structure map; triangle: expected composite
  };
  struct Var {
    std::size_t slot;
    std::vector<Map> candidates;
  };

  std::size_t f_slot(std::size_t p) const { return p; }
  std::size_t g_slot(std::size_t q) const { return gf_.size() + q; }

  std::size_t constant(Map m) {
    constants_.push_back(std::move(m));
    value_.push_back(&constants_.back());
    order_.push_back(-1);
    return value_.size() - 1;
  }

  // Slot holding f_r (or g_r): a grid variable, or a constant initial map
  // when r is below the evaluation grid.
  std::size_t f_at(const Grade& r) {
    auto p = gf_.locate(r);
    return p ? f_slot(*p) : constant(C::initial_map(y_.evaluate(r + eps_)));
  }
  std::size_t g_at(const Grade& r) {
    auto q = gg_.locate(r);
    return q ? g_slot(*q) : constant(C::initial_map(x_.evaluate(r + delta_)));
  }

  void add_check(Check c) {
    const long t = std::max(order_[c.inner], order_[c.outer]);
    if (t < 0)
      upfront_.push_back(std::move(c));
    else
      by_trigger_[static_cast<std::size_t>(t)].push_back(std::move(c));
  }

  bool holds(const Check& c) const {
    if (c.naturality) return C::compose(*value_[c.outer], c.phi_in) == C::compose(c.phi_out, *value_[c.inner]);
    return C::compose(*value_[c.outer], *value_[c.inner]) == c.phi_out;
  }

  void naturality_checks(const Grid& grid, std::size_t base, const PersistentObject<C>& src,
                         const PersistentObject<C>& tgt, const Grade& shift) {
    for (std::size_t p = 0; p < grid.size(); ++p)
      for (std::size_t a = 0; a < grid.arity(); ++a) {
        if (!grid.has_successor(p, a)) continue;
        const std::size_t q = grid.successor(p, a);
        const Grade rp = grid.point(p), rq = grid.point(q);
        add_check({true, base + p, base + q, src.structure_map(rp, rq), tgt.structure_map(rp + shift, rq + shift)});
      }
  }

  void setup() {
    const std::size_t nf = gf_.size(), ng = gg_.size();
    value_.assign(nf + ng, nullptr);
    order_.assign(nf + ng, -1);

    struct Pending {
      Grade point;
      bool is_g;
      std::size_t slot;
      Object src, tgt;
    };
    std::vector<Pending> pending;
    if (fixed_f_) {
      for (std::size_t p = 0; p < nf; ++p) value_[p] = &fixed_f_->components()[p];
    } else {
      for (std::size_t p = 0; p < nf; ++p) {
        const Grade r = gf_.point(p);
        pending.push_back({r, false, f_slot(p), x_.evaluate(r), y_.evaluate(r + eps_)});
      }
    }
    for (std::size_t q = 0; q < ng; ++q) {
      const Grade r = gg_.point(q);
      pending.push_back({r, true, g_slot(q), y_.evaluate(r), x_.evaluate(r + delta_)});
    }
    std::stable_sort(pending.begin(), pending.end(), [](const Pending& a, const Pending& b) {
      return a.point != b.point ? a.point < b.point : (!a.is_g && b.is_g);
    });
    for (auto& pd : pending) {
      Var v{pd.slot, C::all_maps(pd.src, pd.tgt, budget_.max_enum)};
      if (v.candidates.empty()) feasible_ = false;
      order_[pd.slot] = static_cast<long>(vars_.size());
      vars_.push_back(std::move(v));
    }
    by_trigger_.assign(vars_.size(), {});
    if (!feasible_) return;

    if (fixed_f_) {
      if (auto v = fixed_f_->naturality_violation()) throw PreconditionError("fixed morphism is not natural: " + *v);
    } else {
      naturality_checks(gf_, 0, x_, y_, eps_);
    }
    naturality_checks(gg_, nf, y_, x_, delta_);

    const Grade total = eps_ + delta_;
    const Grid first = triangle_grid(x_.grid(), y_.grid(), eps_, total);
    for (std::size_t p = 0; p < first.size(); ++p) {
      const Grade r = first.point(p);
      if (x_.evaluate(r) == C::initial()) continue;
      add_check({false, f_at(r), g_at(r + eps_), Map{}, x_.structure_map(r, r + total)});
    }
    const Grid second = triangle_grid(y_.grid(), x_.grid(), delta_, total);
    for (std::size_t p = 0; p < second.size(); ++p) {
      const Grade r = second.point(p);
      if (y_.evaluate(r) == C::initial()) continue;
      add_check({false, g_at(r), f_at(r + delta_), Map{}, y_.structure_map(r, r + total)});
    }
  }

  bool assign(std::size_t k) {
    if (k == vars_.size()) return true;
    const Var& v = vars_[k];
    for (const auto& cand : v.candidates) {
      if (++nodes_ > budget_.max_nodes) throw BudgetExceeded("interleaving search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
      value_[v.slot] = &cand;
      bool ok = true;
      for (const auto& c : by_trigger_[k])
        if (!holds(c)) {
          ok = false;
          break;
        }
      if (ok && assign(k + 1)) return true;
    }
    value_[v.slot] = nullptr;
    return false;
  }

  const PersistentObject<C>& x_;
  const PersistentObject<C>& y_;
  Grade eps_, delta_;
  SearchBudget budget_;
  const DeltaMorphism<C>* fixed_f_;
  Grid gf_, gg_;
  std::vector<const Map*> value_;
  std::vector<long> order_;
  std::deque<Map> constants_;
  std::vector<Var> vars_;
  std::vector<std::vector<Check>> by_trigger_;
  std::vector<Check> upfront_;
  bool feasible_ = true;
  std::size_t nodes_ = 0;
};

template <Enumerable C>
std::optional<InterleavingCert<C>> find_interleaving(const PersistentObject<C>& x, const PersistentObject<C>& y,
                                                     const Grade& eps, const Grade& delta, SearchBudget budget = {}) {
  return InterleavingSearch<C>(x, y, eps, delta, budget).run();
}

// A partner g : Y ->_delta X making (f, g) an interleaving, if one exists.
template <Enumerable C>
std::optional<DeltaMorphism<C>> find_partner(const DeltaMorphism<C>& f, const Grade& delta, SearchBudget budget = {}) {
  auto cert = InterleavingSearch<C>(f.source(), f.target(), f.shift(), delta, budget, &f).run();
  if (!cert) return std::nullopt;
  return cert->g;
}

// {0} together with b - a and (b - a)/2 for all breakpoints a <= b of X and Y.
inline std::vector<Rational> distance_candidates(const Grid& x, const Grid& y) {
  std::set<Rational> pts(x.axis(0).begin(), x.axis(0).end());
  pts.insert(y.axis(0).begin(), y.axis(0).end());
  std::set<Rational> out{Rational(0)};
  for (auto a = pts.begin(); a != pts.end(); ++a)
    for (auto b = a; b != pts.end(); ++b) {
      out.insert(*b - *a);
      out.insert((*b - *a) / Rational(2));
    }
  return {out.begin(), out.end()};
}

template <Category C>
struct DistanceResult {
  std::optional<Rational> value;  // nullopt: infinite
  // False when no interleaving exists at `value` itself but one exists at
  // every larger shift; the certificate is then at `certified_shift`.
  bool attained = true;
  std::optional<InterleavingCert<C>> certificate;
  std::optional<Rational> certified_shift;
  std::vector<Rational> candidates;
  std::string reason;
};

// Least delta admitting a (delta, delta)-interleaving of one-parameter X, Y.
//
// Between consecutive candidates the relative order of all breakpoints of
// X, Y^delta, X^{2 delta} and Y^{2 delta} is constant, so interleavability
// is constant on each open gap. Probing every candidate, one point inside
// every gap and one point beyond the last candidate therefore decides the
// infimum exactly. A probe that runs out of budget is skipped; if an earlier
// probe was skipped, BudgetExceeded is thrown carrying the best bound found.
template <Enumerable C>
DistanceResult<C> interleaving_distance_search(const PersistentObject<C>& x, const PersistentObject<C>& y,
                                               SearchBudget budget = {}) {
  if (x.arity() != 1 || y.arity() != 1)
    throw UnsupportedError("interleaving distance search is implemented for one-parameter objects only");
  DistanceResult<C> out;
  out.candidates = distance_candidates(x.grid(), y.grid());
  const auto& d = out.candidates;

  struct Probe {
    Rational shift;
    std::size_t candidate;  // index into d
    bool in_gap;            // strictly between d[candidate] and the next candidate
  };
  std::vector<Probe> probes;
  for (std::size_t i = 0; i < d.size(); ++i) {
    probes.push_back({d[i], i, false});
    const Rational next = i + 1 < d.size() ? d[i + 1] : d[i] + Rational(2);
    probes.push_back({(d[i] + next) / Rational(2), i, true});
  }

  bool skipped = false;
  for (const auto& pr : probes) {
    std::optional<InterleavingCert<C>> cert;
    try {
      cert = find_interleaving(x, y, Grade{pr.shift}, Grade{pr.shift}, budget);
    } catch (const BudgetExceeded&) {
      skipped = true;
      continue;
    }
    if (!cert) continue;
    const Rational value = d[pr.candidate];
    if (skipped)
      throw BudgetExceeded("interleaving distance search skipped smaller candidates; " + pr.shift.str() +
                               " is certified",
                           pr.shift);
    out.value = value;
    out.attained = !pr.in_gap;
    out.certificate = std::move(cert);
    out.certified_shift = pr.shift;
    out.reason = pr.in_gap ? "interleaved at every shift above " + value.str() + " but not at it"
                           : "least candidate admitting an interleaving";
    return out;
  }
  if (skipped) throw BudgetExceeded("interleaving distance search could not decide any candidate");
  out.reason = "no interleaving up to " + probes.back().shift.str() +
               "; past the last candidate the breakpoint order no longer changes";
  return out;
}

}  // namespace perscert
