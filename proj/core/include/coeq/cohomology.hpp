#pragma once

#include "coeq/cyl_fn.hpp"
#include "coeq/numeric.hpp"

#include <optional>
#include <string>

namespace coeq {

// Outcome of a decision about the class [f] in the ordered cohomology group
// C(X,Z)/{coboundaries}.  Every verdict ships a witness that can be re-checked
// independently:
//   - Positive / OrderUnit:    no finite witness needed (decision is exact);
//     OrderUnit additionally reports the minimum cycle mean and a cycle
//     attaining it.
//   - NotPositive:             an orbit with negative f-sum.
//   - NotOrderUnit:            a cycle with mean <= 0 (the minimizing one).
//   - Coboundary:              a potential xi with f = xi - xi o sigma,
//     verified exhaustively on words of length depth+1.
//   - NotCoboundary:           an orbit with nonzero f-sum.
enum class ClassVerdict {
  Positive,
  NotPositive,
  OrderUnit,
  NotOrderUnit,
  Coboundary,
  NotCoboundary,
};

const char* class_verdict_name(ClassVerdict v);

struct ClassDecision {
  ClassVerdict verdict;
  // NotPositive / NotCoboundary / NotOrderUnit: the violating orbit and its
  // f-sum over one period.
  std::optional<Orbit> witness_orbit;
  long long witness_sum = 0;
  // OrderUnit / NotOrderUnit: the minimum cycle mean and an achieving cycle.
  std::optional<Rational> cycle_mean;
  std::optional<Orbit> achieving_cycle;
  // Coboundary: the potential.
  std::optional<CylFn> potential;

  std::string to_string() const;
};

// Decides whether [f] >= 0, i.e. every periodic orbit sum of f is
// nonnegative (equivalently all omega_f^{r,s} >= 0).  Exact: Bellman-Ford
// negative-cycle detection on the k-block graph; the NotPositive witness is
// the first negative-sum orbit in (period, lex) order.
ClassDecision is_positive_class(const CylFn& f);

// Minimum over periodic orbits of (orbit sum / period), exact, together with
// an achieving cycle (Karp's minimum cycle mean in rational arithmetic; the
// cycle is recovered from the tight subgraph after subtracting the mean).
struct CycleMean {
  Rational mean;
  Orbit cycle;
};
CycleMean min_cycle_mean(const CylFn& f);

// [f] is an order unit iff the minimum cycle mean is > 0.
ClassDecision is_order_unit(const CylFn& f);

// Decides whether f = xi - xi o sigma for some cylinder function xi.  When
// yes, returns the potential (built from a spanning tree of the k-block
// graph, then verified on every admissible word of length depth+1); when no,
// returns the first orbit in (period, lex) order with nonzero f-sum.
ClassDecision coboundary_witness(const CylFn& f);

// [f] == [g] iff f - g is a coboundary; verdicts/witnesses as above.
ClassDecision classes_equal(const CylFn& f, const CylFn& g);

}  // namespace coeq
