#pragma once

#include "coeq/shift_space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coeq {

// Eventually periodic point u·v^inf in normal form: v is primitive, and the
// transient is minimal, i.e. u is empty or last(u) != last(v).  Normal forms
// are unique, so equality of points is componentwise equality.  Construct via
// make_ev_periodic (which normalizes and checks admissibility).
struct EvPeriodicPoint {
  ShiftSpace space;
  Word transient;  // u, possibly empty
  Word cycle;      // v, nonempty and primitive

  bool purely_periodic() const { return transient.empty(); }
  bool same_point(const EvPeriodicPoint& other) const {
    return space == other.space && transient == other.transient &&
           cycle == other.cycle;
  }
  std::string to_string() const;
};

// Normalizes (u, v) over S: reduces v to its primitive root, then absorbs the
// tail of u into the cycle while last(u) == last(v).  Throws Inadmissible if
// the sequence u·v^inf is not admissible in S, PreconditionFailed if v is
// empty or symbols are out of range.
EvPeriodicPoint make_ev_periodic(const ShiftSpace& S, Word u, Word v);

// sigma^m, in normal form.  m >= 0.
EvPeriodicPoint shift_evp(const EvPeriodicPoint& x, long long m);

// x_i, 1-based.
int symbol_at(const EvPeriodicPoint& x, long long i);

// First k symbols of x.
Word prefix_of(const EvPeriodicPoint& x, int k);

// w·x, normalized (throws Inadmissible if the join is not allowed).
EvPeriodicPoint prepend(const Word& w, const EvPeriodicPoint& x);

// All eventually periodic points with |u| + |v| <= bound, in normal form,
// ordered by (|u|+|v|, |v|, v, u).  Distinct rotations of a cycle are
// distinct points and are all listed.
std::vector<EvPeriodicPoint> eventually_periodic_points(const ShiftSpace& S,
                                                        int bound);

// Attracting-neighbourhood witness for a point with sigma^r(x) == sigma^s(x),
// r > s >= 0: with nu = x_[1,s], xi = x_[s+1,r], the words
//
//     nu_bar = nu·xi^L      and      mu_bar = nu·xi^{L+1}
//
// (L >= 1 minimal with |nu_bar| >= W_depth) satisfy: substituting mu_bar for
// the prefix nu_bar maps the cylinder of nu_bar into itself, fixes x, and
// intertwines sigma^r with sigma^s.  Throws NotEventuallyPeriodicAt if
// sigma^r(x) != sigma^s(x) or r <= s.
struct AttractingWitness {
  Word nu_bar;
  Word mu_bar;
  long long L;
};

AttractingWitness attracting_witness(const EvPeriodicPoint& x, long long r,
                                     long long s, int W_depth);

// Two-sided periodic point, encoded as an orbit plus a phase in [0, period):
// the point is sigma_bar^phase of the two-sided extension of the canonical
// cycle, so its coordinate-1..  one-sided restriction is
// rotate_left(orbit.cycle, phase)^inf.
struct TwoSidedPeriodicPt {
  Orbit orbit;
  int phase = 0;

  int period() const { return orbit.period(); }
  bool operator==(const TwoSidedPeriodicPt& o) const {
    return orbit == o.orbit && phase == o.phase;
  }
  bool operator!=(const TwoSidedPeriodicPt& o) const { return !(*this == o); }
  std::string to_string() const;
};

// sigma_bar^m (any integer m, two-sided shifts are invertible).
TwoSidedPeriodicPt shift_two_sided(const TwoSidedPeriodicPt& x, long long m);

// One-sided restriction (coordinates 1, 2, ...) as a purely periodic point.
EvPeriodicPoint restrict_two_sided(const ShiftSpace& S,
                                   const TwoSidedPeriodicPt& x);

// The unique two-sided periodic point restricting to the purely periodic
// one-sided point x (throws NotPeriodic if x has a transient).
TwoSidedPeriodicPt extend_two_sided(const EvPeriodicPoint& x);

}  // namespace coeq
