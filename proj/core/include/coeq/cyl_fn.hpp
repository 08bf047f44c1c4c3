#pragma once

#include "coeq/ev_periodic.hpp"
#include "coeq/shift_space.hpp"

#include <cstdint>
#include <map>
#include <string>

namespace coeq {

// Integer-valued continuous function on a shift space, given by a depth-k
// cylinder table: the value at x depends only on x_[1,k].  The table carries
// exactly the admissible words of length k.  Depth 0 is a constant (single
// empty-word entry).  Immutable; all operations return new functions.
class CylFn {
 public:
  // Table must be defined on exactly B_depth(S); values are int64.
  CylFn(ShiftSpace space, int depth, std::map<Word, long long> table);

  // Constant c as a depth-0 function.
  static CylFn constant(const ShiftSpace& S, long long c);
  // Indicator of the cylinder U_w (depth |w|); w must be admissible and
  // nonempty.
  static CylFn indicator(const ShiftSpace& S, const Word& w);

  const ShiftSpace& space() const { return space_; }
  int depth() const { return depth_; }
  const std::map<Word, long long>& table() const { return table_; }

  std::string to_string() const;

 private:
  ShiftSpace space_;
  int depth_;
  std::map<Word, long long> table_;
};

// Value at an eventually periodic point (SpaceMismatch if spaces differ).
long long eval(const CylFn& f, const EvPeriodicPoint& x);

// Value on the cylinder of w, which must be admissible with |w| >= depth
// (WordTooShort otherwise).
long long eval_word(const CylFn& f, const Word& w);

// Same function presented at depth d >= depth().
CylFn extend(const CylFn& f, int d);

// Pointwise operations; binary ones extend both operands to the larger depth
// and require identical spaces.
CylFn add(const CylFn& f, const CylFn& g);
CylFn sub(const CylFn& f, const CylFn& g);
CylFn negate(const CylFn& f);
CylFn scale(long long c, const CylFn& f);
// f o sigma, at depth depth()+1.
CylFn compose_shift(const CylFn& f);

// True iff f and g agree as functions (same space; tables equal after
// extending to a common depth).
bool equal_as_functions(const CylFn& f, const CylFn& g);

// Least depth d <= depth() at which the function factors through prefixes;
// returns the equivalent minimal-depth presentation.
CylFn compressed(const CylFn& f);

// Birkhoff sum f + f o sigma + ... + f o sigma^{m-1} as a table of depth
// depth() + m - 1 (m >= 1); m == 0 gives the zero constant.
CylFn birkhoff(const CylFn& f, int m);

// Birkhoff sum evaluated directly at a point (no table construction).
long long birkhoff_at(const CylFn& f, const EvPeriodicPoint& x, long long m);

// omega_f^{r,s}(x) = f^r(x) - f^s(x) for a point with sigma^r(x) ==
// sigma^s(x), r > s >= 0.  Throws NotEventuallyPeriodicAt when the shifts
// disagree, PreconditionFailed when r <= s.
long long omega(const CylFn& f, const EvPeriodicPoint& x, long long r,
                long long s);

// Sum of f over one period of the orbit (rotation-invariant).
long long orbit_sum(const CylFn& f, const Orbit& gamma);

}  // namespace coeq
