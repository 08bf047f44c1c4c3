#pragma once

#include "coeq/cyl_fn.hpp"
#include "coeq/ev_periodic.hpp"
#include "coeq/report.hpp"
#include "coeq/transducer.hpp"

#include <vector>

namespace coeq {

// A continuous orbit equivalence between (X_A, sigma_A) and (X_B, sigma_B),
// presented computably: transducers for h and its inverse, plus the four
// nonnegative cylinder functions k1, l1 (on X_A) and k2, l2 (on X_B) from the
// orbit equations
//
//   sigma_B^{k1(x)}( h(sigma_A(x)) ) = sigma_B^{l1(x)}( h(x) )          (A side)
//   sigma_A^{k2(y)}( h^{-1}(sigma_B(y)) ) = sigma_A^{l2(y)}( h^{-1}(y) )  (B side)
//
// make_coe_spec validates shapes and nonnegativity; the orbit equations
// themselves are certified (to a bound) by verify_coe, never assumed.
struct CoeSpec {
  ShiftSpace A;
  ShiftSpace B;
  Transducer h;     // X_A -> X_B
  Transducer hinv;  // X_B -> X_A
  CylFn k1, l1;     // on X_A
  CylFn k2, l2;     // on X_B
};

CoeSpec make_coe_spec(ShiftSpace A, ShiftSpace B, Transducer h,
                      Transducer hinv, CylFn k1, CylFn l1, CylFn k2, CylFn l2);

// The same equivalence read from the B side: swaps A/B, h/hinv, (k1,l1) with
// (k2,l2).  Every A-side check applied to mirror(spec) is the corresponding
// B-side check.
CoeSpec mirror(const CoeSpec& spec);

// c1 = l1 - k1 on X_A (side == 1) or c2 = l2 - k2 on X_B (side == 2).
CylFn cocycle_c(const CoeSpec& spec, int side);

// Certifies on every eventually periodic point of size <= bound: both orbit
// equations (each on its own side) and both round trips h^{-1}(h(x)) == x,
// h(h^{-1}(y)) == y, plus prefix-level agreement of the two sides of each
// orbit equation on all cylinders of length <= bound.  Reports the first
// counterexample point on failure.
CertReport verify_coe(const CoeSpec& spec, int bound);

// Given alternative exponent data (k1', l1') on X_A, first certifies that it
// satisfies the A-side orbit equation on points of size <= bound (throws
// AlternativeCocycleInvalid with the violating point otherwise), then checks
// that l1' - k1' == l1 - k1 as cylinder functions.
CertReport check_cocycle_uniqueness(const CoeSpec& spec, const CylFn& k1_alt,
                                    const CylFn& l1_alt, int bound);

// For points with sigma_A^p(x) == sigma_A^q(z): certifies
//   sigma_B^{ l1^p(x) + k1^q(z) }( h(x) ) == sigma_B^{ k1^p(x) + l1^q(z) }( h(z) ).
// Throws PreconditionFailed unless sigma^p(x) == sigma^q(z).
CertReport check_taileq(const CoeSpec& spec, const EvPeriodicPoint& x,
                        const EvPeriodicPoint& z, long long p, long long q);

// The mixed exponent identity at x (and its mirror at h(x)), for one p >= 0:
//   k2^{l1^p(x)}(h(x)) + l2^{k1^p(x)}(h(sigma^p x)) + p
//     == k2^{k1^p(x)}(h(sigma^p x)) + l2^{l1^p(x)}(h(x)).
CertReport check_klp(const CoeSpec& spec, const EvPeriodicPoint& x,
                     long long p);

// Image of a periodic point under the induced map on two-sided periodic
// points: for x purely periodic with cycle length dividing p, the image is
// the unique two-sided point ybar with
//   sigma_B^{k1^p(x)}( restrict(ybar) ) == sigma_B^{k1^p(x)}( h(x) )
// and period dividing c1^p(x).  Throws NotPeriodic if x has a transient or
// p is not a multiple of its period; OrbitEquationViolated if the spec's data
// is inconsistent at x (cannot happen for certified specs).
TwoSidedPeriodicPt psi_h(const CoeSpec& spec, const EvPeriodicPoint& x,
                         long long p);

// Induced map on orbits: the orbit of psi_h applied to any representative.
// Asserts representative independence (all rotations land on one orbit).
Orbit xi_h(const CoeSpec& spec, const Orbit& gamma);

// For every orbit gamma of X_A with period <= P: xi_{h^{-1}}(xi_h(gamma)) ==
// gamma, and the composition the other way around on X_B orbits.
CertReport check_orbit_bijection(const CoeSpec& spec, int P);

// For every orbit gamma of X_A with period <= P: the image orbit's period
// equals the c1-sum over gamma.
CertReport check_orbit_length(const CoeSpec& spec, int P);

// Positivity of the cocycle along periodic returns, certified on all points
// of size <= bound and valid pairs r > s:
//   l1^r(x) + k1^s(x) > k1^r(x) + l1^s(x)   and   c1^{r-s}(sigma^s x) > 0.
CertReport check_cor_positive(const CoeSpec& spec, int bound);

// Valid (r, s) pairs with sigma^r(x) == sigma^s(x), r > s, for sampling:
// s in {|u|, |u|+1}, r = s + n|v| for n = 1..reps.
std::vector<std::pair<long long, long long>> return_pairs(
    const EvPeriodicPoint& x, int reps);

}  // namespace coeq
