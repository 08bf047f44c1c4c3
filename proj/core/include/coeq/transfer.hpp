#pragma once

#include "coeq/coe.hpp"
#include "coeq/cohomology.hpp"
#include "coeq/cyl_fn.hpp"
#include "coeq/report.hpp"

#include <vector>

namespace coeq {

// Transfer map induced by the equivalence: for f on X_B,
//
//   Psi_h(f)(x) = sum_{i=0}^{l1(x)-1} f(sigma_B^i(h(x)))
//               - sum_{j=0}^{k1(x)-1} f(sigma_B^j(h(sigma_A(x))))
//
// returned as a minimal-depth cylinder table on X_A.  The working depth is
// derived from required_input_depth of h, which over-approximates safely.
CylFn psi_transfer(const CoeSpec& spec, const CylFn& f);

// The inverse transfer Psi_{h^{-1}} for g on X_A (the same formula on the
// mirrored equivalence).
CylFn psi_transfer_inv(const CoeSpec& spec, const CylFn& g);

// f o h as a cylinder function on X_A (f lives on X_B).
CylFn compose_with_h(const CoeSpec& spec, const CylFn& f);
// g o h^{-1} as a cylinder function on X_B.
CylFn compose_with_hinv(const CoeSpec& spec, const CylFn& g);

// Psi_h o Psi_{h^{-1}} == id on indicators of depth <= D on X_A, and the
// composition the other way on X_B (exact table equality).
CertReport check_composition(const CoeSpec& spec, int D);

// Psi_h(f - f o sigma_B) == f o h - f o h o sigma_A for indicators of depth
// <= D on X_B (and mirrored).  Coboundaries transfer to coboundaries.
CertReport check_coboundary_lemma(const CoeSpec& spec, int D);

// Order isomorphism evidence: for each sample function with [f] positive,
// [Psi(f)] is positive (both directions; samples are the indicators of depth
// <= D plus any extras, routed by their space).  Samples whose class is not
// positive are skipped (hypothesis unmet) and counted in the details.  Also
// asserts [c1], [c2] are order units.  If every sample was skipped the
// verdict is Skipped.
CertReport check_order_iso(const CoeSpec& spec, int D,
                           const std::vector<CylFn>& extra_samples = {});

// Transport of omega under the transfer map: for f on X_B and x with
// sigma^r(x) == sigma^s(x), r > s, setting q = r - s,
//   z  = sigma_B^{ l1^s(x) + k1^s(x) }( h(x) ),
//   r' = l1^q(sigma^s x),   s' = k1^q(sigma^s x),
// z satisfies sigma^{r'}(z) == sigma^{s'}(z) and
//   omega_{Psi_h(f)}(x; r, s) == omega_f(z; r', s').
// Certified over all points of size <= bound, their return pairs, and
// indicator functions of depth <= D on X_B.
CertReport check_omega_transport(const CoeSpec& spec, int bound, int D);

// Agreement of the six positivity criteria for the cocycle class [c1]:
//  (1) Psi_h maps positive indicator classes to positive classes,
//  (2) [c1] is positive,
//  (3) omega_{c1}(x; r, s) > 0 on sampled returns,
//  (4) c1^{r-s}(sigma^s x) > 0 on sampled returns,
//  (5) l1^r(x) + k1^s(x) > k1^r(x) + l1^s(x) on sampled returns,
//  (6) r' > s' in the omega-transport data on sampled returns.
// The check passes iff all six booleans coincide.
CertReport check_sixeq(const CoeSpec& spec, int bound, int D);

}  // namespace coeq
