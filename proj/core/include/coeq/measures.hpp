#pragma once

#include "coeq/coe.hpp"
#include "coeq/cyl_fn.hpp"
#include "coeq/numeric.hpp"
#include "coeq/report.hpp"
#include "coeq/transfer.hpp"

#include <optional>
#include <vector>

namespace coeq {

// Shift-invariant Markov measure on X_S: rational stochastic matrix P
// supported inside the transition matrix, with stationary row vector pi.
// mu(U_w) = pi[w_1] * prod P[w_i][w_{i+1}].
struct MarkovMeasure {
  ShiftSpace space;
  std::vector<std::vector<Rational>> P;
  std::vector<Rational> pi;

  Rational cylinder(const Word& w) const;  // mu(U_w); empty word -> 1
};

// Validates P (stochastic, support inside entries; errors NotStochastic /
// IncompatibleSupport).  If pi is absent it is solved exactly from pi P = pi,
// sum pi = 1 — this requires the support graph of P to be irreducible so the
// solution is unique (NotIrreducible otherwise).  A supplied pi is verified
// exactly (stationary, nonnegative, sums to 1).
MarkovMeasure make_markov_measure(
    const ShiftSpace& S, std::vector<std::vector<Rational>> P,
    std::optional<std::vector<Rational>> pi = std::nullopt);

// Measure of maximal entropy, via floating-point power iteration for the
// Perron eigendata (tolerance tol, NoConvergence after max_iters), then
// rationalization of the resulting stochastic matrix and exact
// re-validation.  The only floating-point entry point in the library.
MarkovMeasure parry_measure(const ShiftSpace& S, double tol = 1e-12,
                            int max_iters = 100000);

// integral of f: sum over w in B_depth of mu(U_w) f(w).
Rational eval_measure(const MarkovMeasure& mu, const CylFn& f);

// Pushforward of mu (on X_A) through the equivalence: nu(f) = mu(Psi_h(f))
// for f on X_B.  nu is sigma_B-invariant but in general not a probability
// measure; its total mass is mu(c1).
struct PushedMeasure {
  CoeSpec spec;
  MarkovMeasure base;
};

PushedMeasure pushforward(const CoeSpec& spec, const MarkovMeasure& mu);
Rational eval_pushed(const PushedMeasure& nu, const CylFn& f);

// nu(chi_w o sigma_B) == nu(chi_w) for every admissible w with |w| <= D.
CertReport check_invariance(const PushedMeasure& nu, int D);
// nu(chi_w) >= 0 for every admissible w with |w| <= D.
CertReport check_positivity(const PushedMeasure& nu, int D);
// Decides [c1] == [1] exactly; when equal asserts nu(1) == 1, otherwise
// asserts nu(1) == mu(c1) and reports the mass.
CertReport check_normalization(const PushedMeasure& nu);

}  // namespace coeq
