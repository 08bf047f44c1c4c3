#pragma once

#include "coeq/coe.hpp"
#include "coeq/cohomology.hpp"
#include "coeq/numeric.hpp"
#include "coeq/report.hpp"
#include "coeq/shift_space.hpp"

#include <string>
#include <vector>

namespace coeq {

// Integer polynomial, coefficient of t^i at coeffs[i], trailing zeros
// trimmed (zero polynomial has empty coeffs).
struct IntPolynomial {
  std::vector<BigInt> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  BigInt at(const BigInt& t) const;  // evaluation
  std::string to_string() const;     // e.g. "1 - t - t^2"
  bool operator==(const IntPolynomial& o) const { return coeffs == o.coeffs; }
};

// Truncated formal power series with exact rational coefficients:
// coeffs[0..truncation], arithmetic mod t^{truncation+1}.
class FormalSeries {
 public:
  FormalSeries(int truncation, std::vector<Rational> coeffs);
  static FormalSeries zero(int truncation);
  static FormalSeries one(int truncation);

  int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](int i) const { return coeffs_[i]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool operator==(const FormalSeries& o) const { return coeffs_ == o.coeffs_; }

  // True iff every coefficient is an integer.
  bool integral() const;

  std::string to_string() const;

 private:
  std::vector<Rational> coeffs_;
};

FormalSeries add(const FormalSeries& a, const FormalSeries& b);
FormalSeries sub(const FormalSeries& a, const FormalSeries& b);
FormalSeries mul(const FormalSeries& a, const FormalSeries& b);
// Multiplicative inverse; requires nonzero constant term (PreconditionFailed).
FormalSeries invert(const FormalSeries& a);
// exp of a series with zero constant term (PreconditionFailed otherwise).
FormalSeries exp_series(const FormalSeries& a);
// t * d/dt log(a); requires nonzero constant term.  (t d/dt does not lose a
// degree, so the result is sound at the same truncation.)
FormalSeries log_derivative_t(const FormalSeries& a);

// det(I - t A) as an integer polynomial (Faddeev-LeVerrier on the exact
// characteristic polynomial, reversed).
IntPolynomial char_reciprocal(const ShiftSpace& S);

// Zeta function of the shift, 1 / det(I - tA), truncated at degree L.
// Coefficients are integers (asserted).
FormalSeries zeta_series(const ShiftSpace& S, int L);

// The same series via exp( sum_n per_count(n)/n t^n ) — an independent route
// used as an internal cross-check; integrality asserted.
FormalSeries zeta_exp_trace(const ShiftSpace& S, int L);

// Weighted zeta: product over periodic orbits gamma of
// (1 - t^{sum of c over gamma})^{-1}, truncated at degree L.  Requires [c] to
// be an order unit (throws NotOrderUnit with the violating cycle otherwise);
// the enumeration period bound floor(L / min cycle mean) is exact, so
// truncation is sound.  extra_periods widens the enumeration bound beyond
// P_max for soundness tests (orbits found there cannot contribute below
// degree L if the bound is right; the recompute must agree).
FormalSeries weighted_zeta(const CylFn& c, int L, int extra_periods = 0);

// Certifies zeta_A == weighted zeta of c2 and zeta_B == weighted zeta of c1,
// both to degree L (the two cocycles must be order units; gated by
// is_order_unit and reported, not assumed).
CertReport check_zeta_identity(const CoeSpec& spec, int L);

// det(id - A) == det(id - B), both values reported.
CertReport det_invariant(const CoeSpec& spec);

}  // namespace coeq
