#include "coeq/zeta.hpp"

#include "coeq/cyl_fn.hpp"
#include "coeq/error.hpp"

#include <algorithm>
#include <sstream>
#include <utility>
#include <vector>

namespace coeq {

namespace {

// Renders one monomial c * t^i (c nonzero) with a leading sign, appended to
// the stream.  `first` controls whether the sign is written as a prefix
// ("-c t^i") or an infix (" - c t^i").
void append_term(std::ostringstream& out, const Rational& c, int i,
                 bool first) {
  const bool negative = c < 0;
  Rational mag = negative ? Rational(-c) : c;
  if (first) {
    if (negative) out << "-";
  } else {
    out << (negative ? " - " : " + ");
  }
  const bool unit = (mag == 1);
  if (i == 0) {
    out << to_string(mag);
    return;
  }
  if (!unit) out << to_string(mag) << " ";
  if (i == 1) {
    out << "t";
  } else {
    out << "t^" << i;
  }
}

std::string render_poly(const std::vector<Rational>& coeffs) {
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < static_cast<int>(coeffs.size()); ++i) {
    if (coeffs[i] == 0) continue;
    append_term(out, coeffs[i], i, first);
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace

BigInt IntPolynomial::at(const BigInt& t) const {
  BigInt value = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    value = value * t + *it;
  }
  return value;
}

std::string IntPolynomial::to_string() const {
  std::vector<Rational> rs(coeffs.begin(), coeffs.end());
  return render_poly(rs);
}

FormalSeries::FormalSeries(int truncation, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (truncation < 0 ||
      coeffs_.size() != static_cast<size_t>(truncation) + 1) {
    raise(ErrorCode::PreconditionFailed,
          "series needs exactly truncation + 1 coefficients");
  }
}

FormalSeries FormalSeries::zero(int truncation) {
  return FormalSeries(truncation,
                      std::vector<Rational>(truncation + 1, Rational(0)));
}

FormalSeries FormalSeries::one(int truncation) {
  std::vector<Rational> c(truncation + 1, Rational(0));
  c[0] = 1;
  return FormalSeries(truncation, std::move(c));
}

bool FormalSeries::integral() const {
  for (const Rational& c : coeffs_) {
    if (boost::multiprecision::denominator(c) != 1) return false;
  }
  return true;
}

std::string FormalSeries::to_string() const {
  std::ostringstream out;
  out << render_poly(coeffs_) << " + O(t^" << (truncation() + 1) << ")";
  return out.str();
}

namespace {

void require_same_truncation(const FormalSeries& a, const FormalSeries& b) {
  if (a.truncation() != b.truncation()) {
    raise(ErrorCode::PreconditionFailed,
          "series truncations differ: " + std::to_string(a.truncation()) +
              " vs " + std::to_string(b.truncation()));
  }
}

}  // namespace

FormalSeries add(const FormalSeries& a, const FormalSeries& b) {
  require_same_truncation(a, b);
  std::vector<Rational> c(a.coeffs());
  for (int i = 0; i <= b.truncation(); ++i) c[i] += b[i];
  return FormalSeries(a.truncation(), std::move(c));
}

FormalSeries sub(const FormalSeries& a, const FormalSeries& b) {
  require_same_truncation(a, b);
  std::vector<Rational> c(a.coeffs());
  for (int i = 0; i <= b.truncation(); ++i) c[i] -= b[i];
  return FormalSeries(a.truncation(), std::move(c));
}

FormalSeries mul(const FormalSeries& a, const FormalSeries& b) {
  require_same_truncation(a, b);
  const int L = a.truncation();
  std::vector<Rational> c(L + 1, Rational(0));
  for (int i = 0; i <= L; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; i + j <= L; ++j) {
      if (b[j] == 0) continue;
      c[i + j] += a[i] * b[j];
    }
  }
  return FormalSeries(L, std::move(c));
}

FormalSeries invert(const FormalSeries& a) {
  if (a[0] == 0) {
    raise(ErrorCode::PreconditionFailed,
          "cannot invert a series with zero constant term");
  }
  const int L = a.truncation();
  std::vector<Rational> b(L + 1, Rational(0));
  b[0] = Rational(1) / a[0];
  for (int k = 1; k <= L; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += a[j] * b[k - j];
    b[k] = -s / a[0];
  }
  return FormalSeries(L, std::move(b));
}

FormalSeries exp_series(const FormalSeries& a) {
  if (a[0] != 0) {
    raise(ErrorCode::PreconditionFailed,
          "exp needs a series with zero constant term");
  }
  const int L = a.truncation();
  // e' = a' e termwise: k e_k = sum_{j=1..k} j a_j e_{k-j}.
  std::vector<Rational> e(L + 1, Rational(0));
  e[0] = 1;
  for (int k = 1; k <= L; ++k) {
    Rational s = 0;
    for (int j = 1; j <= k; ++j) s += Rational(j) * a[j] * e[k - j];
    e[k] = s / k;
  }
  return FormalSeries(L, std::move(e));
}

FormalSeries log_derivative_t(const FormalSeries& a) {
  if (a[0] == 0) {
    raise(ErrorCode::PreconditionFailed,
          "log derivative needs a nonzero constant term");
  }
  const int L = a.truncation();
  std::vector<Rational> ta(L + 1, Rational(0));
  for (int i = 1; i <= L; ++i) ta[i] = Rational(i) * a[i];
  return mul(FormalSeries(L, std::move(ta)), invert(a));
}

IntPolynomial char_reciprocal(const ShiftSpace& S) {
  const int n = S.alphabet_size();
  // Faddeev-LeVerrier: exact integer characteristic polynomial
  // det(lambda I - A) = lambda^n + c[n-1] lambda^{n-1} + ... + c[0].
  using Matrix = std::vector<std::vector<BigInt>>;
  Matrix A(n, std::vector<BigInt>(n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) A[i][j] = S.entry(i + 1, j + 1);
  }
  Matrix M(n, std::vector<BigInt>(n, BigInt(0)));  // M_0 = 0
  std::vector<BigInt> c(n + 1);
  c[n] = 1;
  for (int k = 1; k <= n; ++k) {
    // M_k = A (M_{k-1} + c_{n-k+1} I)
    Matrix T = M;
    for (int i = 0; i < n; ++i) T[i][i] += c[n - k + 1];
    Matrix next(n, std::vector<BigInt>(n, BigInt(0)));
    for (int i = 0; i < n; ++i) {
      for (int l = 0; l < n; ++l) {
        if (A[i][l] == 0) continue;
        for (int j = 0; j < n; ++j) next[i][j] += A[i][l] * T[l][j];
      }
    }
    M = std::move(next);
    BigInt trace = 0;
    for (int i = 0; i < n; ++i) trace += M[i][i];
    c[n - k] = -trace / k;  // division is exact
  }
  // det(I - tA) = t^n det((1/t) I - A) = sum_k c[n-k] t^k.
  std::vector<BigInt> rev(n + 1);
  for (int k = 0; k <= n; ++k) rev[k] = c[n - k];
  while (!rev.empty() && rev.back() == 0) rev.pop_back();
  return IntPolynomial{std::move(rev)};
}

FormalSeries zeta_series(const ShiftSpace& S, int L) {
  if (L < 0) raise(ErrorCode::PreconditionFailed, "truncation must be >= 0");
  const IntPolynomial p = char_reciprocal(S);
  // Integer recurrence for 1/p mod t^{L+1}; p has constant term 1.
  std::vector<BigInt> b(L + 1, BigInt(0));
  b[0] = 1;
  for (int k = 1; k <= L; ++k) {
    BigInt s = 0;
    const int top = std::min(k, p.degree());
    for (int j = 1; j <= top; ++j) s += p.coeffs[j] * b[k - j];
    b[k] = -s;
  }
  std::vector<Rational> coeffs(b.begin(), b.end());
  return FormalSeries(L, std::move(coeffs));
}

FormalSeries zeta_exp_trace(const ShiftSpace& S, int L) {
  if (L < 0) raise(ErrorCode::PreconditionFailed, "truncation must be >= 0");
  std::vector<Rational> traces(L + 1, Rational(0));
  for (int m = 1; m <= L; ++m) {
    traces[m] = Rational(per_count(S, m)) / m;
  }
  FormalSeries z = exp_series(FormalSeries(L, std::move(traces)));
  if (!z.integral()) {
    raise(ErrorCode::PreconditionFailed,
          "exp-trace zeta produced non-integer coefficients: " +
              z.to_string());
  }
  return z;
}

FormalSeries weighted_zeta(const CylFn& c, int L, int extra_periods) {
  if (L < 0) raise(ErrorCode::PreconditionFailed, "truncation must be >= 0");
  if (extra_periods < 0) {
    raise(ErrorCode::PreconditionFailed, "extra_periods must be >= 0");
  }
  const ClassDecision unit = is_order_unit(c);
  if (unit.verdict != ClassVerdict::OrderUnit) {
    std::string cyc = unit.witness_orbit
                          ? unit.witness_orbit->to_string()
                          : std::string("(unknown)");
    raise(ErrorCode::NotOrderUnit,
          "weighted zeta needs an order-unit weight; cycle " + cyc +
              " has sum " + std::to_string(unit.witness_sum));
  }
  // Orbits of period > P_max have weight sum > L, hence cannot touch
  // coefficients 0..L: sum over gamma >= period * min cycle mean.
  const Rational lambda = *unit.cycle_mean;
  BigInt pmax_big = floor_div(Rational(L) / lambda);
  long long P_max = pmax_big.convert_to<long long>() + extra_periods;
  if (P_max < 0) P_max = 0;

  std::vector<BigInt> coef(L + 1, BigInt(0));
  coef[0] = 1;
  for (const Orbit& gamma : periodic_orbits_up_to(
           c.space(), static_cast<int>(P_max))) {
    const long long w = orbit_sum(c, gamma);
    if (w <= 0) {
      raise(ErrorCode::NotOrderUnit,
            "weight sum " + std::to_string(w) + " on cycle " +
                gamma.to_string() + " is not positive");
    }
    if (w > L) continue;
    // Multiply by (1 - t^w)^{-1} == sum_m t^{mw}: in place, ascending.
    for (int k = static_cast<int>(w); k <= L; ++k) {
      coef[k] += coef[k - w];
    }
  }
  std::vector<Rational> coeffs(coef.begin(), coef.end());
  return FormalSeries(L, std::move(coeffs));
}

CertReport check_zeta_identity(const CoeSpec& spec, int L) {
  const std::string name = "weighted_zeta_identity";
  const std::string statement =
      "the zeta function of each shift equals the zeta function of the other "
      "weighted by the transported cocycle";
  const CylFn c1 = cocycle_c(spec, 1);
  const CylFn c2 = cocycle_c(spec, 2);
  for (int side = 1; side <= 2; ++side) {
    const ClassDecision unit = is_order_unit(side == 1 ? c1 : c2);
    if (unit.verdict != ClassVerdict::OrderUnit) {
      return make_fail(name, statement, L,
                       unit.witness_orbit ? unit.witness_orbit->to_string()
                                          : std::string(),
                       "cocycle c" + std::to_string(side) +
                           " is not an order unit");
    }
  }
  const FormalSeries zeta_A = zeta_series(spec.A, L);
  const FormalSeries zeta_B = zeta_series(spec.B, L);
  const FormalSeries wz_c1 = weighted_zeta(c1, L);
  const FormalSeries wz_c2 = weighted_zeta(c2, L);
  if (!(wz_c1 == zeta_B)) {
    return make_fail(name, statement, L, wz_c1.to_string(),
                     "weighted zeta of c1 differs from zeta of the target "
                     "shift: expected " +
                         zeta_B.to_string());
  }
  if (!(wz_c2 == zeta_A)) {
    return make_fail(name, statement, L, wz_c2.to_string(),
                     "weighted zeta of c2 differs from zeta of the source "
                     "shift: expected " +
                         zeta_A.to_string());
  }
  return make_pass(name, statement, L,
                   "zeta_A = " + zeta_A.to_string() +
                       "; zeta_B = " + zeta_B.to_string());
}

CertReport det_invariant(const CoeSpec& spec) {
  const std::string name = "determinant_invariant";
  const std::string statement =
      "det(id - A) agrees across the equivalence";
  const BigInt dA = char_reciprocal(spec.A).at(1);
  const BigInt dB = char_reciprocal(spec.B).at(1);
  const std::string values =
      "det(id - A) = " + to_string(dA) + ", det(id - B) = " + to_string(dB);
  if (dA != dB) {
    return make_fail(name, statement, 0, values, "determinants differ");
  }
  return make_pass(name, statement, 0, values);
}

}  // namespace coeq
