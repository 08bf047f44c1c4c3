#include "coeq/measures.hpp"

#include "coeq/cohomology.hpp"
#include "coeq/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace coeq {

Rational MarkovMeasure::cylinder(const Word& w) const {
  if (w.empty()) return Rational(1);
  const int n = space.alphabet_size();
  for (int a : w) {
    if (a < 1 || a > n) {
      raise(ErrorCode::Inadmissible,
            "symbol " + std::to_string(a) + " outside the alphabet");
    }
  }
  Rational value = pi[w[0] - 1];
  for (size_t i = 0; i + 1 < w.size(); ++i) {
    if (value == 0) return Rational(0);
    value *= P[w[i] - 1][w[i + 1] - 1];
  }
  return value;
}

namespace {

// Strong connectivity of the directed graph on {0..n-1} given by adjacency
// predicate `edge` — forward and backward reachability from vertex 0.
template <typename EdgeFn>
bool strongly_connected_graph(int n, EdgeFn edge) {
  for (int pass = 0; pass < 2; ++pass) {
    std::vector<char> seen(n, 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u = 0; u < n; ++u) {
        bool has = pass == 0 ? edge(v, u) : edge(u, v);
        if (has && !seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (!seen[v]) return false;
    }
  }
  return true;
}

// Exact stationary row vector of an irreducible stochastic matrix:
// pi (P - I) = 0 with sum pi = 1, solved by Gaussian elimination over the
// rationals.  Equations indexed by columns j: sum_i pi_i P[i][j] - pi_j = 0,
// with the last equation replaced by the normalization.
std::vector<Rational> solve_stationary(
    const std::vector<std::vector<Rational>>& P) {
  const int n = static_cast<int>(P.size());
  // rows: n stationary equations plus normalization; columns: n unknowns + rhs.
  std::vector<std::vector<Rational>> M(
      n + 1, std::vector<Rational>(n + 1, Rational(0)));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) M[j][i] = P[i][j];
    M[j][j] -= 1;
  }
  for (int i = 0; i < n; ++i) M[n][i] = 1;
  M[n][n] = 1;

  int row = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < n && row <= n; ++col) {
    int p = -1;
    for (int r = row; r <= n; ++r) {
      if (M[r][col] != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(M[p], M[row]);
    const Rational inv = Rational(1) / M[row][col];
    for (int cc = col; cc <= n; ++cc) M[row][cc] *= inv;
    for (int r = 0; r <= n; ++r) {
      if (r == row || M[r][col] == 0) continue;
      const Rational factor = M[r][col];
      for (int cc = col; cc <= n; ++cc) M[r][cc] -= factor * M[row][cc];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (static_cast<int>(pivot_col.size()) != n) {
    raise(ErrorCode::NotIrreducible,
          "stationary distribution is not unique");
  }
  // Remaining rows must be 0 = 0.
  for (int r = row; r <= n; ++r) {
    if (M[r][n] != 0) {
      raise(ErrorCode::NotStochastic, "stationary system is inconsistent");
    }
  }
  std::vector<Rational> pi(n);
  for (int r = 0; r < n; ++r) pi[pivot_col[r]] = M[r][n];
  return pi;
}

}  // namespace

MarkovMeasure make_markov_measure(const ShiftSpace& S,
                                  std::vector<std::vector<Rational>> P,
                                  std::optional<std::vector<Rational>> pi) {
  const int n = S.alphabet_size();
  if (static_cast<int>(P.size()) != n) {
    raise(ErrorCode::NotStochastic,
          "transition matrix has " + std::to_string(P.size()) +
              " rows, alphabet has " + std::to_string(n));
  }
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(P[i].size()) != n) {
      raise(ErrorCode::NotStochastic,
            "row " + std::to_string(i + 1) + " has wrong length");
    }
    Rational row_sum = 0;
    for (int j = 0; j < n; ++j) {
      if (P[i][j] < 0) {
        raise(ErrorCode::NotStochastic,
              "negative entry at (" + std::to_string(i + 1) + "," +
                  std::to_string(j + 1) + ")");
      }
      if (P[i][j] > 0 && S.entry(i + 1, j + 1) == 0) {
        raise(ErrorCode::IncompatibleSupport,
              "P is positive on the forbidden transition (" +
                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
      row_sum += P[i][j];
    }
    if (row_sum != 1) {
      raise(ErrorCode::NotStochastic,
            "row " + std::to_string(i + 1) + " sums to " +
                to_string(row_sum));
    }
  }
  std::vector<Rational> stationary;
  if (pi.has_value()) {
    stationary = std::move(*pi);
    if (static_cast<int>(stationary.size()) != n) {
      raise(ErrorCode::NotStochastic, "pi has wrong length");
    }
    Rational total = 0;
    for (const Rational& x : stationary) {
      if (x < 0) raise(ErrorCode::NotStochastic, "pi has a negative entry");
      total += x;
    }
    if (total != 1) {
      raise(ErrorCode::NotStochastic, "pi sums to " + to_string(total));
    }
    for (int j = 0; j < n; ++j) {
      Rational lhs = 0;
      for (int i = 0; i < n; ++i) lhs += stationary[i] * P[i][j];
      if (lhs != stationary[j]) {
        raise(ErrorCode::NotStochastic,
              "pi is not stationary at column " + std::to_string(j + 1));
      }
    }
  } else {
    if (!strongly_connected_graph(
            n, [&](int i, int j) { return P[i][j] > 0; })) {
      raise(ErrorCode::NotIrreducible,
            "support of P is not irreducible; supply pi explicitly");
    }
    stationary = solve_stationary(P);
  }
  return MarkovMeasure{S, std::move(P), std::move(stationary)};
}

namespace {

// Best rational approximation of x within tol, by continued fractions.
Rational rationalize(double x, double tol) {
  if (x < 0) {
    raise(ErrorCode::NoConvergence,
          "power iteration produced a negative ratio");
  }
  Rational best(0);
  double rem = x;
  BigInt h0 = 1, h1 = 0;  // numerator convergents
  BigInt k0 = 0, k1 = 1;  // denominator convergents
  for (int step = 0; step < 64; ++step) {
    const double fl = std::floor(rem);
    if (fl > 9e18) break;
    const BigInt a = static_cast<long long>(fl);
    const BigInt h = a * h0 + h1;
    const BigInt k = a * k0 + k1;
    h1 = h0;
    h0 = h;
    k1 = k0;
    k0 = k;
    best = Rational(h, k);
    const double approx = static_cast<double>(h.convert_to<double>()) /
                          k.convert_to<double>();
    if (std::abs(approx - x) <= tol) return best;
    const double frac = rem - fl;
    if (frac < 1e-18) break;
    rem = 1.0 / frac;
  }
  return best;
}

}  // namespace

MarkovMeasure parry_measure(const ShiftSpace& S, double tol, int max_iters) {
  const int n = S.alphabet_size();
  std::vector<double> v(n, 1.0 / n);
  double lambda = 0;
  bool converged = false;
  for (int iter = 0; iter < max_iters; ++iter) {
    std::vector<double> w(n, 0.0);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (S.entry(i + 1, j + 1)) w[i] += v[j];
      }
    }
    double norm = 0;
    for (double x : w) norm += x;
    lambda = norm;  // since sum v == 1, sum Av estimates the eigenvalue
    for (double& x : w) x /= norm;
    double delta = 0;
    for (int i = 0; i < n; ++i) delta = std::max(delta, std::abs(w[i] - v[i]));
    v = std::move(w);
    if (delta < tol) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    raise(ErrorCode::NoConvergence,
          "power iteration did not converge in " + std::to_string(max_iters) +
              " steps");
  }
  // Parry transition ratios P[i][j] = A[i][j] v_j / (lambda v_i), then exact
  // row re-normalization so the rationalized matrix is exactly stochastic.
  std::vector<std::vector<Rational>> P(n, std::vector<Rational>(n,
                                                                Rational(0)));
  for (int i = 0; i < n; ++i) {
    Rational row_sum = 0;
    for (int j = 0; j < n; ++j) {
      if (!S.entry(i + 1, j + 1)) continue;
      const Rational r = rationalize(v[j] / (lambda * v[i]), tol * 16);
      if (r <= 0) {
        raise(ErrorCode::NoConvergence,
              "rationalized transition probability vanished at (" +
                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
      P[i][j] = r;
      row_sum += r;
    }
    for (int j = 0; j < n; ++j) P[i][j] /= row_sum;
  }
  return make_markov_measure(S, std::move(P));
}

Rational eval_measure(const MarkovMeasure& mu, const CylFn& f) {
  if (!(mu.space == f.space())) {
    raise(ErrorCode::SpaceMismatch,
          "measure and function live on different shifts");
  }
  Rational total = 0;
  for (const auto& [w, value] : f.table()) {
    if (value == 0) continue;
    total += mu.cylinder(w) * value;
  }
  return total;
}

PushedMeasure pushforward(const CoeSpec& spec, const MarkovMeasure& mu) {
  if (!(mu.space == spec.A)) {
    raise(ErrorCode::SpaceMismatch,
          "pushforward needs a measure on the source shift");
  }
  return PushedMeasure{spec, mu};
}

Rational eval_pushed(const PushedMeasure& nu, const CylFn& f) {
  return eval_measure(nu.base, psi_transfer(nu.spec, f));
}

CertReport check_invariance(const PushedMeasure& nu, int D) {
  const std::string name = "pushforward_invariance";
  const std::string statement =
      "the pushforward measure is invariant under the target shift map";
  long long checked = 0;
  for (int d = 1; d <= D; ++d) {
    for (const Word& w : admissible_words(nu.spec.B, d)) {
      const CylFn chi = CylFn::indicator(nu.spec.B, w);
      const Rational direct = eval_pushed(nu, chi);
      const Rational shifted = eval_pushed(nu, compose_shift(chi));
      ++checked;
      if (direct != shifted) {
        return make_fail(name, statement, D, word_to_string(w),
                         "nu(chi o sigma) = " + to_string(shifted) +
                             " but nu(chi) = " + to_string(direct));
      }
    }
  }
  return make_pass(name, statement, D,
                   std::to_string(checked) + " cylinder indicators checked");
}

CertReport check_positivity(const PushedMeasure& nu, int D) {
  const std::string name = "pushforward_positivity";
  const std::string statement =
      "the pushforward measure is nonnegative on cylinders";
  long long checked = 0;
  for (int d = 1; d <= D; ++d) {
    for (const Word& w : admissible_words(nu.spec.B, d)) {
      const Rational value = eval_pushed(nu, CylFn::indicator(nu.spec.B, w));
      ++checked;
      if (value < 0) {
        return make_fail(name, statement, D, word_to_string(w),
                         "nu(U_w) = " + to_string(value));
      }
    }
  }
  return make_pass(name, statement, D,
                   std::to_string(checked) + " cylinders checked");
}

CertReport check_normalization(const PushedMeasure& nu) {
  const std::string name = "pushforward_normalization";
  const std::string statement =
      "the pushforward of a probability measure has total mass mu(c1), and "
      "is a probability measure exactly when [c1] = [1]";
  const CylFn c1 = cocycle_c(nu.spec, 1);
  const CylFn one = CylFn::constant(nu.spec.A, 1);
  const Rational mass = eval_pushed(nu, CylFn::constant(nu.spec.B, 1));
  const Rational expected = eval_measure(nu.base, c1);
  if (mass != expected) {
    return make_fail(name, statement, 0, to_string(mass),
                     "total mass " + to_string(mass) +
                         " differs from mu(c1) = " + to_string(expected));
  }
  const ClassDecision cls = classes_equal(c1, one);
  const bool probability = cls.verdict == ClassVerdict::Coboundary;
  if (probability && mass != 1) {
    return make_fail(name, statement, 0, to_string(mass),
                     "[c1] = [1] but total mass is " + to_string(mass));
  }
  std::string details =
      "total mass = " + to_string(mass) +
      (probability ? "; probability preserved ([c1] = [1])"
                   : "; probability not preserved ([c1] != [1])");
  return make_pass(name, statement, 0, details);
}

}  // namespace coeq
