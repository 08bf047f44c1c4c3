#pragma once

// Shared fixtures and independent oracle implementations for the test suite.
// The oracles deliberately use the most naive algorithm available (string
// enumeration, schoolbook polynomial arithmetic) so they share no code path
// with the library routines they check.

#include "coeq/coe.hpp"
#include "coeq/cyl_fn.hpp"
#include "coeq/numeric.hpp"
#include "coeq/shift_space.hpp"
#include "coeq/transducer.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <vector>

namespace coeq::testing {

// The running example: A = full 2-shift, B = golden mean shift, h maps
// 1 -> 1, 2 -> 21; h^{-1} buffers a 2 until the forced 1 arrives.
inline CoeSpec fixture_spec() {
  ShiftSpace A = make_shift_space({{1, 1}, {1, 1}});
  ShiftSpace B = make_shift_space({{1, 1}, {1, 0}});
  using Rule = Transducer::Rule;
  std::vector<std::optional<Rule>> hr = {Rule{0, {1}}, Rule{0, {2, 1}}};
  Transducer h = make_transducer(A, B, {"s0"}, 0, hr);
  std::vector<std::optional<Rule>> gr = {Rule{0, {1}}, Rule{1, {}},
                                         Rule{0, {2}}, std::nullopt};
  Transducer hinv = make_transducer(B, A, {"s0", "s1"}, 0, gr);
  CylFn k1 = CylFn::constant(A, 0);
  CylFn l1(A, 1, {{{1}, 1}, {{2}, 2}});
  CylFn k2(B, 1, {{{1}, 0}, {{2}, 1}});
  CylFn l2 = CylFn::constant(B, 1);
  return make_coe_spec(A, B, h, hinv, k1, l1, k2, l2);
}

inline CoeSpec identity_spec(const ShiftSpace& S) {
  return make_coe_spec(S, S, identity_transducer(S), identity_transducer(S),
                       CylFn::constant(S, 0), CylFn::constant(S, 1),
                       CylFn::constant(S, 0), CylFn::constant(S, 1));
}

inline ShiftSpace full2() { return make_shift_space({{1, 1}, {1, 1}}); }
inline ShiftSpace golden() { return make_shift_space({{1, 1}, {1, 0}}); }

// ---- independent oracles -------------------------------------------------

// True iff the length-|w| cyclic word w is admissible around the loop.
inline bool oracle_cyclic_admissible(const ShiftSpace& S, const Word& w) {
  const int p = static_cast<int>(w.size());
  for (int i = 0; i < p; ++i) {
    if (!S.entry(w[i], w[(i + 1) % p])) return false;
  }
  return true;
}

// Number of periodic points of period dividing p, by brute enumeration of
// all n^p words (small p only).
inline long long oracle_per_count(const ShiftSpace& S, int p) {
  const int n = S.alphabet_size();
  long long count = 0;
  Word w(p, 1);
  while (true) {
    if (oracle_cyclic_admissible(S, w)) ++count;
    int i = p - 1;
    while (i >= 0 && w[i] == n) {
      w[i] = 1;
      --i;
    }
    if (i < 0) break;
    ++w[i];
  }
  return count;
}

// All primitive periodic orbits with period <= P, as lexicographically least
// rotations sorted by (period, word), by brute enumeration.
inline std::vector<Word> oracle_orbits(const ShiftSpace& S, int P) {
  const int n = S.alphabet_size();
  std::vector<Word> out;
  for (int p = 1; p <= P; ++p) {
    Word w(p, 1);
    while (true) {
      if (oracle_cyclic_admissible(S, w)) {
        bool least = true, primitive = true;
        for (int r = 1; r < p && (least || primitive); ++r) {
          Word rot(w.begin() + r, w.end());
          rot.insert(rot.end(), w.begin(), w.begin() + r);
          if (rot < w) least = false;
          if (rot == w) primitive = false;  // nontrivial rotation fixes w
        }
        if (least && primitive) out.push_back(w);
      }
      int i = p - 1;
      while (i >= 0 && w[i] == n) {
        w[i] = 1;
        --i;
      }
      if (i < 0) break;
      ++w[i];
    }
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

// Sum of a cylinder function around a cyclic word, by unrolling the cycle
// far enough to read every window directly.
inline long long oracle_orbit_sum(const CylFn& f, const Word& cycle) {
  const int p = static_cast<int>(cycle.size());
  const int d = std::max(f.depth(), 1);
  Word unrolled;
  while (static_cast<int>(unrolled.size()) < p + d) {
    unrolled.insert(unrolled.end(), cycle.begin(), cycle.end());
  }
  long long sum = 0;
  for (int i = 0; i < p; ++i) {
    Word window(unrolled.begin() + i, unrolled.begin() + i + d);
    sum += eval_word(f, window);
  }
  return sum;
}

// Schoolbook product of integer polynomials mod t^{L+1}.
inline std::vector<BigInt> oracle_mul_trunc(const std::vector<BigInt>& a,
                                            const std::vector<BigInt>& b,
                                            int L) {
  std::vector<BigInt> c(L + 1, BigInt(0));
  for (size_t i = 0; i < a.size() && i <= static_cast<size_t>(L); ++i) {
    for (size_t j = 0; j < b.size() && i + j <= static_cast<size_t>(L); ++j) {
      c[i + j] += a[i] * b[j];
    }
  }
  return c;
}

// ---- seeded random generators ---------------------------------------------

// Random valid transition matrix: 0-1 entries, no zero row/column,
// irreducible, not a permutation.  Rejection sampling.
inline ShiftSpace random_space(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> bit(0, 1);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<std::vector<int>> rows(n, std::vector<int>(n));
    for (auto& r : rows) {
      for (int& e : r) e = bit(rng);
    }
    try {
      return make_shift_space(rows);
    } catch (const Error&) {
      continue;
    }
  }
  return full2();  // overwhelmingly unlikely
}

// Random cylinder function of the given depth with values in [lo, hi].
inline CylFn random_cylfn(std::mt19937& rng, const ShiftSpace& S, int depth,
                          long long lo, long long hi) {
  std::uniform_int_distribution<long long> val(lo, hi);
  std::map<Word, long long> table;
  for (const Word& w : admissible_words(S, depth)) table[w] = val(rng);
  return CylFn(S, depth, std::move(table));
}

// Random eventually periodic point with |u| <= max_u, 1 <= |v| <= max_v.
inline EvPeriodicPoint random_point(std::mt19937& rng, const ShiftSpace& S,
                                    int max_u, int max_v) {
  const auto pts = eventually_periodic_points(
      S, std::max(1, max_u) + std::max(1, max_v));
  std::uniform_int_distribution<size_t> pick(0, pts.size() - 1);
  return pts[pick(rng)];
}

}  // namespace coeq::testing
