#include "coeq/ev_periodic.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace coeq {

std::string EvPeriodicPoint::to_string() const {
  std::ostringstream out;
  for (int a : transient) out << a;
  out << '(';
  for (int a : cycle) out << a;
  out << ")^inf";
  return out.str();
}

namespace {

Word primitive_root(const Word& v) {
  int p = static_cast<int>(v.size());
  for (int d = 1; d <= p; ++d) {
    if (p % d != 0) continue;
    bool repeats = true;
    for (int i = d; i < p && repeats; ++i) repeats = (v[i] == v[i - d]);
    if (repeats) return Word(v.begin(), v.begin() + d);
  }
  return v;  // unreachable
}

}  // namespace

EvPeriodicPoint make_ev_periodic(const ShiftSpace& S, Word u, Word v) {
  if (v.empty()) raise(ErrorCode::PreconditionFailed, "empty cycle word");
  for (int a : u) {
    if (a < 1 || a > S.alphabet_size()) {
      raise(ErrorCode::PreconditionFailed, "symbol out of range in transient");
    }
  }
  for (int a : v) {
    if (a < 1 || a > S.alphabet_size()) {
      raise(ErrorCode::PreconditionFailed, "symbol out of range in cycle");
    }
  }
  v = primitive_root(v);
  // Absorb agreeing tail symbols of the transient into the cycle: u'a (a w)^inf
  // with the cycle ending in a equals u' (a w')^inf after rotating the cycle
  // right by one.  This terminates with the minimal transient, and the
  // resulting normal form is unique.
  while (!u.empty() && u.back() == v.back()) {
    u.pop_back();
    std::rotate(v.begin(), v.end() - 1, v.end());
  }
  // Admissibility of u v^inf == admissibility of the canonical pair: interior
  // of u, the junction u->v, interior of v, and the wrap v_last -> v_first.
  bool ok = S.admissible(u) && S.admissible(v) && S.entry(v.back(), v.front());
  if (ok && !u.empty()) ok = S.entry(u.back(), v.front());
  if (!ok) {
    raise(ErrorCode::Inadmissible,
          "not an admissible sequence: " + word_to_string(u) + word_to_string(v));
  }
  return EvPeriodicPoint{S, std::move(u), std::move(v)};
}

EvPeriodicPoint shift_evp(const EvPeriodicPoint& x, long long m) {
  if (m < 0) raise(ErrorCode::PreconditionFailed, "negative shift");
  long long t = static_cast<long long>(x.transient.size());
  if (m <= t) {
    Word u(x.transient.begin() + m, x.transient.end());
    // Dropping a prefix of a normal form stays normal (last(u) unchanged
    // until u empties), but normalize anyway: it is idempotent.
    return make_ev_periodic(x.space, std::move(u), x.cycle);
  }
  return make_ev_periodic(x.space, Word{}, rotate_left(x.cycle, m - t));
}

int symbol_at(const EvPeriodicPoint& x, long long i) {
  if (i < 1) raise(ErrorCode::PreconditionFailed, "positions are 1-based");
  long long t = static_cast<long long>(x.transient.size());
  if (i <= t) return x.transient[i - 1];
  long long p = static_cast<long long>(x.cycle.size());
  return x.cycle[(i - t - 1) % p];
}

Word prefix_of(const EvPeriodicPoint& x, int k) {
  Word out;
  out.reserve(k);
  for (int i = 1; i <= k; ++i) out.push_back(symbol_at(x, i));
  return out;
}

EvPeriodicPoint prepend(const Word& w, const EvPeriodicPoint& x) {
  Word u = w;
  u.insert(u.end(), x.transient.begin(), x.transient.end());
  return make_ev_periodic(x.space, std::move(u), x.cycle);
}

std::vector<EvPeriodicPoint> eventually_periodic_points(const ShiftSpace& S,
                                                        int bound) {
  if (bound < 1) raise(ErrorCode::PreconditionFailed, "bound must be >= 1");
  std::vector<EvPeriodicPoint> points;
  // All primitive admissible cycle words (every rotation: distinct rotations
  // are distinct points), grouped by length.
  std::vector<std::vector<Word>> cycles_by_len(bound + 1);
  std::function<void(Word&)> grow_cycle = [&](Word& w) {
    if (S.entry(w.back(), w.front()) && is_primitive(w)) {
      cycles_by_len[w.size()].push_back(w);
    }
    if (static_cast<int>(w.size()) == bound) return;
    for (int a = 1; a <= S.alphabet_size(); ++a) {
      if (!S.entry(w.back(), a)) continue;
      w.push_back(a);
      grow_cycle(w);
      w.pop_back();
    }
  };
  for (int a = 1; a <= S.alphabet_size(); ++a) {
    Word w{a};
    grow_cycle(w);
  }
  for (auto& bucket : cycles_by_len) std::sort(bucket.begin(), bucket.end());

  // Admissible transients ending compatibly: enumerate per cycle.
  for (int total = 1; total <= bound; ++total) {
    for (int m = 1; m <= total; ++m) {
      int tl = total - m;
      for (const Word& v : cycles_by_len[m]) {
        if (tl == 0) {
          points.push_back(EvPeriodicPoint{S, Word{}, v});
          continue;
        }
        // Backwards DFS: build u right-to-left so the junction and the
        // canonicality constraint (last(u) != last(v)) apply at the root.
        std::vector<Word> stubs;
        std::function<void(Word&)> grow_u = [&](Word& u) {
          if (static_cast<int>(u.size()) == tl) {
            stubs.emplace_back(u.rbegin(), u.rend());
            return;
          }
          int next = u.empty() ? v.front() : u.back();  // symbol to the right
          for (int a = 1; a <= S.alphabet_size(); ++a) {
            if (!S.entry(a, next)) continue;
            if (u.empty() && a == v.back()) continue;  // canonical form
            u.push_back(a);
            grow_u(u);
            u.pop_back();
          }
        };
        Word u;
        grow_u(u);
        std::sort(stubs.begin(), stubs.end());
        for (Word& s : stubs) {
          points.push_back(EvPeriodicPoint{S, std::move(s), v});
        }
      }
    }
  }
  return points;
}

AttractingWitness attracting_witness(const EvPeriodicPoint& x, long long r,
                                     long long s, int W_depth) {
  if (r <= s || s < 0) {
    raise(ErrorCode::NotEventuallyPeriodicAt, "need r > s >= 0");
  }
  if (!shift_evp(x, r).same_point(shift_evp(x, s))) {
    raise(ErrorCode::NotEventuallyPeriodicAt,
          "sigma^" + std::to_string(r) + "(x) != sigma^" + std::to_string(s) +
              "(x) at x = " + x.to_string());
  }
  Word nu = prefix_of(x, static_cast<int>(s));
  Word xi;
  for (long long i = s + 1; i <= r; ++i) {
    xi.push_back(symbol_at(x, i));
  }
  // L >= 1 minimal with |nu| + L|xi| >= W_depth.
  long long q = static_cast<long long>(xi.size());
  long long L = 1;
  if (static_cast<long long>(nu.size()) + q < W_depth) {
    L = (W_depth - static_cast<long long>(nu.size()) + q - 1) / q;
  }
  Word nu_bar = nu;
  for (long long i = 0; i < L; ++i) nu_bar.insert(nu_bar.end(), xi.begin(), xi.end());
  Word mu_bar = nu_bar;
  mu_bar.insert(mu_bar.end(), xi.begin(), xi.end());
  return AttractingWitness{std::move(nu_bar), std::move(mu_bar), L};
}

std::string TwoSidedPeriodicPt::to_string() const {
  std::ostringstream out;
  out << "(";
  for (int a : orbit.cycle) out << a;
  out << ")@" << phase;
  return out.str();
}

TwoSidedPeriodicPt shift_two_sided(const TwoSidedPeriodicPt& x, long long m) {
  long long p = x.period();
  long long phase = ((x.phase + m) % p + p) % p;
  return TwoSidedPeriodicPt{x.orbit, static_cast<int>(phase)};
}

EvPeriodicPoint restrict_two_sided(const ShiftSpace& S,
                                   const TwoSidedPeriodicPt& x) {
  return make_ev_periodic(S, Word{}, rotate_left(x.orbit.cycle, x.phase));
}

TwoSidedPeriodicPt extend_two_sided(const EvPeriodicPoint& x) {
  if (!x.purely_periodic()) {
    raise(ErrorCode::NotPeriodic,
          "point has a transient: " + x.to_string());
  }
  Word canon = least_rotation(x.cycle);
  int p = static_cast<int>(canon.size());
  for (int phase = 0; phase < p; ++phase) {
    if (rotate_left(canon, phase) == x.cycle) {
      return TwoSidedPeriodicPt{Orbit{canon}, phase};
    }
  }
  raise(ErrorCode::PreconditionFailed, "unreachable: rotation not found");
}

}  // namespace coeq
