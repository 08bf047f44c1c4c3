#include "coeq/transducer.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <tuple>

namespace coeq {

namespace {

// Configurations reachable while reading admissible input: (state, last input
// symbol), with 0 standing for "nothing read yet".  From (q, a) the next
// symbol b is possible iff a == 0 or entry(a, b).
struct ConfigSpace {
  int states;
  int n;

  int id(int state, int last) const { return state * (n + 1) + last; }
  int count() const { return states * (n + 1); }
};

}  // namespace

Transducer make_transducer(ShiftSpace source, ShiftSpace target,
                           std::vector<std::string> state_names, int initial,
                           std::vector<std::optional<Transducer::Rule>> rules) {
  int states = static_cast<int>(state_names.size());
  int n = source.alphabet_size();
  if (states == 0) raise(ErrorCode::PreconditionFailed, "no states");
  if (initial < 0 || initial >= states) {
    raise(ErrorCode::UnknownState, "initial state index out of range");
  }
  if (static_cast<int>(rules.size()) != states * n) {
    raise(ErrorCode::PreconditionFailed, "rule table has wrong shape");
  }
  {
    std::set<std::string> unique(state_names.begin(), state_names.end());
    if (static_cast<int>(unique.size()) != states) {
      raise(ErrorCode::UnknownState, "duplicate state names");
    }
  }
  for (const auto& r : rules) {
    if (!r) continue;
    if (r->next < 0 || r->next >= states) {
      raise(ErrorCode::UnknownState, "rule targets unknown state");
    }
    if (!target.admissible(r->output)) {
      raise(ErrorCode::InadmissibleOutput,
            "output word not admissible in target: " + word_to_string(r->output));
    }
  }

  // Reachability pass over (state, last input, last output) triples (0 = none
  // yet).  Checks totality on admissible continuations and admissibility of
  // emitted junctions in one sweep.
  ConfigSpace cs{states, n};
  int m = target.alphabet_size();
  std::set<std::tuple<int, int, int>> seen;
  std::deque<std::tuple<int, int, int>> queue;
  queue.emplace_back(initial, 0, 0);
  seen.insert({initial, 0, 0});
  // Also remember reachable (state, last input) pairs and, per pair, the
  // emitted-or-not flag of each transition for the null-cycle check below.
  std::set<std::pair<int, int>> reachable_pairs;
  while (!queue.empty()) {
    auto [q, last_in, last_out] = queue.front();
    queue.pop_front();
    reachable_pairs.insert({q, last_in});
    for (int b = 1; b <= n; ++b) {
      if (last_in != 0 && !source.entry(last_in, b)) continue;
      const auto& rule = rules[q * n + (b - 1)];
      if (!rule) {
        raise(ErrorCode::UndefinedTransition,
              "state '" + state_names[q] + "' has no rule for input " +
                  std::to_string(b) + " although it can occur");
      }
      int out_last = last_out;
      if (!rule->output.empty()) {
        if (last_out != 0 && !target.entry(last_out, rule->output.front())) {
          raise(ErrorCode::InadmissibleOutput,
                "emitted junction " + std::to_string(last_out) + "->" +
                    std::to_string(rule->output.front()) +
                    " is not admissible in the target");
        }
        out_last = rule->output.back();
      }
      auto key = std::make_tuple(rule->next, b, out_last);
      if (seen.insert(key).second) queue.push_back(key);
    }
  }

  // No null cycles: within reachable (state, last input) configurations, the
  // subgraph of empty-output transitions must be acyclic.
  {
    std::map<std::pair<int, int>, int> index;
    std::vector<std::pair<int, int>> order(reachable_pairs.begin(),
                                           reachable_pairs.end());
    for (std::size_t i = 0; i < order.size(); ++i) index[order[i]] = static_cast<int>(i);
    std::vector<std::vector<int>> null_succ(order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      auto [q, last_in] = order[i];
      for (int b = 1; b <= n; ++b) {
        if (last_in != 0 && !source.entry(last_in, b)) continue;
        const auto& rule = rules[q * n + (b - 1)];
        if (!rule || !rule->output.empty()) continue;
        auto it = index.find({rule->next, b});
        if (it != index.end()) null_succ[i].push_back(it->second);
      }
    }
    std::vector<int> color(order.size(), 0);
    std::function<bool(int)> has_cycle = [&](int v) -> bool {
      color[v] = 1;
      for (int w : null_succ[v]) {
        if (color[w] == 1) return true;
        if (color[w] == 0 && has_cycle(w)) return true;
      }
      color[v] = 2;
      return false;
    };
    for (std::size_t v = 0; v < order.size(); ++v) {
      if (color[v] == 0 && has_cycle(static_cast<int>(v))) {
        raise(ErrorCode::NullCycle,
              "a reachable configuration cycle emits no output");
      }
    }
  }

  return Transducer(std::move(source), std::move(target),
                    std::move(state_names), initial, std::move(rules));
}

Transducer identity_transducer(const ShiftSpace& S) {
  int n = S.alphabet_size();
  std::vector<std::optional<Transducer::Rule>> rules(n);
  for (int a = 1; a <= n; ++a) {
    rules[a - 1] = Transducer::Rule{0, Word{a}};
  }
  return make_transducer(S, S, {"id"}, 0, std::move(rules));
}

Word apply_prefix(const Transducer& T, const Word& w) {
  if (!T.source().admissible(w)) {
    raise(ErrorCode::Inadmissible, "input word not admissible: " + word_to_string(w));
  }
  Word out;
  int q = T.initial_state();
  for (int b : w) {
    const auto& rule = T.rule(q, b);
    if (!rule) {
      raise(ErrorCode::UndefinedTransition,
            "no rule in state '" + T.state_names()[q] + "' for input " +
                std::to_string(b));
    }
    out.insert(out.end(), rule->output.begin(), rule->output.end());
    q = rule->next;
  }
  return out;
}

EvPeriodicPoint apply_transducer(const Transducer& T, const EvPeriodicPoint& x) {
  if (T.source() != x.space) {
    raise(ErrorCode::SpaceMismatch, "point lives on a different space");
  }
  int q = T.initial_state();
  Word head;
  auto run_word = [&](const Word& w, Word& sink) {
    for (int b : w) {
      const auto& rule = T.rule(q, b);
      if (!rule) {
        raise(ErrorCode::UndefinedTransition,
              "no rule in state '" + T.state_names()[q] + "' for input " +
                  std::to_string(b));
      }
      sink.insert(sink.end(), rule->output.begin(), rule->output.end());
      q = rule->next;
    }
  };
  run_word(x.transient, head);
  // Feed the cycle until the machine state repeats at a cycle boundary; the
  // emitted blocks between the repeat form the image's cycle.  No-null-cycle
  // guarantees that block is nonempty.
  std::map<int, std::pair<std::size_t, std::size_t>> seen;  // state -> (#cycles, |head|)
  std::size_t cycles_fed = 0;
  while (true) {
    auto it = seen.find(q);
    if (it != seen.end()) {
      std::size_t head_len = it->second.second;
      Word u(head.begin(), head.begin() + head_len);
      Word v(head.begin() + head_len, head.end());
      if (v.empty()) {
        raise(ErrorCode::NullCycle, "image cycle is empty");  // unreachable
      }
      return make_ev_periodic(T.target(), std::move(u), std::move(v));
    }
    seen[q] = {cycles_fed, head.size()};
    run_word(x.cycle, head);
    ++cycles_fed;
  }
}

int required_input_depth(const Transducer& T, int m) {
  if (m < 0) raise(ErrorCode::PreconditionFailed, "negative output demand");
  if (m == 0) return 0;
  int n = T.source().alphabet_size();
  ConfigSpace cs{T.state_count(), n};
  // f[c] = least output length over admissible inputs of the current length
  // ending in configuration c; unreachable = -1.
  std::vector<long long> f(cs.count(), -1);
  f[cs.id(T.initial_state(), 0)] = 0;
  // Each pass through all configurations raises the minimum by at least one
  // every (#configs) steps (no null cycles), so this terminates.
  int hard_cap = m * (cs.count() + 1) + 1;
  for (int d = 1; d <= hard_cap; ++d) {
    std::vector<long long> next(cs.count(), -1);
    for (int q = 0; q < cs.states; ++q) {
      for (int last = 0; last <= n; ++last) {
        long long cur = f[cs.id(q, last)];
        if (cur < 0) continue;
        for (int b = 1; b <= n; ++b) {
          if (last != 0 && !T.source().entry(last, b)) continue;
          const auto& rule = T.rule(q, b);
          if (!rule) continue;  // cannot occur for validated machines
          long long cand = cur + static_cast<long long>(rule->output.size());
          long long& slot = next[cs.id(rule->next, b)];
          if (slot < 0 || cand < slot) slot = cand;
        }
      }
    }
    f = std::move(next);
    long long worst = -1;
    bool any = false;
    for (long long v : f) {
      if (v < 0) continue;
      any = true;
      worst = (worst < 0) ? v : std::min(worst, v);
    }
    if (any && worst >= m) return d;
  }
  raise(ErrorCode::PreconditionFailed,
        "required_input_depth did not converge (null cycle?)");
}

}  // namespace coeq
