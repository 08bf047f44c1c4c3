#pragma once

#include "coeq/ev_periodic.hpp"
#include "coeq/shift_space.hpp"

#include <optional>
#include <string>
#include <vector>

namespace coeq {

// Finite-state letter-to-word transducer computing a continuous map from one
// shift space to another.  One input symbol is consumed per step; a (possibly
// empty) output word is emitted.  make_transducer validates:
//   1. states nonempty, initial state known, rules well-formed (symbols in
//      range, no duplicate (state, input) pairs, each output word internally
//      admissible in the target);
//   2. totality: a transition exists for every (reachable state, next input
//      symbol) pair that can occur while reading an admissible input;
//   3. output admissibility: along every reachable run, consecutive emitted
//      symbols form admissible target transitions;
//   4. no null cycles: no reachable configuration cycle emits nothing (this
//      is what makes images of eventually periodic points eventually
//      periodic, with computable cycles).
class Transducer {
 public:
  struct Rule {
    int next;     // state index
    Word output;  // possibly empty
  };

  const ShiftSpace& source() const { return source_; }
  const ShiftSpace& target() const { return target_; }
  int state_count() const { return static_cast<int>(state_names_.size()); }
  const std::vector<std::string>& state_names() const { return state_names_; }
  int initial_state() const { return initial_; }

  // Rule for (state, input symbol), if defined.
  const std::optional<Rule>& rule(int state, int symbol) const {
    return rules_[state * source_.alphabet_size() + (symbol - 1)];
  }

  friend Transducer make_transducer(
      ShiftSpace source, ShiftSpace target,
      std::vector<std::string> state_names, int initial,
      std::vector<std::optional<Rule>> rules);

 private:
  Transducer(ShiftSpace source, ShiftSpace target,
             std::vector<std::string> state_names, int initial,
             std::vector<std::optional<Rule>> rules)
      : source_(std::move(source)),
        target_(std::move(target)),
        state_names_(std::move(state_names)),
        initial_(initial),
        rules_(std::move(rules)) {}

  ShiftSpace source_;
  ShiftSpace target_;
  std::vector<std::string> state_names_;
  int initial_;
  // rules_[state * n + (symbol-1)]
  std::vector<std::optional<Rule>> rules_;
};

// Validating constructor; throws Error with codes UnknownState,
// UndefinedTransition, InadmissibleOutput, NullCycle, Inadmissible,
// PreconditionFailed.
Transducer make_transducer(ShiftSpace source, ShiftSpace target,
                           std::vector<std::string> state_names, int initial,
                           std::vector<std::optional<Transducer::Rule>> rules);

// The identity machine on S (one state, a -> a).
Transducer identity_transducer(const ShiftSpace& S);

// Output emitted while reading the admissible finite word w from the initial
// state.  This is a guaranteed prefix of T(x) for every x in the cylinder of
// w.  Throws Inadmissible / UndefinedTransition.
Word apply_prefix(const Transducer& T, const Word& w);

// Image of an eventually periodic point, in normal form.  Runs the transient,
// then iterates the cycle until the machine state repeats at a cycle
// boundary; the no-null-cycle invariant guarantees the emitted cycle block is
// nonempty.  Throws SpaceMismatch if x lives on a different space.
EvPeriodicPoint apply_transducer(const Transducer& T, const EvPeriodicPoint& x);

// Least d such that EVERY admissible input of length d emits at least m
// symbols (m >= 0).  Layered shortest-path over (state, last input symbol)
// configurations with emitted length as the objective; terminates by the
// no-null-cycle invariant.
int required_input_depth(const Transducer& T, int m);

}  // namespace coeq
