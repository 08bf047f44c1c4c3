#include "coeq/transducer.hpp"
#include "coeq/error.hpp"

#include <doctest.h>

#include "helpers.hpp"

#include <random>

using namespace coeq;
using namespace coeq::testing;

namespace {

using Rule = Transducer::Rule;

// Convenience: dense rule vector for a machine over a 2-letter source.
std::vector<std::optional<Rule>> rules2(std::optional<Rule> s0_1,
                                        std::optional<Rule> s0_2) {
  return {std::move(s0_1), std::move(s0_2)};
}

}  // namespace

TEST_SUITE_BEGIN("transducer");

TEST_CASE("validation rejects malformed machines") {
  ShiftSpace A = full2();
  ShiftSpace B = golden();

  // initial state out of range
  CHECK_THROWS_AS(
      make_transducer(A, A, {"s0"}, 1, rules2(Rule{0, {1}}, Rule{0, {2}})),
      Error);

  // missing rule that is actually needed (full shift: every symbol can occur)
  try {
    make_transducer(A, A, {"s0"}, 0, rules2(Rule{0, {1}}, std::nullopt));
    FAIL("expected UndefinedTransition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UndefinedTransition);
  }

  // output word internally inadmissible in the target
  try {
    make_transducer(A, B, {"s0"}, 0, rules2(Rule{0, {2, 2}}, Rule{0, {1}}));
    FAIL("expected InadmissibleOutput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InadmissibleOutput);
  }

  // consecutive outputs inadmissible at the seam: reading 1,1 emits 2,2
  try {
    make_transducer(A, B, {"s0"}, 0, rules2(Rule{0, {2}}, Rule{0, {1}}));
    FAIL("expected InadmissibleOutput");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InadmissibleOutput);
  }

  // reachable cycle emitting nothing
  try {
    make_transducer(A, A, {"s0"}, 0, rules2(Rule{0, {}}, Rule{0, {2}}));
    FAIL("expected NullCycle");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NullCycle);
  }
}

TEST_CASE("unreachable gaps are allowed") {
  // On the golden mean shift the input pair (after-2, 2) never occurs, so the
  // inverse substitution machine may leave it undefined.
  ShiftSpace A = full2();
  ShiftSpace B = golden();
  std::vector<std::optional<Rule>> rules = {
      Rule{0, {1}},  // (s0, 1) -> s0 / 1
      Rule{1, {}},   // (s0, 2) -> s1 / empty
      Rule{0, {2}},  // (s1, 1) -> s0 / 2
      std::nullopt,  // (s1, 2): unreachable (2 never follows 2)
  };
  CHECK_NOTHROW(make_transducer(B, A, {"s0", "s1"}, 0, rules));
}

TEST_CASE("identity machine") {
  for (const ShiftSpace& S : {full2(), golden()}) {
    Transducer id = identity_transducer(S);
    CHECK(id.state_count() == 1);
    for (const Word& w : admissible_words(S, 3)) {
      CHECK(apply_prefix(id, w) == w);
    }
    for (const EvPeriodicPoint& x : eventually_periodic_points(S, 4)) {
      CHECK(apply_transducer(id, x).same_point(x));
    }
    CHECK(required_input_depth(id, 0) == 0);
    CHECK(required_input_depth(id, 3) == 3);
  }
}

TEST_CASE("substitution machine 1 -> 1, 2 -> 21 and its inverse") {
  CoeSpec spec = fixture_spec();
  const Transducer& h = spec.h;
  const Transducer& hinv = spec.hinv;

  // h reads the full 2-shift and emits 1 for 1, 2,1 for 2.
  CHECK(h.source() == spec.A);
  CHECK(h.target() == spec.B);
  CHECK(apply_prefix(h, {1, 1}) == Word{1, 1});
  CHECK(apply_prefix(h, {2}) == Word{2, 1});
  CHECK(apply_prefix(h, {2, 2, 1}) == Word{2, 1, 2, 1, 1});

  // Images of simple points, in normal form.
  EvPeriodicPoint one = make_ev_periodic(spec.A, {}, {1});
  EvPeriodicPoint two = make_ev_periodic(spec.A, {}, {2});
  CHECK(apply_transducer(h, one).same_point(
      make_ev_periodic(spec.B, {}, {1})));
  CHECK(apply_transducer(h, two).same_point(
      make_ev_periodic(spec.B, {}, {2, 1})));
  // h(1 2^inf) = 1 (21)^inf = (12)^inf: normalization absorbs the transient.
  EvPeriodicPoint mixed = make_ev_periodic(spec.A, {1}, {2});
  CHECK(apply_transducer(h, mixed).same_point(
      make_ev_periodic(spec.B, {}, {1, 2})));

  // hinv really inverts h, on both sides.
  std::mt19937 rng(51);
  for (int t = 0; t < 40; ++t) {
    EvPeriodicPoint x = random_point(rng, spec.A, 3, 4);
    CHECK(apply_transducer(hinv, apply_transducer(h, x)).same_point(x));
    EvPeriodicPoint y = random_point(rng, spec.B, 3, 4);
    CHECK(apply_transducer(h, apply_transducer(hinv, y)).same_point(y));
  }
}

TEST_CASE("apply_prefix emits a guaranteed prefix of the image") {
  CoeSpec spec = fixture_spec();
  std::mt19937 rng(52);
  for (const Transducer* T : {&spec.h, &spec.hinv}) {
    const ShiftSpace& S = T->source();
    for (int len = 1; len <= 5; ++len) {
      for (const Word& w : admissible_words(S, len)) {
        Word out = apply_prefix(*T, w);
        // pick a few points extending w and compare prefixes
        for (int t = 0; t < 3; ++t) {
          EvPeriodicPoint tail = random_point(rng, S, 2, 2);
          std::optional<EvPeriodicPoint> x;
          try {
            x = prepend(w, tail);
          } catch (const Error&) {
            continue;  // this tail does not extend w
          }
          EvPeriodicPoint img = apply_transducer(*T, *x);
          CHECK(prefix_of(img, static_cast<int>(out.size())) == out);
        }
      }
    }
  }
  CHECK_THROWS_AS(apply_prefix(spec.hinv, Word{2, 2}), Error);
}

TEST_CASE("apply_transducer is shift-compatible through the orbit equations") {
  // Direct consequence of continuity: images of eventually periodic points
  // are eventually periodic and normalization is canonical, so applying the
  // machine twice along a point's forward orbit stays consistent.
  CoeSpec spec = fixture_spec();
  std::mt19937 rng(53);
  for (int t = 0; t < 30; ++t) {
    EvPeriodicPoint x = random_point(rng, spec.A, 3, 3);
    EvPeriodicPoint hx = apply_transducer(spec.h, x);
    // sigma^{l1(x)}(h(x)) == sigma^{k1(x)}(h(sigma x)): the A-side equation.
    long long k = eval(spec.k1, x), l = eval(spec.l1, x);
    EvPeriodicPoint lhs = shift_evp(apply_transducer(spec.h, shift_evp(x, 1)),
                                    k);
    EvPeriodicPoint rhs = shift_evp(hx, l);
    CHECK(lhs.same_point(rhs));
  }
}

TEST_CASE("required_input_depth on the fixture machines") {
  CoeSpec spec = fixture_spec();
  // h emits one or two symbols per input: depth m suffices for m symbols.
  for (int m = 0; m <= 6; ++m) {
    CHECK(required_input_depth(spec.h, m) == m);
  }
  // hinv emits at most one symbol per input and nothing on 2: worst case
  // needs two inputs per symbol.
  CHECK(required_input_depth(spec.hinv, 0) == 0);
  for (int m = 1; m <= 6; ++m) {
    CHECK(required_input_depth(spec.hinv, m) == 2 * m);
  }
  // and the bound is honest: every admissible word of that length emits >= m
  for (int m = 1; m <= 4; ++m) {
    for (const Transducer* T : {&spec.h, &spec.hinv}) {
      int d = required_input_depth(*T, m);
      for (const Word& w : admissible_words(T->source(), d)) {
        CHECK(static_cast<int>(apply_prefix(*T, w).size()) >= m);
      }
      if (d > 0) {
        // minimality: some word of length d-1 emits fewer than m symbols
        bool tight = false;
        for (const Word& w : admissible_words(T->source(), d - 1)) {
          if (static_cast<int>(apply_prefix(*T, w).size()) < m) tight = true;
        }
        CHECK(tight);
      }
    }
  }
}

TEST_SUITE_END();
