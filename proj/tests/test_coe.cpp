#include "coeq/coe.hpp"
#include "coeq/error.hpp"

#include <doctest.h>

#include "helpers.hpp"

#include <random>

using namespace coeq;
using namespace coeq::testing;

namespace {

// Fixture with the A-side exponent values swapped: shape-valid, but the
// orbit equation fails (first counterexample is x = (2)^inf).
CoeSpec broken_fixture() {
  CoeSpec good = fixture_spec();
  CylFn l1_bad(good.A, 1, {{{1}, 2}, {{2}, 1}});
  return make_coe_spec(good.A, good.B, good.h, good.hinv, good.k1, l1_bad,
                       good.k2, good.l2);
}

}  // namespace

TEST_SUITE_BEGIN("coe");

TEST_CASE("make_coe_spec validates shapes") {
  CoeSpec good = fixture_spec();

  // functions on the wrong side
  CHECK_THROWS_AS(make_coe_spec(good.A, good.B, good.h, good.hinv, good.k2,
                                good.l1, good.k2, good.l2),
                  Error);
  // machines in the wrong direction
  CHECK_THROWS_AS(make_coe_spec(good.A, good.B, good.hinv, good.h, good.k1,
                                good.l1, good.k2, good.l2),
                  Error);
  // negative exponents
  try {
    CylFn neg(good.A, 1, {{{1}, -1}, {{2}, 2}});
    make_coe_spec(good.A, good.B, good.h, good.hinv, good.k1, neg, good.k2,
                  good.l2);
    FAIL("expected InvalidCoeSpec");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidCoeSpec);
  }
}

TEST_CASE("mirror swaps the two sides and is an involution") {
  CoeSpec spec = fixture_spec();
  CoeSpec m = mirror(spec);
  CHECK(m.A == spec.B);
  CHECK(m.B == spec.A);
  CHECK(equal_as_functions(m.k1, spec.k2));
  CHECK(equal_as_functions(m.l2, spec.l1));
  CoeSpec mm = mirror(m);
  CHECK(mm.A == spec.A);
  CHECK(equal_as_functions(mm.l1, spec.l1));
  CHECK(equal_as_functions(cocycle_c(m, 1), cocycle_c(spec, 2)));
}

TEST_CASE("cocycle_c on the fixture") {
  CoeSpec spec = fixture_spec();
  CylFn c1 = cocycle_c(spec, 1);
  CHECK(equal_as_functions(c1, CylFn(spec.A, 1, {{{1}, 1}, {{2}, 2}})));
  CylFn c2 = cocycle_c(spec, 2);
  CHECK(equal_as_functions(c2, CylFn::indicator(spec.B, {1})));
  CHECK_THROWS_AS(cocycle_c(spec, 3), Error);
}

TEST_CASE("verify_coe certifies the fixture and the identity") {
  CoeSpec spec = fixture_spec();
  CertReport rep = verify_coe(spec, 6);
  CHECK(rep.passed());
  CHECK(rep.name == "orbit_equations");
  CHECK(rep.bound == 6);
  // the reported point count is exactly both sides' point censuses
  long long pts =
      static_cast<long long>(eventually_periodic_points(spec.A, 6).size()) +
      static_cast<long long>(eventually_periodic_points(spec.B, 6).size());
  CHECK(rep.details.rfind(std::to_string(pts) + " points and ", 0) == 0);

  std::mt19937 rng(61);
  for (int t = 0; t < 4; ++t) {
    ShiftSpace S = random_space(rng, 2 + t % 3);
    CHECK(verify_coe(identity_spec(S), 4).passed());
  }
}

TEST_CASE("verify_coe refutes swapped exponents with a located witness") {
  CertReport rep = verify_coe(broken_fixture(), 5);
  CHECK_FALSE(rep.passed());
  CHECK(rep.witness.find("orbit equation fails") != std::string::npos);
  CHECK(rep.witness.find("(2)") != std::string::npos);
}

TEST_CASE("cocycle uniqueness: shifted exponent data, same cocycle") {
  CoeSpec spec = fixture_spec();
  // bump both exponents by the same nonnegative function chi_[1]
  CylFn chi = CylFn::indicator(spec.A, {1});
  CertReport rep =
      check_cocycle_uniqueness(spec, add(spec.k1, chi), add(spec.l1, chi), 5);
  CHECK(rep.passed());
  CHECK(rep.name == "cocycle_uniqueness");

  // exponents that do not satisfy the orbit equation are rejected outright
  try {
    check_cocycle_uniqueness(spec, spec.k1, add(spec.l1, chi), 5);
    FAIL("expected AlternativeCocycleInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlternativeCocycleInvalid);
  }
  try {
    CylFn neg(spec.A, 1, {{{1}, -1}, {{2}, -1}});
    check_cocycle_uniqueness(spec, add(spec.k1, neg), add(spec.l1, neg), 5);
    FAIL("expected AlternativeCocycleInvalid");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::AlternativeCocycleInvalid);
  }
}

TEST_CASE("tail equation along sampled common-tail pairs") {
  CoeSpec spec = fixture_spec();
  std::mt19937 rng(62);
  for (int t = 0; t < 30; ++t) {
    EvPeriodicPoint x = random_point(rng, spec.A, 3, 3);
    long long d = t % 3, q = (t / 3) % 3, p = q + d;
    EvPeriodicPoint z = shift_evp(x, d);  // sigma^p x == sigma^q z
    CertReport rep = check_taileq(spec, x, z, p, q);
    CHECK(rep.passed());
    CHECK(rep.name == "tail_equation");
  }
  // purely periodic self-pairs across a full period
  for (const Orbit& g : periodic_orbits_up_to(spec.A, 4)) {
    EvPeriodicPoint x = make_ev_periodic(spec.A, {}, g.cycle);
    CHECK(check_taileq(spec, x, x, g.period(), 0).passed());
  }
  // precondition violations throw
  EvPeriodicPoint one = make_ev_periodic(spec.A, {}, {1});
  EvPeriodicPoint two = make_ev_periodic(spec.A, {}, {2});
  CHECK_THROWS_AS(check_taileq(spec, one, two, 1, 1), Error);
}

TEST_CASE("mixed exponent identity: hand value and sampled points") {
  CoeSpec spec = fixture_spec();
  // x = (2)^inf, p = 1: both sides evaluate to 2.
  EvPeriodicPoint two = make_ev_periodic(spec.A, {}, {2});
  CertReport rep = check_klp(spec, two, 1);
  CHECK(rep.passed());
  CHECK(rep.name == "exponent_identity_mixed");
  CHECK(rep.details.find("A-side 2 == 2") != std::string::npos);

  std::mt19937 rng(63);
  for (int t = 0; t < 25; ++t) {
    EvPeriodicPoint x = random_point(rng, spec.A, 3, 3);
    CHECK(check_klp(spec, x, t % 5).passed());
    // mirror side, fed with B points
    EvPeriodicPoint y = random_point(rng, spec.B, 3, 3);
    CHECK(check_klp(mirror(spec), y, t % 4).passed());
  }
  CHECK_THROWS_AS(check_klp(spec, two, -1), Error);
}

TEST_CASE("psi_h on the fixture: pinned image, known values") {
  CoeSpec spec = fixture_spec();
  // k1 == 0, so the image's one-sided restriction is exactly h(x).
  for (const Orbit& g : periodic_orbits_up_to(spec.A, 5)) {
    EvPeriodicPoint x = make_ev_periodic(spec.A, {}, g.cycle);
    long long p = g.period();
    TwoSidedPeriodicPt y = psi_h(spec, x, p);
    EvPeriodicPoint expected = apply_transducer(spec.h, x);
    CHECK(restrict_two_sided(spec.B, y).same_point(expected));
    // period of the image == c1 sum over the orbit
    CHECK(y.period() == orbit_sum(cocycle_c(spec, 1), g));
    // any multiple of the period gives the same image
    CHECK(psi_h(spec, x, 2 * p) == y);
  }
  // hand values for the induced orbit map
  CHECK(xi_h(spec, Orbit{{1}}) == Orbit{{1}});
  CHECK(xi_h(spec, Orbit{{2}}) == Orbit{{1, 2}});
  CHECK(xi_h(spec, Orbit{{1, 2}}) == Orbit{{1, 1, 2}});
  CHECK(xi_h(spec, Orbit{{1, 1, 2}}) == Orbit{{1, 1, 1, 2}});

  // rejected inputs
  EvPeriodicPoint trans = make_ev_periodic(spec.A, {1}, {2});
  CHECK_THROWS_AS(psi_h(spec, trans, 1), Error);
  EvPeriodicPoint twelve = make_ev_periodic(spec.A, {}, {1, 2});
  CHECK_THROWS_AS(psi_h(spec, twelve, 3), Error);  // not a multiple
  CHECK_THROWS_AS(psi_h(spec, twelve, 0), Error);
}

TEST_CASE("psi_h intertwines the shifts through the cocycle") {
  CoeSpec spec = fixture_spec();
  CoeSpec m = mirror(spec);
  for (const CoeSpec* s : {&spec, &m}) {
    CylFn c1 = cocycle_c(*s, 1);
    for (const Orbit& g : periodic_orbits_up_to(s->A, 6)) {
      EvPeriodicPoint x = make_ev_periodic(s->A, {}, g.cycle);
      long long p = g.period();
      TwoSidedPeriodicPt yx = psi_h(*s, x, p);
      TwoSidedPeriodicPt ysx = psi_h(*s, shift_evp(x, 1), p);
      CHECK(ysx == shift_two_sided(yx, eval(c1, x)));
    }
  }
}

TEST_CASE("psi_h flags inconsistent exponent data") {
  CoeSpec bad = broken_fixture();
  EvPeriodicPoint two = make_ev_periodic(bad.A, {}, {2});
  try {
    psi_h(bad, two, 1);
    FAIL("expected OrbitEquationViolated");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::OrbitEquationViolated);
  }
}

TEST_CASE("orbit bijection and orbit length reports") {
  CoeSpec spec = fixture_spec();
  CertReport bij = check_orbit_bijection(spec, 6);
  CHECK(bij.passed());
  long long total =
      static_cast<long long>(periodic_orbits_up_to(spec.A, 6).size()) +
      static_cast<long long>(periodic_orbits_up_to(spec.B, 6).size());
  CHECK(bij.details == std::to_string(total) + " orbits matched");

  CertReport len = check_orbit_length(spec, 6);
  CHECK(len.passed());
  CHECK(len.name == "orbit_length");

  // identity specs: the induced map is the identity on orbits
  std::mt19937 rng(64);
  ShiftSpace S = random_space(rng, 3);
  CoeSpec id = identity_spec(S);
  for (const Orbit& g : periodic_orbits_up_to(S, 5)) {
    CHECK(xi_h(id, g) == g);
  }
  CHECK(check_orbit_bijection(id, 5).passed());
  CHECK(check_orbit_length(id, 5).passed());
}

TEST_CASE("return pairs and cocycle positivity") {
  CoeSpec spec = fixture_spec();
  EvPeriodicPoint x = make_ev_periodic(spec.A, {1}, {1, 2});
  auto pairs = return_pairs(x, 2);
  REQUIRE(pairs.size() == 4);
  CHECK(pairs[0] == std::pair<long long, long long>{3, 1});
  CHECK(pairs[1] == std::pair<long long, long long>{5, 1});
  CHECK(pairs[2] == std::pair<long long, long long>{4, 2});
  CHECK(pairs[3] == std::pair<long long, long long>{6, 2});
  for (auto [r, s] : pairs) {
    CHECK(shift_evp(x, r).same_point(shift_evp(x, s)));
  }

  CertReport rep = check_cor_positive(spec, 6);
  CHECK(rep.passed());
  CHECK(rep.name == "cocycle_positivity");
  CHECK(check_cor_positive(mirror(spec), 6).passed());
}

TEST_SUITE_END();
