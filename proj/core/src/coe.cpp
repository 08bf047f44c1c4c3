#include "coeq/coe.hpp"

#include <algorithm>
#include <sstream>

namespace coeq {

CoeSpec make_coe_spec(ShiftSpace A, ShiftSpace B, Transducer h,
                      Transducer hinv, CylFn k1, CylFn l1, CylFn k2,
                      CylFn l2) {
  if (h.source() != A || h.target() != B) {
    raise(ErrorCode::InvalidCoeSpec, "h must map X_A to X_B");
  }
  if (hinv.source() != B || hinv.target() != A) {
    raise(ErrorCode::InvalidCoeSpec, "hinv must map X_B to X_A");
  }
  if (k1.space() != A || l1.space() != A) {
    raise(ErrorCode::InvalidCoeSpec, "k1, l1 must live on X_A");
  }
  if (k2.space() != B || l2.space() != B) {
    raise(ErrorCode::InvalidCoeSpec, "k2, l2 must live on X_B");
  }
  for (const CylFn* f : {&k1, &l1, &k2, &l2}) {
    for (const auto& [w, v] : f->table()) {
      if (v < 0) {
        raise(ErrorCode::InvalidCoeSpec,
              "exponent functions must be nonnegative");
      }
    }
  }
  return CoeSpec{std::move(A), std::move(B), std::move(h), std::move(hinv),
                 std::move(k1), std::move(l1), std::move(k2), std::move(l2)};
}

CoeSpec mirror(const CoeSpec& spec) {
  return CoeSpec{spec.B, spec.A, spec.hinv, spec.h,
                 spec.k2, spec.l2, spec.k1, spec.l1};
}

CylFn cocycle_c(const CoeSpec& spec, int side) {
  if (side == 1) return compressed(sub(spec.l1, spec.k1));
  if (side == 2) return compressed(sub(spec.l2, spec.k2));
  raise(ErrorCode::PreconditionFailed, "side must be 1 or 2");
}

namespace {

// One direction of the orbit-equation certificate: for every eventually
// periodic x of size <= bound,
//   sigma_B^{k1(x)}( h(sigma_A(x)) ) == sigma_B^{l1(x)}( h(x) )
// and h^{-1}(h(x)) == x.  Returns an error description for the first
// counterexample, or nullopt.
struct SideFailure {
  std::string message;
};

std::optional<SideFailure> certify_side(const CoeSpec& spec, int bound,
                                        const char* side_name,
                                        long long* points_checked) {
  for (const EvPeriodicPoint& x :
       eventually_periodic_points(spec.A, bound)) {
    ++*points_checked;
    EvPeriodicPoint hx = apply_transducer(spec.h, x);
    EvPeriodicPoint hsx = apply_transducer(spec.h, shift_evp(x, 1));
    long long k = eval(spec.k1, x);
    long long l = eval(spec.l1, x);
    EvPeriodicPoint lhs = shift_evp(hsx, k);
    EvPeriodicPoint rhs = shift_evp(hx, l);
    if (!lhs.same_point(rhs)) {
      std::ostringstream msg;
      msg << side_name << " orbit equation fails at x = " << x.to_string()
          << ": sigma^" << k << "(h(sigma x)) = " << lhs.to_string()
          << " but sigma^" << l << "(h(x)) = " << rhs.to_string();
      return SideFailure{msg.str()};
    }
    EvPeriodicPoint back = apply_transducer(spec.hinv, hx);
    if (!back.same_point(x)) {
      std::ostringstream msg;
      msg << side_name << " round trip fails at x = " << x.to_string()
          << ": inverse image of " << hx.to_string() << " is "
          << back.to_string();
      return SideFailure{msg.str()};
    }
  }
  return std::nullopt;
}

// Prefix-level agreement of the two sides of the orbit equation on every
// cylinder of length d: the emitted prefixes, shifted by k1/l1, must agree on
// their common length.
std::optional<SideFailure> certify_prefixes(const CoeSpec& spec, int d,
                                            const char* side_name,
                                            long long* prefixes_checked) {
  for (const Word& w : admissible_words(spec.A, d)) {
    ++*prefixes_checked;
    long long k = eval_word(spec.k1, w);
    long long l = eval_word(spec.l1, w);
    Word out_x = apply_prefix(spec.h, w);
    Word out_sx = apply_prefix(spec.h, Word(w.begin() + 1, w.end()));
    if (static_cast<long long>(out_sx.size()) < k ||
        static_cast<long long>(out_x.size()) < l) {
      continue;  // cylinder too short to compare after shifting
    }
    Word lhs(out_sx.begin() + k, out_sx.end());
    Word rhs(out_x.begin() + l, out_x.end());
    std::size_t common = std::min(lhs.size(), rhs.size());
    if (!std::equal(lhs.begin(), lhs.begin() + common, rhs.begin())) {
      std::ostringstream msg;
      msg << side_name << " orbit equation fails on the cylinder of "
          << word_to_string(w) << ": emitted prefixes diverge";
      return SideFailure{msg.str()};
    }
  }
  return std::nullopt;
}

std::string orbit_text(const Orbit& gamma) { return gamma.to_string(); }

}  // namespace

CertReport verify_coe(const CoeSpec& spec, int bound) {
  const std::string statement =
      "orbit equations on both sides and both round trips, exact on all "
      "eventually periodic points up to the size bound and on all cylinder "
      "prefixes";
  long long points = 0, prefixes = 0;
  CoeSpec m = mirror(spec);
  int dA = std::max(bound, std::max(spec.k1.depth(), spec.l1.depth()) + 1);
  int dB = std::max(bound, std::max(spec.k2.depth(), spec.l2.depth()) + 1);
  for (const auto& failure :
       {certify_side(spec, bound, "A-side", &points),
        certify_side(m, bound, "B-side", &points),
        certify_prefixes(spec, dA, "A-side", &prefixes),
        certify_prefixes(m, dB, "B-side", &prefixes)}) {
    if (failure) {
      return make_fail("orbit_equations", statement, bound, failure->message);
    }
  }
  std::ostringstream details;
  details << points << " points and " << prefixes
          << " cylinder prefixes certified";
  return make_pass("orbit_equations", statement, bound, details.str());
}

CertReport check_cocycle_uniqueness(const CoeSpec& spec, const CylFn& k1_alt,
                                    const CylFn& l1_alt, int bound) {
  // The alternative data must itself satisfy the orbit equation before any
  // uniqueness claim makes sense.
  for (const EvPeriodicPoint& x :
       eventually_periodic_points(spec.A, bound)) {
    long long k = eval(k1_alt, x);
    long long l = eval(l1_alt, x);
    if (k < 0 || l < 0) {
      raise(ErrorCode::AlternativeCocycleInvalid,
            "alternative exponents must be nonnegative");
    }
    EvPeriodicPoint lhs = shift_evp(apply_transducer(spec.h, shift_evp(x, 1)), k);
    EvPeriodicPoint rhs = shift_evp(apply_transducer(spec.h, x), l);
    if (!lhs.same_point(rhs)) {
      raise(ErrorCode::AlternativeCocycleInvalid,
            "alternative exponent data fails the orbit equation at x = " +
                x.to_string());
    }
  }
  const std::string statement =
      "any exponent data satisfying the orbit equation has the same "
      "difference cocycle: l1' - k1' == l1 - k1";
  CylFn lhs = sub(l1_alt, k1_alt);
  CylFn rhs = sub(spec.l1, spec.k1);
  if (equal_as_functions(lhs, rhs)) {
    return make_pass("cocycle_uniqueness", statement, bound);
  }
  return make_fail("cocycle_uniqueness", statement, bound,
                   "difference cocycles differ: " + compressed(lhs).to_string() +
                       " vs " + compressed(rhs).to_string());
}

CertReport check_taileq(const CoeSpec& spec, const EvPeriodicPoint& x,
                        const EvPeriodicPoint& z, long long p, long long q) {
  if (p < 0 || q < 0 || !shift_evp(x, p).same_point(shift_evp(z, q))) {
    raise(ErrorCode::PreconditionFailed,
          "need sigma^p(x) == sigma^q(z); got x = " + x.to_string() +
              ", z = " + z.to_string());
  }
  const std::string statement =
      "points with a common tail have h-images with a common tail at the "
      "exponent-mixed shifts";
  long long l1p = birkhoff_at(spec.l1, x, p);
  long long k1p = birkhoff_at(spec.k1, x, p);
  long long l1q = birkhoff_at(spec.l1, z, q);
  long long k1q = birkhoff_at(spec.k1, z, q);
  EvPeriodicPoint lhs = shift_evp(apply_transducer(spec.h, x), l1p + k1q);
  EvPeriodicPoint rhs = shift_evp(apply_transducer(spec.h, z), k1p + l1q);
  std::ostringstream inst;
  inst << "x = " << x.to_string() << ", z = " << z.to_string() << ", p = " << p
       << ", q = " << q;
  if (lhs.same_point(rhs)) {
    return make_pass("tail_equation", statement, std::max(p, q), inst.str());
  }
  return make_fail("tail_equation", statement, std::max(p, q),
                   inst.str() + ": " + lhs.to_string() + " != " + rhs.to_string());
}

namespace {

// Both sides of the mixed exponent identity at x for one p.
std::pair<long long, long long> klp_sides(const CoeSpec& spec,
                                          const EvPeriodicPoint& x,
                                          long long p) {
  long long l1p = birkhoff_at(spec.l1, x, p);
  long long k1p = birkhoff_at(spec.k1, x, p);
  EvPeriodicPoint hx = apply_transducer(spec.h, x);
  EvPeriodicPoint hspx = apply_transducer(spec.h, shift_evp(x, p));
  long long lhs = birkhoff_at(spec.k2, hx, l1p) +
                  birkhoff_at(spec.l2, hspx, k1p) + p;
  long long rhs = birkhoff_at(spec.k2, hspx, k1p) +
                  birkhoff_at(spec.l2, hx, l1p);
  return {lhs, rhs};
}

}  // namespace

CertReport check_klp(const CoeSpec& spec, const EvPeriodicPoint& x,
                     long long p) {
  if (p < 0) raise(ErrorCode::PreconditionFailed, "p must be >= 0");
  const std::string statement =
      "mixed exponent identity k2^{l1^p}(h x) + l2^{k1^p}(h sigma^p x) + p == "
      "k2^{k1^p}(h sigma^p x) + l2^{l1^p}(h x), plus its mirror at h(x)";
  auto [lhs_a, rhs_a] = klp_sides(spec, x, p);
  CoeSpec m = mirror(spec);
  EvPeriodicPoint y = apply_transducer(spec.h, x);
  auto [lhs_b, rhs_b] = klp_sides(m, y, p);
  std::ostringstream inst;
  inst << "x = " << x.to_string() << ", p = " << p << ": A-side " << lhs_a
       << " == " << rhs_a << ", B-side " << lhs_b << " == " << rhs_b;
  if (lhs_a == rhs_a && lhs_b == rhs_b) {
    return make_pass("exponent_identity_mixed", statement, p, inst.str());
  }
  return make_fail("exponent_identity_mixed", statement, p, inst.str());
}

TwoSidedPeriodicPt psi_h(const CoeSpec& spec, const EvPeriodicPoint& x,
                         long long p) {
  if (!x.purely_periodic()) {
    raise(ErrorCode::NotPeriodic, "point has a transient: " + x.to_string());
  }
  long long period = static_cast<long long>(x.cycle.size());
  if (p <= 0 || p % period != 0) {
    raise(ErrorCode::NotPeriodic,
          "p = " + std::to_string(p) + " is not a multiple of the period " +
              std::to_string(period));
  }
  long long k1p = birkhoff_at(spec.k1, x, p);
  long long l1p = birkhoff_at(spec.l1, x, p);
  long long c1p = l1p - k1p;
  if (c1p <= 0) {
    raise(ErrorCode::OrbitEquationViolated,
          "cocycle sum over the orbit is not positive at " + x.to_string());
  }
  EvPeriodicPoint z = shift_evp(apply_transducer(spec.h, x), k1p);
  long long zp = static_cast<long long>(z.cycle.size());
  if (!z.purely_periodic() || c1p % zp != 0) {
    raise(ErrorCode::OrbitEquationViolated,
          "image tail is not a periodic point of period dividing the cocycle "
          "sum at " + x.to_string());
  }
  // The two-sided image is pinned by: shifting its one-sided restriction by
  // k1p must give z.  Rotating z's cycle right by k1p does exactly that.
  Word cycle = rotate_left(z.cycle, ((-k1p) % zp + zp) % zp);
  return extend_two_sided(make_ev_periodic(spec.B, Word{}, cycle));
}

Orbit xi_h(const CoeSpec& spec, const Orbit& gamma) {
  std::optional<Orbit> image;
  for (int r = 0; r < gamma.period(); ++r) {
    EvPeriodicPoint x =
        make_ev_periodic(spec.A, Word{}, rotate_left(gamma.cycle, r));
    TwoSidedPeriodicPt y = psi_h(spec, x, gamma.period());
    if (!image) {
      image = y.orbit;
    } else if (*image != y.orbit) {
      raise(ErrorCode::OrbitEquationViolated,
            "representatives of " + orbit_text(gamma) +
                " map to different orbits");
    }
  }
  return *image;
}

CertReport check_orbit_bijection(const CoeSpec& spec, int P) {
  const std::string statement =
      "the induced orbit maps are mutually inverse bijections on orbits up to "
      "the period bound";
  CoeSpec m = mirror(spec);
  long long matched = 0;
  for (const Orbit& gamma : periodic_orbits_up_to(spec.A, P)) {
    Orbit image = xi_h(spec, gamma);
    Orbit back = xi_h(m, image);
    if (back != gamma) {
      return make_fail("orbit_bijection", statement, P,
                       "A-orbit " + orbit_text(gamma) + " maps to " +
                           orbit_text(image) + " and back to " +
                           orbit_text(back));
    }
    ++matched;
  }
  for (const Orbit& delta : periodic_orbits_up_to(spec.B, P)) {
    Orbit image = xi_h(m, delta);
    Orbit back = xi_h(spec, image);
    if (back != delta) {
      return make_fail("orbit_bijection", statement, P,
                       "B-orbit " + orbit_text(delta) + " maps to " +
                           orbit_text(image) + " and back to " +
                           orbit_text(back));
    }
    ++matched;
  }
  return make_pass("orbit_bijection", statement, P,
                   std::to_string(matched) + " orbits matched");
}

CertReport check_orbit_length(const CoeSpec& spec, int P) {
  const std::string statement =
      "the image orbit's period equals the cocycle sum over the source orbit";
  CylFn c1 = cocycle_c(spec, 1);
  long long checked = 0;
  for (const Orbit& gamma : periodic_orbits_up_to(spec.A, P)) {
    Orbit image = xi_h(spec, gamma);
    long long expected = orbit_sum(c1, gamma);
    if (image.period() != expected) {
      return make_fail("orbit_length", statement, P,
                       "orbit " + orbit_text(gamma) + " maps to " +
                           orbit_text(image) + " of period " +
                           std::to_string(image.period()) +
                           ", cocycle sum is " + std::to_string(expected));
    }
    ++checked;
  }
  return make_pass("orbit_length", statement, P,
                   std::to_string(checked) + " orbits checked");
}

std::vector<std::pair<long long, long long>> return_pairs(
    const EvPeriodicPoint& x, int reps) {
  std::vector<std::pair<long long, long long>> pairs;
  long long t = static_cast<long long>(x.transient.size());
  long long period = static_cast<long long>(x.cycle.size());
  for (long long s : {t, t + 1}) {
    for (int n = 1; n <= reps; ++n) {
      pairs.emplace_back(s + n * period, s);
    }
  }
  return pairs;
}

CertReport check_cor_positive(const CoeSpec& spec, int bound) {
  const std::string statement =
      "along periodic returns the cocycle is strictly positive: "
      "c1^{r-s}(sigma^s x) > 0 and l1^r(x) + k1^s(x) > k1^r(x) + l1^s(x)";
  CylFn c1 = cocycle_c(spec, 1);
  long long instances = 0;
  for (const EvPeriodicPoint& x :
       eventually_periodic_points(spec.A, bound)) {
    for (auto [r, s] : return_pairs(x, 2)) {
      ++instances;
      long long cs = birkhoff_at(c1, shift_evp(x, s), r - s);
      long long l1r = birkhoff_at(spec.l1, x, r);
      long long l1s = birkhoff_at(spec.l1, x, s);
      long long k1r = birkhoff_at(spec.k1, x, r);
      long long k1s = birkhoff_at(spec.k1, x, s);
      if (cs <= 0 || l1r + k1s <= k1r + l1s) {
        std::ostringstream msg;
        msg << "x = " << x.to_string() << ", r = " << r << ", s = " << s
            << ": c1 sum " << cs << ", l1^r+k1^s = " << (l1r + k1s)
            << ", k1^r+l1^s = " << (k1r + l1s);
        return make_fail("cocycle_positivity", statement, bound, msg.str());
      }
    }
  }
  return make_pass("cocycle_positivity", statement, bound,
                   std::to_string(instances) + " return pairs checked");
}

}  // namespace coeq
