#include "coeq/transfer.hpp"

#include <algorithm>
#include <sstream>

namespace coeq {

namespace {

long long max_value(const CylFn& f) {
  long long m = 0;
  for (const auto& [w, v] : f.table()) m = std::max(m, v);
  return m;
}

// Indicators of all cylinders of depth 1..D, in (depth, word) order.
std::vector<CylFn> indicator_family(const ShiftSpace& S, int D) {
  std::vector<CylFn> fns;
  for (int k = 1; k <= D; ++k) {
    for (const Word& w : admissible_words(S, k)) {
      fns.push_back(CylFn::indicator(S, w));
    }
  }
  return fns;
}

}  // namespace

CylFn psi_transfer(const CoeSpec& spec, const CylFn& f) {
  if (f.space() != spec.B) {
    raise(ErrorCode::SpaceMismatch, "psi_transfer expects a function on X_B");
  }
  int fd = f.depth();
  long long Lmax = max_value(spec.l1);
  long long Kmax = max_value(spec.k1);
  // Depth with guaranteed emitted prefixes long enough for every window in
  // both sums; required_input_depth over-approximates safely.
  int d = std::max({spec.k1.depth(), spec.l1.depth(), 1,
                    required_input_depth(spec.h, static_cast<int>(Lmax) + fd),
                    1 + required_input_depth(spec.h, static_cast<int>(Kmax) + fd)});
  std::map<Word, long long> table;
  for (const Word& w : admissible_words(spec.A, d)) {
    long long l1v = eval_word(spec.l1, w);
    long long k1v = eval_word(spec.k1, w);
    Word out_x = apply_prefix(spec.h, w);
    Word out_sx = apply_prefix(spec.h, Word(w.begin() + 1, w.end()));
    long long value = 0;
    for (long long i = 0; i < l1v; ++i) {
      value += eval_word(f, Word(out_x.begin() + i, out_x.begin() + i + fd));
    }
    for (long long j = 0; j < k1v; ++j) {
      value -= eval_word(f, Word(out_sx.begin() + j, out_sx.begin() + j + fd));
    }
    table[w] = value;
  }
  return compressed(CylFn(spec.A, d, std::move(table)));
}

CylFn psi_transfer_inv(const CoeSpec& spec, const CylFn& g) {
  return psi_transfer(mirror(spec), g);
}

CylFn compose_with_h(const CoeSpec& spec, const CylFn& f) {
  if (f.space() != spec.B) {
    raise(ErrorCode::SpaceMismatch, "compose_with_h expects a function on X_B");
  }
  if (f.depth() == 0) {
    return CylFn::constant(spec.A, f.table().at(Word{}));
  }
  int d = std::max(1, required_input_depth(spec.h, f.depth()));
  std::map<Word, long long> table;
  for (const Word& w : admissible_words(spec.A, d)) {
    Word out = apply_prefix(spec.h, w);
    table[w] = eval_word(f, Word(out.begin(), out.begin() + f.depth()));
  }
  return compressed(CylFn(spec.A, d, std::move(table)));
}

CylFn compose_with_hinv(const CoeSpec& spec, const CylFn& g) {
  return compose_with_h(mirror(spec), g);
}

CertReport check_composition(const CoeSpec& spec, int D) {
  const std::string statement =
      "the transfer maps compose to the identity on indicator functions: "
      "Psi_h(Psi_hinv(chi)) == chi and Psi_hinv(Psi_h(chi)) == chi";
  long long checked = 0;
  for (const CylFn& chi : indicator_family(spec.A, D)) {
    CylFn round = psi_transfer(spec, psi_transfer_inv(spec, chi));
    if (!equal_as_functions(round, chi)) {
      return make_fail("transfer_composition", statement, D,
                       "A-side indicator " + chi.to_string() +
                           " round-trips to " + round.to_string());
    }
    ++checked;
  }
  for (const CylFn& chi : indicator_family(spec.B, D)) {
    CylFn round = psi_transfer_inv(spec, psi_transfer(spec, chi));
    if (!equal_as_functions(round, chi)) {
      return make_fail("transfer_composition", statement, D,
                       "B-side indicator " + chi.to_string() +
                           " round-trips to " + round.to_string());
    }
    ++checked;
  }
  return make_pass("transfer_composition", statement, D,
                   std::to_string(checked) + " indicators round-tripped");
}

CertReport check_coboundary_lemma(const CoeSpec& spec, int D) {
  const std::string statement =
      "transfer of a coboundary: Psi(f - f o sigma) == f o h - f o h o sigma";
  long long checked = 0;
  const CoeSpec m = mirror(spec);
  for (const CoeSpec* side : {&spec, &m}) {
    for (const CylFn& f : indicator_family(side->B, D)) {
      CylFn lhs = psi_transfer(*side, sub(f, compose_shift(f)));
      CylFn fh = compose_with_h(*side, f);
      CylFn rhs = sub(fh, compose_shift(fh));
      if (!equal_as_functions(lhs, rhs)) {
        return make_fail("coboundary_transfer", statement, D,
                         "fails for indicator " + f.to_string());
      }
      ++checked;
    }
  }
  return make_pass("coboundary_transfer", statement, D,
                   std::to_string(checked) + " coboundaries transported");
}

CertReport check_order_iso(const CoeSpec& spec, int D,
                           const std::vector<CylFn>& extra_samples) {
  const std::string statement =
      "the transfer maps preserve positivity of classes, and the difference "
      "cocycles are order units";
  for (int side = 1; side <= 2; ++side) {
    ClassDecision unit = is_order_unit(cocycle_c(spec, side));
    if (unit.verdict != ClassVerdict::OrderUnit) {
      return make_fail("order_isomorphism", statement, D,
                       "difference cocycle c" + std::to_string(side) +
                           " is not an order unit: " + unit.to_string());
    }
  }
  std::vector<CylFn> samples = indicator_family(spec.B, D);
  {
    std::vector<CylFn> a_side = indicator_family(spec.A, D);
    samples.insert(samples.end(), a_side.begin(), a_side.end());
    samples.insert(samples.end(), extra_samples.begin(), extra_samples.end());
  }
  long long transported = 0, skipped = 0;
  for (const CylFn& f : samples) {
    bool on_B = (f.space() == spec.B);
    if (!on_B && f.space() != spec.A) {
      raise(ErrorCode::SpaceMismatch, "sample lives on neither side");
    }
    if (is_positive_class(f).verdict != ClassVerdict::Positive) {
      ++skipped;  // hypothesis unmet; no claim
      continue;
    }
    CylFn image = on_B ? psi_transfer(spec, f) : psi_transfer_inv(spec, f);
    ClassDecision dec = is_positive_class(image);
    if (dec.verdict != ClassVerdict::Positive) {
      return make_fail("order_isomorphism", statement, D,
                       "positive sample " + f.to_string() +
                           " maps to a non-positive class: " + dec.to_string());
    }
    ++transported;
  }
  std::ostringstream details;
  details << transported << " positive samples transported, " << skipped
          << " skipped (hypothesis unmet)";
  if (transported == 0) {
    CertReport r = make_pass("order_isomorphism", statement, D, details.str());
    r.verdict = CertReport::Verdict::Skipped;
    return r;
  }
  return make_pass("order_isomorphism", statement, D, details.str());
}

CertReport check_omega_transport(const CoeSpec& spec, int bound, int D) {
  const std::string statement =
      "omega invariants transport through the transfer map: "
      "omega_{Psi(f)}(x; r, s) == omega_f(z; r', s') with z, r', s' from the "
      "exponent data, and the return cocycle recovers r - s";
  std::vector<CylFn> fns = indicator_family(spec.B, D);
  fns.push_back(CylFn::constant(spec.B, 1));
  std::vector<CylFn> transfers;
  transfers.reserve(fns.size());
  for (const CylFn& f : fns) transfers.push_back(psi_transfer(spec, f));
  CylFn c2 = cocycle_c(spec, 2);
  long long instances = 0;
  for (const EvPeriodicPoint& x :
       eventually_periodic_points(spec.A, bound)) {
    EvPeriodicPoint hx = apply_transducer(spec.h, x);
    for (auto [r, s] : return_pairs(x, 2)) {
      long long q = r - s;
      EvPeriodicPoint xs = shift_evp(x, s);
      long long rp = birkhoff_at(spec.l1, xs, q);
      long long sp = birkhoff_at(spec.k1, xs, q);
      EvPeriodicPoint z = shift_evp(
          hx, birkhoff_at(spec.l1, x, s) + birkhoff_at(spec.k1, x, s));
      std::ostringstream inst;
      inst << "x = " << x.to_string() << ", r = " << r << ", s = " << s
           << ", z = " << z.to_string() << ", r' = " << rp << ", s' = " << sp;
      if (rp <= sp) {
        return make_fail("omega_transport", statement, bound,
                         inst.str() + ": r' <= s'");
      }
      if (!shift_evp(z, rp).same_point(shift_evp(z, sp))) {
        return make_fail("omega_transport", statement, bound,
                         inst.str() + ": sigma^{r'}(z) != sigma^{s'}(z)");
      }
      // Return cocycle on the image side recovers the source return length.
      if (birkhoff_at(c2, shift_evp(z, sp), rp - sp) != q) {
        return make_fail("omega_transport", statement, bound,
                         inst.str() + ": c2 sum over the image return != r - s");
      }
      for (std::size_t fi = 0; fi < fns.size(); ++fi) {
        long long lhs = birkhoff_at(transfers[fi], x, r) -
                        birkhoff_at(transfers[fi], x, s);
        long long rhs =
            birkhoff_at(fns[fi], z, rp) - birkhoff_at(fns[fi], z, sp);
        if (lhs != rhs) {
          return make_fail("omega_transport", statement, bound,
                           inst.str() + ": omega mismatch " +
                               std::to_string(lhs) + " != " +
                               std::to_string(rhs) + " for f = " +
                               fns[fi].to_string());
        }
        ++instances;
      }
    }
  }
  return make_pass("omega_transport", statement, bound,
                   std::to_string(instances) + " instances certified");
}

CertReport check_sixeq(const CoeSpec& spec, int bound, int D) {
  const std::string statement =
      "the six positivity criteria for the difference cocycle agree: "
      "transfer preserves positive classes; [c1] positive; omega_{c1} > 0; "
      "return sums of c1 > 0; the exponent inequality; r' > s'";
  CylFn c1 = cocycle_c(spec, 1);
  bool b1 = true;
  for (const CylFn& f : indicator_family(spec.B, D)) {
    if (is_positive_class(f).verdict != ClassVerdict::Positive) continue;
    b1 = b1 &&
         (is_positive_class(psi_transfer(spec, f)).verdict ==
          ClassVerdict::Positive);
  }
  bool b2 = (is_positive_class(c1).verdict == ClassVerdict::Positive);
  bool b3 = true, b4 = true, b5 = true, b6 = true;
  for (const EvPeriodicPoint& x :
       eventually_periodic_points(spec.A, bound)) {
    for (auto [r, s] : return_pairs(x, 2)) {
      long long q = r - s;
      EvPeriodicPoint xs = shift_evp(x, s);
      b3 = b3 && (birkhoff_at(c1, x, r) - birkhoff_at(c1, x, s) > 0);
      b4 = b4 && (birkhoff_at(c1, xs, q) > 0);
      b5 = b5 && (birkhoff_at(spec.l1, x, r) + birkhoff_at(spec.k1, x, s) >
                  birkhoff_at(spec.k1, x, r) + birkhoff_at(spec.l1, x, s));
      b6 = b6 && (birkhoff_at(spec.l1, xs, q) > birkhoff_at(spec.k1, xs, q));
    }
  }
  std::ostringstream details;
  details << "criteria = [" << b1 << ", " << b2 << ", " << b3 << ", " << b4
          << ", " << b5 << ", " << b6 << "]";
  bool agree = (b1 == b2) && (b2 == b3) && (b3 == b4) && (b4 == b5) && (b5 == b6);
  if (agree) {
    return make_pass("positivity_criteria_agree", statement, bound,
                     details.str());
  }
  return make_fail("positivity_criteria_agree", statement, bound,
                   details.str());
}

}  // namespace coeq
