// coeq — exact certificates for continuous orbit equivalences of one-sided
// topological Markov shifts.
//
// Subcommands:
//   verify      run the full certificate suite on an equivalence spec
//   zeta        (weighted) zeta series of a shift / cocycle
//   cohomology  decide positivity / order-unit / coboundary questions
//   measure     pushforward checks for a Markov measure through a spec
//   orbits      enumerate periodic orbits, optionally through the orbit map
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 malformed input
// (schema/usage), 3 semantic validation error (bad matrix, null cycle,
// weight not an order unit, ...).

#include "coeq/coe.hpp"
#include "coeq/cohomology.hpp"
#include "coeq/cyl_fn.hpp"
#include "coeq/error.hpp"
#include "coeq/json_io.hpp"
#include "coeq/measures.hpp"
#include "coeq/numeric.hpp"
#include "coeq/transfer.hpp"
#include "coeq/zeta.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using coeq::CertReport;
using coeq::CylFn;
using coeq::Json;

struct GlobalOptions {
  std::string out;            // report destination; empty = stdout
  std::string format = "json";
  bool timings = false;
  int threads = 1;  // reserved; execution is single-threaded
};

// Tracks every file the invocation read, with a content digest, so reports
// pin down their inputs exactly.
class InputLog {
 public:
  Json load(const std::string& role, const std::string& path) {
    const std::string bytes = coeq::read_file_bytes(path);
    digests_[role] = Json{{"path", path}, {"fnv1a64", coeq::fnv1a_hex(bytes)}};
    return coeq::load_json_file(path);
  }
  Json to_json() const {
    Json j = Json::object();
    for (const auto& [role, entry] : digests_) j[role] = entry;
    return j;
  }

 private:
  std::map<std::string, Json> digests_;
};

void render_checks_text(std::ostream& os, const Json& checks) {
  for (const Json& c : checks) {
    const std::string verdict = c.at("verdict").get<std::string>();
    std::string line = verdict == "pass" ? "PASS" : (verdict == "skipped" ? "SKIP" : "FAIL");
    os << line << " " << c.at("name").get<std::string>();
    if (c.contains("details")) {
      os << " — " << c.at("details").get<std::string>();
    }
    if (c.contains("witness")) {
      os << " [witness: " << c.at("witness").get<std::string>() << "]";
    }
    os << "\n";
  }
}

void render_text(std::ostream& os, const Json& report) {
  os << "tool: " << report.at("tool").get<std::string>() << "\n";
  if (report.contains("inputs")) {
    for (const auto& [role, entry] : report.at("inputs").items()) {
      os << role << ": " << entry.at("path").get<std::string>() << " (fnv1a64 "
         << entry.at("fnv1a64").get<std::string>() << ")\n";
    }
  }
  for (const char* key : {"char_reciprocal", "det_at_one", "series",
                          "weighted_series", "weight", "min_cycle_mean",
                          "period_bound", "mass", "question", "answer"}) {
    if (!report.contains(key)) continue;
    const Json& v = report.at(key);
    os << key << ": ";
    if (v.is_string()) {
      os << v.get<std::string>();
    } else {
      os << v.dump();
    }
    os << "\n";
  }
  if (report.contains("decision")) os << "decision: " << report.at("decision").dump(2) << "\n";
  if (report.contains("orbit_count")) os << "orbit_count: " << report.at("orbit_count").dump() << "\n";
  if (report.contains("checks")) render_checks_text(os, report.at("checks"));
  if (report.contains("verdict")) {
    os << "verdict: " << report.at("verdict").get<std::string>() << "\n";
  }
  if (report.contains("runtime_ms")) {
    os << "runtime_ms: " << report.at("runtime_ms").dump() << "\n";
  }
}

// Writes the report and returns the process exit code.
int emit(const GlobalOptions& g, Json report, bool failed,
         long long runtime_ms) {
  if (g.timings) report["runtime_ms"] = runtime_ms;
  std::ostringstream rendered;
  if (g.format == "text") {
    render_text(rendered, report);
  } else {
    rendered << report.dump(2) << "\n";
  }
  if (g.out.empty()) {
    std::cout << rendered.str();
  } else {
    std::ofstream f(g.out, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << g.out << "\n";
      return 2;
    }
    f << rendered.str();
  }
  return failed ? 1 : 0;
}

Json checks_to_json(const std::vector<CertReport>& checks, bool* all_pass) {
  std::vector<CertReport> sorted = checks;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CertReport& a, const CertReport& b) {
                     return a.name < b.name;
                   });
  Json arr = Json::array();
  *all_pass = true;
  for (const CertReport& r : sorted) {
    arr.push_back(coeq::report_to_json(r));
    if (r.verdict == CertReport::Verdict::Fail) *all_pass = false;
  }
  return arr;
}

// Aggregates the per-point mixed exponent identity into one report.
CertReport klp_suite(const coeq::CoeSpec& spec, int bound) {
  const int point_bound = std::min(bound, 5);
  long long instances = 0;
  for (const coeq::EvPeriodicPoint& x :
       coeq::eventually_periodic_points(spec.A, point_bound)) {
    for (long long p = 1; p <= 3; ++p) {
      CertReport r = coeq::check_klp(spec, x, p);
      if (!r.passed()) return r;
      ++instances;
    }
  }
  return coeq::make_pass(
      "exponent_identity_mixed",
      "mixed exponent identity k2^{l1^p}(h x) + l2^{k1^p}(h sigma^p x) + p "
      "== k2^{k1^p}(h sigma^p x) + l2^{l1^p}(h x), plus its mirror at h(x)",
      point_bound, std::to_string(instances) + " instances certified");
}

// Aggregates the common-tail equation over sampled pairs into one report.
// Each pair (z, q) is built so that sigma^p(x) == sigma^q(z) holds exactly:
// z = sigma^{p-q}(x); purely periodic points also pair with themselves one
// full period apart.
CertReport taileq_suite(const coeq::CoeSpec& spec, int bound) {
  const int point_bound = std::min(bound, 4);
  long long instances = 0;
  for (const coeq::EvPeriodicPoint& x :
       coeq::eventually_periodic_points(spec.A, point_bound)) {
    for (long long p = 0; p <= 2; ++p) {
      for (long long q = 0; q <= p; ++q) {
        CertReport r =
            coeq::check_taileq(spec, x, coeq::shift_evp(x, p - q), p, q);
        if (!r.passed()) return r;
        ++instances;
      }
    }
    if (x.purely_periodic()) {
      CertReport r = coeq::check_taileq(
          spec, x, x, static_cast<long long>(x.cycle.size()), 0);
      if (!r.passed()) return r;
      ++instances;
    }
  }
  return coeq::make_pass(
      "tail_equation",
      "points with a common tail have h-images with a common tail at the "
      "exponent-mixed shifts",
      point_bound, std::to_string(instances) + " instances certified");
}

// Runs one check, converting semantic Errors into a failing report: once a
// spec is well-formed, inconsistent data is a red verdict for that check,
// not a tool abort.  Schema errors still propagate.
template <typename Fn>
CertReport guarded(const std::string& name, Fn fn) {
  try {
    return fn();
  } catch (const coeq::Error& e) {
    if (e.code() == coeq::ErrorCode::SchemaError) throw;
    return coeq::make_fail(
        name, "check aborted: the spec's data is inconsistent", 0, "",
        e.what());
  }
}

int run_verify(const GlobalOptions& g, InputLog& inputs,
               const std::string& spec_path, int bound, int depth,
               int truncate, int max_period) {
  const auto t0 = std::chrono::steady_clock::now();
  const coeq::CoeSpec spec = coeq::parse_coe_spec(inputs.load("spec", spec_path));
  std::vector<CertReport> checks;
  checks.push_back(guarded("coboundary_transfer", [&] {
    return coeq::check_coboundary_lemma(spec, depth);
  }));
  checks.push_back(guarded("cocycle_positivity", [&] {
    return coeq::check_cor_positive(spec, bound);
  }));
  checks.push_back(
      guarded("determinant_invariant", [&] { return coeq::det_invariant(spec); }));
  checks.push_back(
      guarded("exponent_identity_mixed", [&] { return klp_suite(spec, bound); }));
  checks.push_back(guarded("omega_transport", [&] {
    return coeq::check_omega_transport(spec, bound, depth);
  }));
  checks.push_back(guarded("orbit_bijection", [&] {
    return coeq::check_orbit_bijection(spec, max_period);
  }));
  checks.push_back(
      guarded("orbit_equations", [&] { return coeq::verify_coe(spec, bound); }));
  checks.push_back(guarded("orbit_length", [&] {
    return coeq::check_orbit_length(spec, max_period);
  }));
  checks.push_back(guarded("order_isomorphism", [&] {
    return coeq::check_order_iso(spec, depth);
  }));
  checks.push_back(guarded("positivity_criteria_agree", [&] {
    return coeq::check_sixeq(spec, bound, depth);
  }));
  checks.push_back(
      guarded("tail_equation", [&] { return taileq_suite(spec, bound); }));
  checks.push_back(guarded("transfer_composition", [&] {
    return coeq::check_composition(spec, depth);
  }));
  checks.push_back(guarded("weighted_zeta_identity", [&] {
    return coeq::check_zeta_identity(spec, truncate);
  }));

  bool all_pass = false;
  Json report;
  report["tool"] = "verify";
  report["inputs"] = inputs.to_json();
  report["options"] = Json{{"bound", bound},
                           {"depth", depth},
                           {"truncate", truncate},
                           {"max_period", max_period}};
  report["checks"] = checks_to_json(checks, &all_pass);
  report["verdict"] = all_pass ? "pass" : "fail";
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return emit(g, std::move(report), !all_pass, ms);
}

Json poly_to_json(const coeq::IntPolynomial& p) {
  Json coeffs = Json::array();
  for (const coeq::BigInt& c : p.coeffs) coeffs.push_back(coeq::to_string(c));
  return Json{{"coeffs", std::move(coeffs)}, {"rendered", p.to_string()}};
}

int run_zeta(const GlobalOptions& g, InputLog& inputs,
             const std::string& matrix_path, const std::string& spec_path,
             const std::string& weight, int truncate, int extra_periods) {
  const auto t0 = std::chrono::steady_clock::now();
  Json report;
  report["tool"] = "zeta";
  report["options"] = Json{{"truncate", truncate},
                           {"extra_periods", extra_periods}};
  bool failed = false;

  std::optional<CylFn> weight_fn;
  if (weight == "c1" || weight == "c2") {
    if (spec_path.empty()) {
      coeq::raise(coeq::ErrorCode::SchemaError,
                  "--weight " + weight + " needs --spec");
    }
    const coeq::CoeSpec spec =
        coeq::parse_coe_spec(inputs.load("spec", spec_path));
    weight_fn = coeq::cocycle_c(spec, weight == "c1" ? 1 : 2);
    report["weight"] = weight;
  } else if (!weight.empty()) {
    if (matrix_path.empty()) {
      coeq::raise(coeq::ErrorCode::SchemaError,
                  "--weight FILE needs the matrix argument");
    }
    const coeq::ShiftSpace S =
        coeq::parse_matrix(inputs.load("matrix", matrix_path));
    weight_fn = coeq::parse_cylfn(inputs.load("weight", weight), S);
    report["weight"] = weight;
  }

  if (weight_fn) {
    const coeq::CycleMean cm = coeq::min_cycle_mean(*weight_fn);
    const coeq::FormalSeries wz =
        coeq::weighted_zeta(*weight_fn, truncate, extra_periods);
    report["min_cycle_mean"] = coeq::to_string(cm.mean);
    report["period_bound"] = static_cast<long long>(
        coeq::floor_div(coeq::Rational(truncate) / cm.mean)
            .convert_to<long long>() +
        extra_periods);
    report["weighted_series"] = coeq::series_to_json(wz);
  } else {
    if (matrix_path.empty()) {
      coeq::raise(coeq::ErrorCode::SchemaError,
                  "zeta needs a matrix argument (or --spec with --weight)");
    }
    const coeq::ShiftSpace S =
        coeq::parse_matrix(inputs.load("matrix", matrix_path));
    const coeq::IntPolynomial p = coeq::char_reciprocal(S);
    const coeq::FormalSeries z = coeq::zeta_series(S, truncate);
    const coeq::FormalSeries z2 = coeq::zeta_exp_trace(S, truncate);
    report["char_reciprocal"] = poly_to_json(p);
    report["det_at_one"] = coeq::to_string(p.at(1));
    report["series"] = coeq::series_to_json(z);
    const bool agree = z == z2;
    report["routes_agree"] = agree;
    if (!agree) failed = true;
  }
  report["inputs"] = inputs.to_json();
  report["verdict"] = failed ? "fail" : "pass";
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return emit(g, std::move(report), failed, ms);
}

Json decision_to_json(const coeq::ClassDecision& d) {
  Json j;
  j["verdict"] = coeq::class_verdict_name(d.verdict);
  if (d.witness_orbit) {
    j["witness_orbit"] = coeq::orbit_to_json(*d.witness_orbit);
    j["witness_sum"] = d.witness_sum;
  }
  if (d.cycle_mean) j["cycle_mean"] = coeq::to_string(*d.cycle_mean);
  if (d.achieving_cycle) {
    j["achieving_cycle"] = coeq::orbit_to_json(*d.achieving_cycle);
  }
  if (d.potential) j["potential"] = coeq::cylfn_to_json(*d.potential);
  return j;
}

int run_cohomology(const GlobalOptions& g, InputLog& inputs,
                   const std::string& matrix_path, const std::string& fn_path,
                   const std::string& question,
                   const std::string& compare_path) {
  const auto t0 = std::chrono::steady_clock::now();
  const coeq::ShiftSpace S =
      coeq::parse_matrix(inputs.load("matrix", matrix_path));
  const CylFn f = coeq::parse_cylfn(inputs.load("fn", fn_path), S);

  coeq::ClassDecision decision;
  if (question == "positive") {
    decision = coeq::is_positive_class(f);
  } else if (question == "order-unit") {
    decision = coeq::is_order_unit(f);
  } else if (question == "coboundary") {
    decision = coeq::coboundary_witness(f);
  } else if (question == "equal") {
    if (compare_path.empty()) {
      coeq::raise(coeq::ErrorCode::SchemaError,
                  "--question equal needs --compare");
    }
    const CylFn other =
        coeq::parse_cylfn(inputs.load("compare", compare_path), S);
    decision = coeq::classes_equal(f, other);
  } else {
    coeq::raise(coeq::ErrorCode::SchemaError,
                "unknown question: " + question);
  }

  Json report;
  report["tool"] = "cohomology";
  report["inputs"] = inputs.to_json();
  report["question"] = question;
  report["decision"] = decision_to_json(decision);
  report["answer"] = coeq::class_verdict_name(decision.verdict);
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return emit(g, std::move(report), false, ms);
}

int run_measure(const GlobalOptions& g, InputLog& inputs,
                const std::string& spec_path, bool parry,
                const std::string& measure_path, int depth) {
  const auto t0 = std::chrono::steady_clock::now();
  if (parry == !measure_path.empty()) {
    coeq::raise(coeq::ErrorCode::SchemaError,
                "measure needs exactly one of --parry or --measure FILE");
  }
  const coeq::CoeSpec spec =
      coeq::parse_coe_spec(inputs.load("spec", spec_path));
  const coeq::MarkovMeasure mu =
      parry ? coeq::parry_measure(spec.A)
            : coeq::parse_measure(inputs.load("measure", measure_path),
                                  spec.A);
  const coeq::PushedMeasure nu = coeq::pushforward(spec, mu);

  std::vector<CertReport> checks;
  checks.push_back(guarded("pushforward_invariance",
                           [&] { return coeq::check_invariance(nu, depth); }));
  checks.push_back(guarded("pushforward_positivity",
                           [&] { return coeq::check_positivity(nu, depth); }));
  checks.push_back(guarded("pushforward_normalization",
                           [&] { return coeq::check_normalization(nu); }));

  bool all_pass = false;
  Json report;
  report["tool"] = "measure";
  report["inputs"] = inputs.to_json();
  report["options"] = Json{{"depth", depth},
                           {"parry", parry}};
  report["base_measure"] = coeq::measure_to_json(mu);
  report["mass"] = coeq::to_string(
      coeq::eval_pushed(nu, CylFn::constant(spec.B, 1)));
  report["checks"] = checks_to_json(checks, &all_pass);
  report["verdict"] = all_pass ? "pass" : "fail";
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return emit(g, std::move(report), !all_pass, ms);
}

int run_orbits(const GlobalOptions& g, InputLog& inputs,
               const std::string& matrix_path, const std::string& spec_path,
               int max_period) {
  const auto t0 = std::chrono::steady_clock::now();
  Json report;
  report["tool"] = "orbits";
  report["options"] = Json{{"max_period", max_period}};
  bool failed = false;

  std::optional<coeq::CoeSpec> spec;
  coeq::ShiftSpace S = [&] {
    if (!spec_path.empty()) {
      spec = coeq::parse_coe_spec(inputs.load("spec", spec_path));
      return spec->A;
    }
    return coeq::parse_matrix(inputs.load("matrix", matrix_path));
  }();

  const std::vector<coeq::Orbit> orbits =
      coeq::periodic_orbits_up_to(S, max_period);
  report["orbit_count"] = orbits.size();

  // Per-period census, cross-checked against the trace counts: the points of
  // period p are exactly the rotations of orbits whose period divides p.
  std::map<int, long long> census;
  for (const coeq::Orbit& o : orbits) census[o.period()] += 1;
  Json census_json = Json::object();
  for (const auto& [p, count] : census) {
    census_json[std::to_string(p)] = count;
  }
  report["census"] = std::move(census_json);
  bool trace_ok = true;
  for (int p = 1; p <= max_period; ++p) {
    coeq::BigInt expected = 0;
    for (const auto& [d, count] : census) {
      if (p % d == 0) expected += coeq::BigInt(d) * count;
    }
    if (expected != coeq::per_count(S, p)) trace_ok = false;
  }
  report["trace_check"] = trace_ok ? "pass" : "fail";
  if (!trace_ok) failed = true;

  constexpr size_t kListCap = 10000;
  if (orbits.size() <= kListCap) {
    Json list = Json::array();
    for (const coeq::Orbit& o : orbits) {
      Json entry = coeq::orbit_to_json(o);
      if (spec) {
        const coeq::Orbit image = coeq::xi_h(*spec, o);
        entry["image"] = coeq::orbit_to_json(image);
        entry["cocycle_sum"] =
            coeq::orbit_sum(coeq::cocycle_c(*spec, 1), o);
      }
      list.push_back(std::move(entry));
    }
    report["orbits"] = std::move(list);
  }
  report["inputs"] = inputs.to_json();
  report["verdict"] = failed ? "fail" : "pass";
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
  return emit(g, std::move(report), failed, ms);
}

int dispatch(int argc, char** argv) {
  CLI::App app{
      "exact certificates for continuous orbit equivalence of one-sided "
      "topological Markov shifts"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand

  GlobalOptions g;
  app.add_option("--out", g.out, "write the report to a file");
  app.add_option("--format", g.format, "report format")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();
  app.add_flag("--timings", g.timings,
               "include wall-clock runtime in the report");
  app.add_option("--threads", g.threads, "reserved; must be >= 1")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // verify
  auto* verify = app.add_subcommand(
      "verify", "run the certificate suite on an equivalence spec");
  std::string v_spec;
  int v_bound = 8, v_depth = 5, v_truncate = 12, v_max_period = 8;
  verify->add_option("spec", v_spec, "equivalence spec (JSON)")->required();
  verify->add_option("--bound", v_bound, "point-size bound for exact checks")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--depth", v_depth, "cylinder depth for function checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--truncate", v_truncate, "zeta truncation degree")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  verify->add_option("--max-period", v_max_period,
                     "orbit period bound for the bijection checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // zeta
  auto* zeta = app.add_subcommand("zeta", "(weighted) zeta series");
  std::string z_matrix, z_spec, z_weight;
  int z_truncate = 12, z_extra = 0;
  zeta->add_option("matrix", z_matrix, "transition matrix (JSON)");
  zeta->add_option("--spec", z_spec,
                   "equivalence spec (for --weight c1 or c2)");
  zeta->add_option("--weight", z_weight,
                   "weight cocycle: c1, c2, or a cylinder-function file");
  zeta->add_option("--truncate", z_truncate, "truncation degree")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  zeta->add_option("--extra-periods", z_extra,
                   "widen the orbit enumeration bound (soundness probe)")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  // cohomology
  auto* cohom = app.add_subcommand(
      "cohomology", "decide ordered-cohomology questions");
  std::string c_matrix, c_fn, c_question, c_compare;
  cohom->add_option("matrix", c_matrix, "transition matrix (JSON)")
      ->required();
  cohom->add_option("--fn", c_fn, "cylinder function (JSON)")->required();
  cohom->add_option("--question", c_question, "question to decide")
      ->required()
      ->check(CLI::IsMember({"positive", "order-unit", "coboundary",
                             "equal"}));
  cohom->add_option("--compare", c_compare,
                    "second function (for --question equal)");

  // measure
  auto* measure = app.add_subcommand(
      "measure", "pushforward checks for a Markov measure");
  std::string m_spec, m_measure;
  bool m_parry = false;
  int m_depth = 4;
  measure->add_option("spec", m_spec, "equivalence spec (JSON)")->required();
  measure->add_flag("--parry", m_parry,
                    "use the measure of maximal entropy on the source");
  measure->add_option("--measure", m_measure, "Markov measure (JSON)");
  measure->add_option("--depth", m_depth, "cylinder depth for the checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  // orbits
  auto* orbits = app.add_subcommand(
      "orbits", "enumerate periodic orbits up to a period bound");
  std::string o_matrix, o_spec;
  int o_max_period = 8;
  orbits->add_option("matrix", o_matrix, "transition matrix (JSON)");
  orbits->add_option("--spec", o_spec,
                     "equivalence spec: also map orbits through it");
  orbits->add_option("--max-period", o_max_period, "period bound")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);  // help text, exit 0
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;  // usage problems are schema errors
  }

  InputLog inputs;
  if (verify->parsed()) {
    return run_verify(g, inputs, v_spec, v_bound, v_depth, v_truncate,
                      v_max_period);
  }
  if (zeta->parsed()) {
    return run_zeta(g, inputs, z_matrix, z_spec, z_weight, z_truncate,
                    z_extra);
  }
  if (cohom->parsed()) {
    return run_cohomology(g, inputs, c_matrix, c_fn, c_question, c_compare);
  }
  if (measure->parsed()) {
    return run_measure(g, inputs, m_spec, m_parry, m_measure, m_depth);
  }
  if (orbits->parsed()) {
    if (o_matrix.empty() && o_spec.empty()) {
      coeq::raise(coeq::ErrorCode::SchemaError,
                  "orbits needs a matrix argument or --spec");
    }
    return run_orbits(g, inputs, o_matrix, o_spec, o_max_period);
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const coeq::Error& e) {
    Json err{{"error", {{"code", coeq::error_code_name(e.code())},
                        {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return e.code() == coeq::ErrorCode::SchemaError ? 2 : 3;
  } catch (const std::exception& e) {
    Json err{{"error", {{"code", "Internal"}, {"message", e.what()}}}};
    std::cerr << err.dump(2) << "\n";
    return 3;
  }
}
