#include "coeq/json_io.hpp"

#include "coeq/error.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace coeq {

namespace {

[[noreturn]] void schema_error(const std::string& msg) {
  raise(ErrorCode::SchemaError, msg);
}

const Json& get_member(const Json& j, const char* key,
                       const std::string& where) {
  if (!j.is_object()) schema_error(where + " must be a JSON object");
  auto it = j.find(key);
  if (it == j.end()) {
    schema_error(where + " is missing the \"" + key + "\" key");
  }
  return *it;
}

int get_int(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema_error(where + " must be an integer");
  return j.get<int>();
}

std::string get_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where + " must be a string");
  return j.get<std::string>();
}

Word parse_word(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where + " must be an array of symbols");
  Word w;
  w.reserve(j.size());
  for (const Json& e : j) {
    w.push_back(get_int(e, where + " entry"));
  }
  return w;
}

Json word_to_json(const Word& w) {
  Json arr = Json::array();
  for (int a : w) arr.push_back(a);
  return arr;
}

Rational parse_rational_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const Error&) {
      schema_error(where + " is not a valid rational: \"" +
                   j.get<std::string>() + "\"");
    }
  }
  schema_error(where + " must be an integer or a rational string");
}

long long parse_table_value(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return j.get<long long>();
  if (j.is_string()) {
    try {
      const BigInt v = parse_bigint(j.get<std::string>());
      return v.convert_to<long long>();
    } catch (...) {
      schema_error(where + " is not a valid integer: \"" +
                   j.get<std::string>() + "\"");
    }
  }
  schema_error(where + " must be an integer");
}

// Digit-string encoding of words ("12" for [1,2]) is only unambiguous for
// alphabets up to 9 symbols.
bool digit_keys_ok(const ShiftSpace& S) { return S.alphabet_size() <= 9; }

std::string word_to_digits(const Word& w) {
  std::string s;
  for (int a : w) s += static_cast<char>('0' + a);
  return s;
}

Word digits_to_word(const std::string& s, const std::string& where) {
  Word w;
  for (char c : s) {
    if (c < '1' || c > '9') {
      schema_error(where + " key \"" + s + "\" is not a digit string");
    }
    w.push_back(c - '0');
  }
  return w;
}

}  // namespace

ShiftSpace parse_matrix(const Json& j) {
  const int n = get_int(get_member(j, "n", "matrix"), "matrix \"n\"");
  const Json& rows = get_member(j, "rows", "matrix");
  if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
    schema_error("matrix \"rows\" must be an array of n rows");
  }
  std::vector<std::vector<int>> entries;
  entries.reserve(n);
  for (const Json& row : rows) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      schema_error("each matrix row must have n entries");
    }
    std::vector<int> r;
    r.reserve(n);
    for (const Json& e : row) {
      const int v = get_int(e, "matrix entry");
      if (v != 0 && v != 1) schema_error("matrix entries must be 0 or 1");
      r.push_back(v);
    }
    entries.push_back(std::move(r));
  }
  return make_shift_space(entries);
}

Json matrix_to_json(const ShiftSpace& S) {
  const int n = S.alphabet_size();
  Json rows = Json::array();
  for (int i = 1; i <= n; ++i) {
    Json r = Json::array();
    for (int j = 1; j <= n; ++j) r.push_back(S.entry(i, j) ? 1 : 0);
    rows.push_back(std::move(r));
  }
  return Json{{"n", n}, {"rows", std::move(rows)}};
}

EvPeriodicPoint parse_point(const Json& j, const ShiftSpace& S) {
  const Word u = parse_word(get_member(j, "transient", "point"),
                            "point \"transient\"");
  const Word v = parse_word(get_member(j, "cycle", "point"),
                            "point \"cycle\"");
  return make_ev_periodic(S, u, v);
}

Json point_to_json(const EvPeriodicPoint& x) {
  return Json{{"transient", word_to_json(x.transient)},
              {"cycle", word_to_json(x.cycle)}};
}

CylFn parse_cylfn(const Json& j, const ShiftSpace& S) {
  const int depth = get_int(get_member(j, "depth", "cylfn"),
                            "cylfn \"depth\"");
  if (depth < 0) schema_error("cylfn \"depth\" must be >= 0");
  const Json& table = get_member(j, "table", "cylfn");
  std::map<Word, long long> values;
  if (table.is_object()) {
    for (auto it = table.begin(); it != table.end(); ++it) {
      const Word w = it.key().empty()
                         ? Word{}
                         : digits_to_word(it.key(), "cylfn table");
      if (static_cast<int>(w.size()) != depth) {
        schema_error("cylfn table key \"" + it.key() +
                     "\" does not have length depth");
      }
      values[w] = parse_table_value(it.value(), "cylfn table value");
    }
  } else if (table.is_array()) {
    for (const Json& entry : table) {
      const Word w = parse_word(get_member(entry, "word", "cylfn table entry"),
                                "cylfn \"word\"");
      if (static_cast<int>(w.size()) != depth) {
        schema_error("cylfn table word " + word_to_string(w) +
                     " does not have length depth");
      }
      const long long v = parse_table_value(
          get_member(entry, "value", "cylfn table entry"), "cylfn \"value\"");
      if (values.count(w)) {
        schema_error("cylfn table repeats the word " + word_to_string(w));
      }
      values[w] = v;
    }
  } else {
    schema_error("cylfn \"table\" must be an object or an array");
  }
  return CylFn(S, depth, std::move(values));
}

Json cylfn_to_json(const CylFn& f) {
  Json j;
  j["depth"] = f.depth();
  if (digit_keys_ok(f.space())) {
    Json table = Json::object();
    for (const auto& [w, v] : f.table()) table[word_to_digits(w)] = v;
    j["table"] = std::move(table);
  } else {
    Json table = Json::array();
    for (const auto& [w, v] : f.table()) {
      table.push_back(Json{{"word", word_to_json(w)}, {"value", v}});
    }
    j["table"] = std::move(table);
  }
  return j;
}

Transducer parse_transducer(const Json& j, const ShiftSpace& source,
                            const ShiftSpace& target) {
  const Json& states_json = get_member(j, "states", "transducer");
  if (!states_json.is_array() || states_json.empty()) {
    schema_error("transducer \"states\" must be a nonempty array");
  }
  std::vector<std::string> states;
  std::map<std::string, int> index;
  for (const Json& s : states_json) {
    const std::string name = get_string(s, "transducer state name");
    if (index.count(name)) {
      schema_error("transducer repeats the state \"" + name + "\"");
    }
    index[name] = static_cast<int>(states.size());
    states.push_back(name);
  }
  const std::string initial =
      get_string(get_member(j, "initial", "transducer"),
                 "transducer \"initial\"");
  if (!index.count(initial)) {
    schema_error("transducer initial state \"" + initial +
                 "\" is not declared");
  }
  const int n = source.alphabet_size();
  std::vector<std::optional<Transducer::Rule>> rules(states.size() * n);
  const Json& rules_json = get_member(j, "rules", "transducer");
  if (!rules_json.is_array()) {
    schema_error("transducer \"rules\" must be an array");
  }
  for (const Json& r : rules_json) {
    const std::string state =
        get_string(get_member(r, "state", "rule"), "rule \"state\"");
    if (!index.count(state)) {
      schema_error("rule refers to the undeclared state \"" + state + "\"");
    }
    const int input = get_int(get_member(r, "input", "rule"),
                              "rule \"input\"");
    if (input < 1 || input > n) {
      schema_error("rule input " + std::to_string(input) +
                   " is outside the source alphabet");
    }
    const Word output = parse_word(get_member(r, "output", "rule"),
                                   "rule \"output\"");
    const std::string next =
        get_string(get_member(r, "next", "rule"), "rule \"next\"");
    if (!index.count(next)) {
      schema_error("rule refers to the undeclared state \"" + next + "\"");
    }
    const size_t slot = static_cast<size_t>(index[state]) * n + (input - 1);
    if (rules[slot].has_value()) {
      schema_error("duplicate rule for state \"" + state + "\", input " +
                   std::to_string(input));
    }
    rules[slot] = Transducer::Rule{index[next], output};
  }
  return make_transducer(source, target, states, index[initial],
                         std::move(rules));
}

Json transducer_to_json(const Transducer& T) {
  Json states = Json::array();
  for (const std::string& s : T.state_names()) states.push_back(s);
  Json rules = Json::array();
  const int n = T.source().alphabet_size();
  for (int q = 0; q < T.state_count(); ++q) {
    for (int a = 1; a <= n; ++a) {
      const auto& rule = T.rule(q, a);
      if (!rule.has_value()) continue;
      rules.push_back(Json{{"state", T.state_names()[q]},
                           {"input", a},
                           {"output", word_to_json(rule->output)},
                           {"next", T.state_names()[rule->next]}});
    }
  }
  return Json{{"states", std::move(states)},
              {"initial", T.state_names()[T.initial_state()]},
              {"rules", std::move(rules)}};
}

CoeSpec parse_coe_spec(const Json& j) {
  const ShiftSpace A = parse_matrix(get_member(j, "A", "coe spec"));
  const ShiftSpace B = parse_matrix(get_member(j, "B", "coe spec"));
  Transducer h = parse_transducer(get_member(j, "h", "coe spec"), A, B);
  Transducer hinv = parse_transducer(get_member(j, "hinv", "coe spec"), B, A);
  CylFn k1 = parse_cylfn(get_member(j, "k1", "coe spec"), A);
  CylFn l1 = parse_cylfn(get_member(j, "l1", "coe spec"), A);
  CylFn k2 = parse_cylfn(get_member(j, "k2", "coe spec"), B);
  CylFn l2 = parse_cylfn(get_member(j, "l2", "coe spec"), B);
  return make_coe_spec(A, B, std::move(h), std::move(hinv), std::move(k1),
                       std::move(l1), std::move(k2), std::move(l2));
}

Json coe_spec_to_json(const CoeSpec& spec) {
  return Json{{"A", matrix_to_json(spec.A)},
              {"B", matrix_to_json(spec.B)},
              {"h", transducer_to_json(spec.h)},
              {"hinv", transducer_to_json(spec.hinv)},
              {"k1", cylfn_to_json(spec.k1)},
              {"l1", cylfn_to_json(spec.l1)},
              {"k2", cylfn_to_json(spec.k2)},
              {"l2", cylfn_to_json(spec.l2)}};
}

MarkovMeasure parse_measure(const Json& j, const ShiftSpace& S) {
  const int n = S.alphabet_size();
  const Json& Pj = get_member(j, "P", "measure");
  if (!Pj.is_array() || static_cast<int>(Pj.size()) != n) {
    schema_error("measure \"P\" must be an n x n array");
  }
  std::vector<std::vector<Rational>> P;
  P.reserve(n);
  for (const Json& row : Pj) {
    if (!row.is_array() || static_cast<int>(row.size()) != n) {
      schema_error("each measure row must have n entries");
    }
    std::vector<Rational> r;
    r.reserve(n);
    for (const Json& e : row) {
      r.push_back(parse_rational_json(e, "measure \"P\" entry"));
    }
    P.push_back(std::move(r));
  }
  std::optional<std::vector<Rational>> pi;
  if (j.contains("pi")) {
    const Json& pj = j.at("pi");
    if (!pj.is_array() || static_cast<int>(pj.size()) != n) {
      schema_error("measure \"pi\" must be an array of n entries");
    }
    std::vector<Rational> p;
    p.reserve(n);
    for (const Json& e : pj) {
      p.push_back(parse_rational_json(e, "measure \"pi\" entry"));
    }
    pi = std::move(p);
  }
  return make_markov_measure(S, std::move(P), std::move(pi));
}

Json measure_to_json(const MarkovMeasure& mu) {
  Json P = Json::array();
  for (const auto& row : mu.P) {
    Json r = Json::array();
    for (const Rational& e : row) r.push_back(to_string(e));
    P.push_back(std::move(r));
  }
  Json pi = Json::array();
  for (const Rational& e : mu.pi) pi.push_back(to_string(e));
  return Json{{"P", std::move(P)}, {"pi", std::move(pi)}};
}

Json series_to_json(const FormalSeries& s) {
  Json coeffs = Json::array();
  for (const Rational& c : s.coeffs()) coeffs.push_back(to_string(c));
  return Json{{"truncation", s.truncation()}, {"coeffs", std::move(coeffs)}};
}

FormalSeries parse_series(const Json& j) {
  const int truncation = get_int(get_member(j, "truncation", "series"),
                                 "series \"truncation\"");
  const Json& cj = get_member(j, "coeffs", "series");
  if (!cj.is_array()) schema_error("series \"coeffs\" must be an array");
  std::vector<Rational> coeffs;
  coeffs.reserve(cj.size());
  for (const Json& e : cj) {
    coeffs.push_back(parse_rational_json(e, "series coefficient"));
  }
  if (truncation < 0 ||
      coeffs.size() != static_cast<size_t>(truncation) + 1) {
    schema_error("series needs exactly truncation + 1 coefficients");
  }
  return FormalSeries(truncation, std::move(coeffs));
}

Json orbit_to_json(const Orbit& gamma) {
  return Json{{"cycle", word_to_json(gamma.cycle)},
              {"period", gamma.period()}};
}

Json report_to_json(const CertReport& r) {
  Json j;
  j["name"] = r.name;
  j["statement"] = r.statement;
  j["bound"] = r.bound;
  j["verdict"] = verdict_name(r.verdict);
  if (!r.witness.empty()) j["witness"] = r.witness;
  if (!r.details.empty()) j["details"] = r.details;
  return j;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) schema_error("cannot open file: " + path);
  Json j;
  try {
    in >> j;
  } catch (const Json::parse_error& e) {
    schema_error("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

std::string read_file_bytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) schema_error("cannot open file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

}  // namespace coeq
