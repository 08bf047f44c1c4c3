#pragma once

#include "coeq/coe.hpp"
#include "coeq/cyl_fn.hpp"
#include "coeq/ev_periodic.hpp"
#include "coeq/measures.hpp"
#include "coeq/report.hpp"
#include "coeq/shift_space.hpp"
#include "coeq/zeta.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace coeq {

using Json = nlohmann::json;

// All parsers throw Error{SchemaError} on shape problems (missing keys, wrong
// types, malformed numbers); semantic validation failures keep their own
// codes (ZeroRowOrColumn, NullCycle, ...).  Serializers emit exactly the
// shapes the parsers accept:
//
//   matrix    {"n": 2, "rows": [[1,1],[1,0]]}
//   point     {"transient": [2], "cycle": [1]}
//   cylfn     {"depth": 1, "table": {"1": 1, "2": 2}}
//             (keys are digit strings for alphabets <= 9, otherwise
//              [{"word": [...], "value": v}, ...])
//   measure   {"P": [["1/2","1/2"],["1/2","1/2"]], "pi": ["1/2","1/2"]}
//             (pi optional; rationals and big integers as decimal strings)
//   series    {"truncation": 12, "coeffs": ["1","1","2",...]}
//   coespec   {"A": matrix, "B": matrix,
//              "h":    {"states": [...], "initial": "s0", "rules": [
//                        {"state":"s0","input":1,"output":[1],"next":"s0"}]},
//              "hinv": {...}, "k1": cylfn, "l1": cylfn,
//              "k2": cylfn, "l2": cylfn}

ShiftSpace parse_matrix(const Json& j);
Json matrix_to_json(const ShiftSpace& S);

EvPeriodicPoint parse_point(const Json& j, const ShiftSpace& S);
Json point_to_json(const EvPeriodicPoint& x);

CylFn parse_cylfn(const Json& j, const ShiftSpace& S);
Json cylfn_to_json(const CylFn& f);

Transducer parse_transducer(const Json& j, const ShiftSpace& source,
                            const ShiftSpace& target);
Json transducer_to_json(const Transducer& T);

CoeSpec parse_coe_spec(const Json& j);
Json coe_spec_to_json(const CoeSpec& spec);

MarkovMeasure parse_measure(const Json& j, const ShiftSpace& S);
Json measure_to_json(const MarkovMeasure& mu);

Json series_to_json(const FormalSeries& s);
FormalSeries parse_series(const Json& j);

Json orbit_to_json(const Orbit& gamma);
Json report_to_json(const CertReport& r);

// File helpers (SchemaError on unreadable file / invalid JSON).
Json load_json_file(const std::string& path);
std::string read_file_bytes(const std::string& path);

}  // namespace coeq
