#pragma once

#include <json.hpp>

#include <string>

#include "almostchar/almost.hpp"
#include "almostchar/half_laurent.hpp"
#include "almostchar/hecke.hpp"
#include "almostchar/shapes.hpp"
#include "almostchar/symbols.hpp"

namespace almostchar {

using Json = nlohmann::ordered_json;

/// {"terms":[{"halfexp":e,"num":p,"den":q}, ...]}, exponents ascending,
/// fractions reduced. Coefficients outside the int64 range raise ResourceGuard.
Json to_json(const HalfLaurent& x);
HalfLaurent half_laurent_from_json(const Json& j);

/// [[alpha parts],[beta parts]]
Json to_json(const BiPartition& bp);
BiPartition bipartition_from_json(const Json& j);

/// {"S":[...],"T":[...]}
Json to_json(const Symbol& x);

/// {"Z1":[...],"Z2":[...],"members":[{"symbol":...,"defect":d,"special":bool}]}
Json to_json(const Family& family, Kind kind);

/// claim, params..., value, value_at_1, verdict, details..., ms (when timing).
Json to_json(const VerificationReport& rep, bool timing);

/// Compact single-line dump; the canonical byte form.
std::string dump(const Json& j);

/// Parses a JSON list of integers such as "[-2]" or "[6,10]".
std::vector<int> parse_int_list(const std::string& text);

}  // namespace almostchar
