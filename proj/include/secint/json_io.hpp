#pragma once

// Stable JSON forms of the library's results. Integers of any size are written as
// plain decimal JSON numbers.

#include "secint/certifier.hpp"
#include "secint/counting.hpp"
#include "secint/lls.hpp"
#include "secint/numeric.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace secint::json_io {

using Json = nlohmann::json;

inline constexpr std::string_view kToolVersion = "0.1.0";

Json integer(const Integer& value);
// Canonical "p/q" (or "p") string.
Json rational(const Rational& value);

Json to_json(const VanishingSequence& a);
Json to_json(const SequencePair& p);
Json to_json(const Certificate& c);
Json to_json(const ChowClass& c);
Json to_json(const CounterexampleReport& r);

// {"tool_version", "inputs", "result"}
Json record(Json inputs, Json result);

// Serializes with big integers expanded to bare decimal literals. indent < 0 is compact.
std::string dump(const Json& j, int indent = 2);

} // namespace secint::json_io
