#include "secint/json_io.hpp"

#include <regex>

namespace secint::json_io {

namespace {

// Placeholder for integers beyond 64 bits; dump() rewrites "<marker>digits" as digits.
constexpr std::string_view kBigMarker = "@@secint-bigint@@";

} // namespace

Json integer(const Integer& value) {
    if (value.fits_slong_p())
        return static_cast<std::int64_t>(value.get_si());
    return std::string(kBigMarker) + value.get_str();
}

Json rational(const Rational& value) { return to_string(value); }

Json to_json(const VanishingSequence& a) {
    Json out = Json::array();
    for (const auto& v : a.entries())
        out.push_back(integer(v));
    return out;
}

Json to_json(const SequencePair& p) {
    return Json{{"a1_Y", to_json(p.a1_y)}, {"at_Y", to_json(p.at_y)}, {"a1_Z", to_json(p.a1_z())},
                {"at_Z", to_json(p.at_z())}};
}

Json to_json(const Certificate& c) {
    Json instance = Json::object();
    for (const auto& [name, value] : c.instance)
        instance[name] = integer(value);
    Json witnesses = Json::array();
    for (const auto& w : c.witnesses)
        witnesses.push_back(to_json(w));
    return Json{{"instance", instance},
                {"status", std::string(to_string(c.status))},
                {"reasons", c.reasons},
                {"constraints_used", c.constraints_used},
                {"survivor_count", c.survivor_count},
                {"witnesses", witnesses}};
}

Json to_json(const ChowClass& c) {
    Json terms = Json::array();
    for (const auto& [m, coefficient] : c.terms())
        terms.push_back(Json{{"x", m.x}, {"theta", m.theta}, {"coefficient", rational(coefficient)}});
    return terms;
}

Json to_json(const CounterexampleReport& r) {
    return Json{{"d1", integer(r.d1)},
                {"expected_dim", integer(r.expected_dim)},
                {"certified", std::string(to_string(r.certified))},
                {"contradiction", r.contradiction}};
}

Json record(Json inputs, Json result) {
    return Json{{"tool_version", std::string(kToolVersion)}, {"inputs", std::move(inputs)}, {"result", std::move(result)}};
}

std::string dump(const Json& j, int indent) {
    std::string text = j.dump(indent);
    if (text.find(kBigMarker) == std::string::npos)
        return text;
    static const std::regex big("\"" + std::string(kBigMarker) + "(-?[0-9]+)\"");
    return std::regex_replace(text, big, "$1");
}

} // namespace secint::json_io
