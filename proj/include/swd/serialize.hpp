#pragma once

// JSON and text conversions shared by the command-line tool, the Python
// bindings and the tests.

#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "swd/cocycle.hpp"
#include "swd/duality.hpp"
#include "swd/scalars.hpp"
#include "swd/segments.hpp"

namespace swd {

// std::map-backed, so emitted keys are sorted.
using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

Json to_json(QPower x);
QPower qpower_from_json(const Json& j);

Json to_json(const SimpleClassB& c);
SimpleClassB simple_class_from_json(const Json& j);

Json to_json(const Segment& s);
Json to_json(const KRelation& r);
Json to_json(const DenominatorRoots& r);

/// "(a,b)" or "a..b"; integers may be negative.
Segment parse_segment(std::string_view text);
/// Segments separated by ';', e.g. "(1,2);(3,3)" or "1..2;3..3".
Multisegment parse_multisegment(std::string_view text);

/// A parsed cocycle input: the h-family over Q^x, +-q^{Z/2} or Q[[z]].
using CocycleInput = std::variant<WindowFamily<Rational>, WindowFamily<QPower>, SeriesFamily>;

/// Reads {"a,b": value, ...}, optionally wrapped as {"h": {...}}. Values are
/// rational strings or integers, QPower objects {"sign", "exp2"}, or
/// coefficient arrays. The keys must cover a square window exactly. Series
/// entries are padded with zeros or truncated to `order`.
CocycleInput cocycle_input_from_json(const Json& j, int N, bool series, int order);

/// {"schema", "N", "group", "window", "c", "verified"}, plus "order" and
/// "c_window" for series.
Json cocycle_output_json(const CocycleInput& input);

}  // namespace swd
