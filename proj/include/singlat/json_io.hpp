#pragma once

// JSON wire format "singlat/1". Integers and rationals are strings so that
// consumers never see 64-bit overflow; arrays follow vertex order.

#include "singlat/classify.hpp"
#include "singlat/graph.hpp"
#include "singlat/lattice.hpp"
#include "singlat/laufer.hpp"
#include "singlat/oracle.hpp"

#include <json.hpp>

namespace singlat {

using Json = nlohmann::ordered_json;

inline constexpr const char* schema_version = "singlat/1";

Json to_json(const Integer& z);
Json to_json(const Rational& q);
/// {"coefficients": [{"num", "den"}, ...]}
Json to_json(const Cycle& l);
Json to_json(const ClassElement& h);
/// {"order": "7", "factors": ["7"]}
Json to_json(const ClassGroup& cg);
Json to_json(const ResolutionGraph& g);
Json to_json(const SingularityType& t, const ResolutionGraph& g);
Json to_json(const ClassificationReport& r, const ResolutionGraph& g);
Json to_json(const Transcript& t);

/// Compact, byte-deterministic text.
std::string dump(const Json& j);

}  // namespace singlat
