#ifndef CSTAR_IO_HPP
#define CSTAR_IO_HPP

#include <string>

#include <json.hpp>

#include "cstar/stability.hpp"

namespace cstar {

using Json = nlohmann::ordered_json;

/// One surface document: {"ls", "ds", "source", "sink", "A"?, "meta"?} or
/// {"P", "meta"?}. Shape errors throw MalformedInput; the data is validated.
DefiningData parse_surface(const Json& doc);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const RatInterval& x);
RatInterval interval_from_json(const Json& j);
Json to_json(const IsolatingInterval& x);
IsolatingInterval isolating_from_json(const Json& j);
Json to_json(const IntMatrix& M);
Json to_json(const IntVector& v);
Json to_json(const Polygon& p);
Json to_json(const Cone& c);

Json report_to_json(const StabilityReport& report, const std::string& metadata = "{}");
StabilityReport report_from_json(const Json& doc);

/// Only the verdict-bearing fields, used for round-trip comparisons.
Json verdict_fields(const Json& report);

Json atlas_to_json(const SurfaceContext& ctx, const DegenerationSet& degenerations);

std::string report_to_text(const StabilityReport& report);

Json error_to_json(const Error& e);

}  // namespace cstar

#endif  // CSTAR_IO_HPP
