#pragma once

#include <json.hpp>

#include <string>

#include "hkoebe/area.hpp"
#include "hkoebe/extremal.hpp"
#include "hkoebe/radius.hpp"
#include "hkoebe/report.hpp"

namespace hkoebe {

using Json = nlohmann::json;

/// Serializes with sorted keys and every float printed as %.17g, so equal
/// inputs give byte-identical text. Non-finite floats become null.
std::string dump_deterministic(const Json& j);

/// Series as [[re, im], ...], index = power.
Json series_to_json(const Series& s);
Series series_from_json(const Json& j);

/// {"h": [...], "g": [...]} for series maps, {"closed_form": "KH_m"} for
/// closed forms. An optional "meta" object is written when non-null and
/// ignored when read.
Json map_to_json(const MapSource& source, const Json& meta = nullptr);

/// Parses map JSON text; throws ParseError on any malformed input.
MapSource map_from_json_text(const std::string& text);

Json report_to_json(const BoundReport& report);
Json radius_to_json(const RadiusEstimate& estimate);
Json modulus_check_to_json(const ModulusCheck& check);
Json area_to_json(const AreaEstimate& estimate);

/// theta,re,im,modulus rows with LF line endings and %.17g floats.
std::string boundary_csv(const BoundaryProfile& profile);

/// %.17g
std::string format_double(double x);

}  // namespace hkoebe
