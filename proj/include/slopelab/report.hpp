#pragma once

#include <string>

#include <json.hpp>

#include "slopelab/adequacy.hpp"
#include "slopelab/degrees.hpp"
#include "slopelab/surfaces.hpp"

namespace slopelab {

using Json = nlohmann::ordered_json;

Json quasipoly_json(const QuasiPoly& qp);
Json fit_report_json(const QuasiPoly& qp, const SlopeData& slopes, const ConditionDelta& cond,
                     const SignRecord& sign);
Json surface_record_json(const SurfaceRecord& r);
Json glued_surface_json(const GluedSurface& g);
Json strong_slope_json(const StrongSlopeReport& r);
Json adequacy_json(const AdequacyVerdict& v);
Json inadequacy_json(const InadequacyReport& r);

/// Table-shaped CSV row(s) for catalog records: header plus one line each.
std::string surface_csv_header();
std::string surface_csv_row(const SurfaceRecord& r);

/// Stable serialization used by the CLI: 2-space indent, '\n' terminated.
std::string emit_json(const Json& j);

std::string quasipoly_text(const QuasiPoly& qp);

} // namespace slopelab
