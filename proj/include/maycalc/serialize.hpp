#pragma once
// Versioned JSON records (schema "mayv1").

#include <string>

#include "json.hpp"
#include "maycalc/certify.hpp"
#include "maycalc/les.hpp"

namespace maycalc {

inline constexpr const char* kSchema = "mayv1";
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const E2Report& r, const PrimeContext& ctx);
E2Report e2_report_from_json(const nlohmann::json& j, const PrimeContext& ctx);

nlohmann::json to_json(const Certificate& c, bool with_basis = false);
nlohmann::json to_json(const WindowReport& w);
nlohmann::json to_json(const DimInterval& d, Spectrum x, Int s, Int t);

// Reports persisted through a DiskCache under module "e2".
class DiskCache;
ReportStore disk_report_store(const DiskCache& cache);

}  // namespace maycalc
