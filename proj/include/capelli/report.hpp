#pragma once

#include <string>

#include <json.hpp>

#include "capelli/table.hpp"
#include "capelli/verifier.hpp"

namespace capelli {

inline constexpr const char* kReportSchema = "capelli-report-v1";

nlohmann::json to_json(const DetStats& s);
nlohmann::json to_json(const VerificationReport& r);
nlohmann::json to_json(const SearchReport& r);
nlohmann::json to_json(const ActionReport& r);
nlohmann::json table_report(const std::string& name, const TableMatrix& t);

// Serialize with stable formatting (sorted keys come from the json object
// representation; two-space indent, trailing newline).
std::string render(const nlohmann::json& j);

// Recursively zero every timing field; used by the determinism checks.
nlohmann::json strip_timings(nlohmann::json j);

void write_report(const nlohmann::json& j, const std::string& path_or_empty);

} // namespace capelli
