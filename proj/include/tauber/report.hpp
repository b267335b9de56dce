#pragma once

// JSON and CSV forms of the library's results.  Reports carry the schema tag
// "tauber-report/1"; the only field allowed to differ between identical runs
// is "timestamp".  Non-finite numbers serialize as null.

#include <filesystem>
#include <string>

#include "json.hpp"
#include "tauber/conditions.hpp"
#include "tauber/spaces.hpp"
#include "tauber/theorems.hpp"
#include "tauber/torus.hpp"

namespace tauber {

inline constexpr const char* kReportSchema = "tauber-report/1";

nlohmann::json to_json(const ConditionVerdict& v);
ConditionVerdict verdict_from_json(const nlohmann::json& j);

// {"k_max": K, "coefficients": [[re, im], ...] for k = -K..K, "real_valued": b}
nlohmann::json to_json(const CoeffTable& table);
CoeffTable coeff_table_from_json(const nlohmann::json& j);

// {"samples": [[re, im], ...]}
nlohmann::json to_json(const GridFunction& f);
GridFunction grid_function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const HomogeneityReport& r);
nlohmann::json to_json(const ExperimentReport& r);
ExperimentReport experiment_from_json(const nlohmann::json& j);

// Wraps a payload as {"schema", "command", "timestamp", "result"}.
nlohmann::json envelope(const std::string& command, nlohmann::json result,
                        bool with_timestamp = true);

// "n,err_Sn,err_sigman" rows of the error table.
std::string to_csv(const ExperimentReport& r);

// Writes through a temporary file in the same directory, then renames.
void write_atomically(const std::filesystem::path& path, const std::string& content);
std::string dump(const nlohmann::json& j);

}  // namespace tauber
