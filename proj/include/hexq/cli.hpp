#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hexq/report.hpp"
#include "hexq/series.hpp"

namespace hexq::cli {

inline constexpr std::string_view kVersion = "1.0.0";

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

enum class Format { Text, Json, Csv };

/// A coefficient table produced by `expand`.
struct CoefficientTable {
    std::string target;
    Params params;
    TruncatedSeries series;
};

nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const CoefficientTable& table);

nlohmann::json report_document(const std::string& command, const std::vector<CheckReport>& reports,
                               double total_elapsed_ms);
nlohmann::json table_document(const std::string& command, const CoefficientTable& table,
                              double total_elapsed_ms);

// Runs the tool on argv[1..] and returns the process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hexq::cli
