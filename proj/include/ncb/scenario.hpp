#pragma once

#include <string>

#include <json.hpp>

namespace ncb {

using Json = nlohmann::ordered_json;

struct RunOptions {
    double tolerance = 1e-9;
    bool with_oracle = false;
    bool quiet = false;
    std::string report_path;  // empty = stdout only
};

struct RunResult {
    int exit_code = 0;  // 0 verdict-true, 1 verdict-false, 2 input error
    Json report;
};

/// Evaluates a parsed scenario document.  Never throws: schema violations
/// and internal inconsistencies become exit code 2 with an error report.
RunResult run_scenario_json(const Json& scenario, const RunOptions& options);

/// Loads, parses and evaluates a scenario file.
RunResult run_scenario_file(const std::string& path, const RunOptions& options);

/// Human-readable rendering; a pure function of the machine report.
std::string render_human(const Json& report);

}  // namespace ncb
