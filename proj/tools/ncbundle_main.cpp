#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ncb/scenario.hpp"

namespace {

struct SubcommandSpec {
    std::string name;
    std::string help;
    std::vector<std::string> kinds;  // scenario kinds this subcommand accepts
};

const std::vector<SubcommandSpec> kSubcommands = {
    {"check-galois", "Verify the four Galois frame conditions for a covering candidate",
     {"galois-check"}},
    {"cotensor", "Compute the cotensor product of a right and a left G-module", {"cotensor"}},
    {"borel", "Compute the noncommutative Borel construction (cotensor subalgebra)", {"borel"}},
    {"flat-bundle", "Build the flat-bundle module and its averaging projection",
     {"flat-bundle"}},
    {"k-class", "Compute the K-theory class of a local system", {"k-class"}},
    {"torus", "Fuzzy torus scenarios: covers, connections and twisted descent",
     {"torus-cover", "torus-connection", "descent"}},
};

int run(const std::string& path, const std::vector<std::string>& kinds,
        const ncb::RunOptions& options) {
    ncb::RunResult result = ncb::run_scenario_file(path, options);
    if (result.exit_code != 2) {
        std::string kind = result.report.at("kind").get<std::string>();
        bool allowed = false;
        for (const auto& k : kinds) allowed = allowed || k == kind;
        if (!allowed) {
            result.exit_code = 2;
            result.report["error"] = "scenario kind '" + kind + "' not accepted by this subcommand";
            result.report["verdict"] = nullptr;
        }
    }
    std::string serialized = result.report.dump(2) + "\n";
    if (!options.report_path.empty()) {
        std::ofstream out(options.report_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write report file: " << options.report_path << "\n";
            return 2;
        }
        out << serialized;
    }
    if (!options.quiet) {
        std::cout << ncb::render_human(result.report);
        if (options.report_path.empty()) std::cout << serialized;
    }
    return result.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ncbundle: finite noncommutative covering projections, cotensor products, "
                 "flat-bundle modules and fuzzy-torus connections"};
    app.require_subcommand(1);

    ncb::RunOptions options;
    app.add_option("--tolerance", options.tolerance, "Numerical tolerance (default 1e-9)");
    app.add_flag("--with-oracle", options.with_oracle, "Cross-check against brute-force oracles");
    app.add_option("--report", options.report_path, "Write the JSON report to this file");
    app.add_flag("--quiet", options.quiet, "Suppress stdout output");

    std::vector<std::pair<const SubcommandSpec*, std::string>> invocations;
    for (const auto& spec : kSubcommands) {
        auto* sub = app.add_subcommand(spec.name, spec.help);
        sub->fallthrough();  // allow the global flags after the subcommand
        auto path = std::make_shared<std::string>();
        sub->add_option("scenario", *path, "Scenario file (JSON)")->required();
        sub->callback([&invocations, &spec, path]() {
            invocations.emplace_back(&spec, *path);
        });
    }

    CLI11_PARSE(app, argc, argv);
    if (invocations.size() != 1) return 2;
    return run(invocations[0].second, invocations[0].first->kinds, options);
}
