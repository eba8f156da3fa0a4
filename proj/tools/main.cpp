#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli.hpp"

namespace {

bool write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    return static_cast<bool>(out);
}

std::string dump(const jscfp::Json& j) { return j.dump(2) + "\n"; }

} // namespace

int main(int argc, char** argv) {
    using namespace jscfp::cli;

    CLI::App app{"Coupled fixed points in JS-metric spaces: axiom checks, hypotheses, solver, probes and oracle."};
    app.require_subcommand(1, 1);

    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::vector<std::string> overrides;
    std::string out_report, out_trace;
    app.add_option("--config", config_path, "Problem config (JSON)")->required()->check(CLI::ExistingFile);
    app.add_option("--seed", seed, "Seed; overrides the config's seed");
    app.add_option("--set", overrides, "Override key=value on a dotted path (repeatable)")->take_all();
    app.add_option("--out-report", out_report, "JSON report path (default: outputs.report or stdout)");
    app.add_option("--out-trace", out_trace, "CSV trace path for solve (default: outputs.trace)");

    for (std::string_view name : kSubcommands) app.add_subcommand(std::string(name))->fallthrough();
    app.get_subcommand("axioms")->description("D1, D2 and D3 on the space and its product lift");
    app.get_subcommand("hypotheses")->description("order, delta, mixed-monotone and contraction hypotheses");
    app.get_subcommand("solve")->description("iterate to a coupled fixed point");
    app.get_subcommand("probe")->description("uniqueness and component-equality probes");
    app.get_subcommand("oracle")->description("brute-force cross-check on a finite instance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kConfigError;
    }
    const std::string sub = app.get_subcommands().front()->get_name();

    jscfp::Json config;
    try {
        config = load_config(config_path);
        for (const auto& o : overrides) apply_override(config, o);
        if (seed) config["seed"] = *seed;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kConfigError;
    }

    auto output_path = [&](const std::string& flag, const char* key) -> std::string {
        if (!flag.empty()) return flag;
        if (config.contains("outputs") && config["outputs"].is_object() && config["outputs"].contains(key) &&
            config["outputs"][key].is_string())
            return config["outputs"][key].get<std::string>();
        return {};
    };
    const std::string report_path = output_path(out_report, "report");
    const std::string trace_path = output_path(out_trace, "trace");

    Outcome outcome;
    try {
        outcome = run(sub, config);
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n";
        outcome.exit_code = kConfigError;
        outcome.report = jscfp::Json{{"subcommand", sub},
                                     {"config", config},
                                     {"error", {{"key", e.key()}, {"message", e.what()}}},
                                     {"exit_code", kConfigError}};
    } catch (const jscfp::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        outcome.exit_code = kConfigError;
        outcome.report = jscfp::Json{{"subcommand", sub},
                                     {"config", config},
                                     {"error", {{"key", "config"}, {"message", e.what()}}},
                                     {"exit_code", kConfigError}};
    }

    if (report_path.empty()) {
        std::cout << dump(outcome.report);
    } else if (!write_file(report_path, dump(outcome.report))) {
        std::cerr << "error: outputs.report: cannot write '" << report_path << "'\n";
        return kConfigError;
    }
    if (outcome.trace_csv && !trace_path.empty() && !write_file(trace_path, *outcome.trace_csv)) {
        std::cerr << "error: outputs.trace: cannot write '" << trace_path << "'\n";
        return kConfigError;
    }
    return outcome.exit_code;
}
