#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "jscfp/json.hpp"

namespace jscfp::cli {

/// A configuration problem, tied to the dotted key at fault.
class ConfigError : public Error {
public:
    ConfigError(std::string key, const std::string& what)
        : Error(key + ": " + what), key_(std::move(key)) {}

    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

enum ExitCode : int { kPass = 0, kCheckedFailure = 1, kConfigError = 2 };

struct Outcome {
    int exit_code = kPass;
    Json report;
    std::optional<std::string> trace_csv;
};

/// Reads a JSON config file. Throws ConfigError("config", ...).
Json load_config(const std::string& path);

/// Applies "a.b.c=value"; the value is parsed as JSON and taken as a string
/// when it does not parse. Throws ConfigError on a malformed override.
void apply_override(Json& config, std::string_view assignment);

inline constexpr std::string_view kSubcommands[] = {"axioms", "hypotheses", "solve", "probe", "oracle"};

/// Runs one subcommand on a fully assembled config. Configuration and
/// evaluation problems surface as ConfigError or EvaluationError; checked
/// failures are reported in the outcome with exit code 1.
Outcome run(std::string_view subcommand, const Json& config);

} // namespace jscfp::cli
