// SPDX-License-Identifier: Apache-2.0
#ifndef GRAVBEC_CLI_HPP
#define GRAVBEC_CLI_HPP

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

// Command front end: config parsing, per-command key schemas, and the run
// drivers that write CSV/plot data and key=value reports. Kept out of
// tools/ so the whole surface is unit-testable.
namespace gravbec::cli {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A config value: the raw text plus the line it came from.
struct ConfigValue {
    std::string text;
    int line = 0;
};

struct RunConfig {
    std::string command;
    std::map<std::string, ConfigValue> values;
    std::filesystem::path output_dir = ".";
    std::uint64_t seed = 0;
};

/// One documented key of a command schema.
struct KeySpec {
    std::string name;
    std::string unit;  ///< "" for dimensionless, "str" for enumerated strings
    std::string description;
    bool required = true;
    std::string default_value;  ///< used when !required
};

/// Known command names, in help order.
std::vector<std::string> command_names();

/// Schema of one command; throws ParseError for unknown commands.
const std::vector<KeySpec>& command_schema(const std::string& command);

/// Parse flat `key = value` text (# comments, blank lines allowed).
/// Throws ParseError with a line number on malformed lines and duplicates.
std::map<std::string, ConfigValue> parse_config_text(const std::string& text);

/// Validate parsed keys against the command schema: unknown keys rejected,
/// missing required keys reported all at once, numeric values type-checked,
/// unit suffixes (when present) matched against the documented unit.
void validate_config(const RunConfig& config);

/// Human-readable schema listing for --explain / --help.
std::string explain(const std::string& command);

/// Execute; returns the process exit status (0 on success). Solver errors
/// and config errors are reported on `err` and yield nonzero status.
/// Every artifact carries the version and a hash of the canonical config.
int run(const RunConfig& config, std::ostream& err);

}  // namespace gravbec::cli

#endif  // GRAVBEC_CLI_HPP
