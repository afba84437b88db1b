#pragma once

#include <map>
#include <optional>
#include <string>

#include "json.hpp"
#include "mcop/marked_poset.hpp"

namespace mcop {

constexpr const char* kVersion = "1.0.0";

// Flag name (without dashes) to value, as given on the command line.
using Options = std::map<std::string, std::string>;

struct CommandOutput {
  nlohmann::json report;
  bool pass = true;
};

// Runs one CLI command; throws Error for usage and domain errors.
CommandOutput run_command(const std::optional<MarkedPoset>& poset, const Options& opt);

// Report for an Error raised by run_command.
nlohmann::json error_report(const Options& opt, Errc code, const std::string& message);

std::string repro_command(const Options& opt);
std::string dump_report(const nlohmann::json& j);

}  // namespace mcop
