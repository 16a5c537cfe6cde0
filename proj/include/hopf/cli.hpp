#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hopf/errors.hpp"
#include "json.hpp"

namespace hopf {

inline constexpr const char* kVersion = "0.1.0";

/// Invalid flags, values or input files. Maps to exit status 2.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct RunConfig {
  std::string command;
  std::string ring = "pareigis";
  std::optional<nlohmann::json> carrier;  // GradedCarrier JSON
  std::string carrierFile;
  int window = 6;
  int trials = 100;
  std::uint64_t seed = 42;
  int s = -1;
  int kappa = -1;
  std::string format = "json";
  std::string output;
  bool timing = false;

  /// Throws ConfigError on unknown commands, rings or formats and on
  /// out-of-range numbers.
  void validate() const;
  nlohmann::json toJson() const;
};

struct RunResult {
  int exitCode = 0;  // 0 all verdicts Equal/Accept, 1 otherwise
  nlohmann::json report;
};

/// Runs the command of a validated config. Throws ConfigError for problems
/// with its inputs (unreadable or malformed carrier files, inadmissible
/// combinations of flags).
RunResult runCommand(const RunConfig& cfg);

std::string renderText(const nlohmann::json& report);

/// Full front end: parses argv (without the program name), runs, writes the
/// report to --output or `out`, and returns the exit status. Diagnostics go
/// to `err`.
int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopf
