#pragma once

/// \file workbench.hpp
/// Batch driver behind the command-line tool: loads JSON configs, runs
/// the validators, and assembles one structured report per invocation.
/// The report echoes the parsed configuration (never file paths), lists
/// the checks sorted by name, and fixes the exit-code contract:
/// 0 all pass, 1 any fail (or inconclusive without explicit allowance),
/// 2 malformed input. Identical config and seed give a byte-identical
/// document except for the timestamp field.

#include <hahn/json_io.hpp>
#include <hahn/report.hpp>

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hahn {

struct RunConfig {
  std::string command;
  /// Input files, command-specific: couple config, series document,
  /// tower config or extension config.
  std::vector<std::string> inputs;
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  /// Neumann-term budget for inversions and daggers.
  std::size_t budget = 8;
  std::string format = "json";  // "json" | "text"
  bool allow_inconclusive = false;
  /// derive: also emit the logarithmic derivative.
  bool dagger = false;
  /// loghyper: rank of the tower model.
  std::optional<std::size_t> index_size;
};

struct RunReport {
  nlohmann::json document;
  std::vector<CheckResult> checks;
  int exit_code = 0;
  /// Human-readable rendering (used by --format text).
  std::string text;
};

/// 1 on any failing check; inconclusive maps to 1 unless allowed; else 0.
int exit_code_for(const std::vector<CheckResult>& checks,
                  bool allow_inconclusive);

std::string tool_version();

/// Runs one command. Throws ConfigError (or the validators' input
/// exceptions) on malformed input; the caller maps those to exit code 2.
RunReport run_command(const RunConfig& config);

}  // namespace hahn
