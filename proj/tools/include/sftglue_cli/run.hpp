#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

namespace sftglue::cli {

enum class Command {
  kAnalyze,
  kTrace,
  kShadow,
  kCantor,
  kCensus,
  kHyperRefute,
  kEntropy,
  kExample31,
};

enum class Format { kJson, kText };

/// Parses a subcommand name ("hyper-refute", ...). Throws InputError.
Command parse_command(const std::string& name);
std::string command_name(Command c);

struct RunConfig {
  Command command = Command::kAnalyze;
  /// Graph file; not used by example31.
  std::string input;
  int resolution = 1;
  /// Cantor depth, census depth, or k for hyper-refute.
  int depth = 2;
  int max_gap = 4;
  /// Word-count horizon for analyze and entropy.
  int terms = 20;
  Format format = Format::kJson;
  std::uint64_t seed = 1;
  /// Inline JSON or a path to a JSON file.
  std::optional<std::string> point;
  std::optional<std::string> blocks;
  std::optional<std::string> pseudo_orbit;
};

/// Desk-scale guards on N, k and M_max.
inline constexpr int kMaxParameter = 8;

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitRefuted = 2;

struct RunResult {
  int exit_code = kExitOk;
  nlohmann::json report;  // null on error
  std::string output;     // rendered report, or the diagnostic on error
};

/// Checks ranges and required fields. Throws InputError naming the
/// offending parameter.
void validate(const RunConfig& config);

/// Runs one command. Never throws for bad input: errors come back as exit
/// code 1 with a diagnostic.
RunResult run(const RunConfig& config);

/// Aligned "key  value" text for a JSON report.
std::string render_text(const nlohmann::json& report);

}  // namespace sftglue::cli
