#pragma once

#include <filesystem>
#include <optional>

#include "turancert/witness.hpp"

namespace turancert::cli {

enum class Command { certify, sweep, coeffs, oscillation, frame, selfcheck };
enum class OutputFormat { json, csv, text };

struct LambdaRange {
  double min = 0.0;
  double max = 0.0;
  int steps = 0;
};

struct RunConfig {
  Command command = Command::selfcheck;
  std::optional<double> lambda;
  std::optional<LambdaRange> lambda_range;
  std::optional<int> n_override;
  double gap = 1e-6;  // certification gap, relative to the witness magnitude
  OutputFormat format = OutputFormat::text;
  std::optional<std::filesystem::path> output_path;
  bool with_oscillation = false;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // also generic runtime errors
inline constexpr int kExitFailedCertification = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitIo = 4;

// Validates the config, dispatches, writes the artifact to the output path
// (or stdout) and maps failures to the exit codes above with a one-line
// diagnostic on stderr.
int run(const RunConfig& config);

}  // namespace turancert::cli
