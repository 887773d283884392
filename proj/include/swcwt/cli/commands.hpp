#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "swcwt/wavelet.hpp"

namespace swcwt::cli {

enum ExitCode : int { kSuccess = 0, kValidationFailure = 2, kVerdictFailure = 3 };

struct RunConfig {
  std::optional<int> spin;
  std::optional<int> lmax;
  ExampleFamilyParams family;
  double family_gain = 1.0;
  double scale_cutoff = 1e-4;
  int n_scales = 64;
  std::optional<std::array<int, 3>> so3_grid;
  std::uint64_t seed = 1;
  std::filesystem::path out = ".";
  std::filesystem::path input;
  std::filesystem::path reference;
  double tolerance = kDefaultAdmissibilityTolerance;
  int kernel_samples = 512;
  int isometry_pairs = 3;
};

inline constexpr int kDefaultSpin = 0;
inline constexpr int kDefaultLmax = 8;
inline constexpr double kIsometryTolerance = 2e-3;

/// Throws std::invalid_argument for values outside the ranges the library accepts.
void validate(const RunConfig& config);

/// Writes <out>/coeffs.json and <out>/grid.csv for a seeded random field.
int cmd_synth(const RunConfig& config, std::ostream& log);
/// Reads --in coefficients and writes <out>/wavelet.csv.
int cmd_analyze(const RunConfig& config, std::ostream& log);
/// Reads --in wavelet csv, writes <out>/reconstructed.json and <out>/reconstruct_report.txt.
int cmd_reconstruct(const RunConfig& config, std::ostream& log);
/// Writes admissibility, kernel-bound and isometry tables plus <out>/report.txt.
/// Returns kVerdictFailure if any check fails.
int cmd_report(const RunConfig& config, std::ostream& log);

/// Parses arguments (and an optional --config key-value file) and dispatches.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace swcwt::cli
