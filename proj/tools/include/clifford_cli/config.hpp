#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace clifford::cli {

enum class OutputFormat { json, csv, svg };

std::optional<OutputFormat> parse_format(const std::string& name);
std::string format_name(OutputFormat format);

/// Everything a command needs. Angles in radians.
struct RunConfig {
  double alpha = 0.0;
  double epsilon = 0.05;
  std::size_t n_frames = 8;
  std::size_t grid_size = 10000;
  std::size_t n_samples = 1000;
  std::uint64_t seed = 42;
  OutputFormat output_format = OutputFormat::json;
  /// Empty or "-" writes to standard output.
  std::string output_path;
  /// Include wall-clock durations in the verification report.
  bool timings = false;

  bool writes_stdout() const noexcept { return output_path.empty() || output_path == "-"; }
};

/// Raised for a configuration that fails validation; maps to exit code 2.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Checks the bounds shared by every command: 0 <= alpha <= pi/6, epsilon > 0,
/// n_frames >= 4, grid_size >= 1, n_samples >= 1.
void validate(const RunConfig& config);

}  // namespace clifford::cli
