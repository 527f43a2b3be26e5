#include "clifford_cli/config.hpp"

#include <cmath>

#include "clifford/sphere_map.hpp"

namespace clifford::cli {

std::optional<OutputFormat> parse_format(const std::string& name) {
  if (name == "json") return OutputFormat::json;
  if (name == "csv") return OutputFormat::csv;
  if (name == "svg") return OutputFormat::svg;
  return std::nullopt;
}

std::string format_name(OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::svg: return "svg";
  }
  return "json";
}

void validate(const RunConfig& config) {
  if (!std::isfinite(config.alpha) || config.alpha < 0.0 || config.alpha > max_twist_angle()) {
    throw ConfigError("alpha must lie in [0, pi/6]");
  }
  if (!std::isfinite(config.epsilon) || config.epsilon <= 0.0) {
    throw ConfigError("epsilon must be positive");
  }
  if (config.n_frames < 4) throw ConfigError("frames must be at least 4");
  if (config.grid_size < 1) throw ConfigError("grid must be at least 1");
  if (config.n_samples < 1) throw ConfigError("samples must be at least 1");
}

}  // namespace clifford::cli
