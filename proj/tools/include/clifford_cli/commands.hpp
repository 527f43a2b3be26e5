#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "clifford/extremal.hpp"
#include "clifford_cli/config.hpp"

namespace clifford::cli {

enum class CheckStatus { pass, fail, skipped };
std::string status_name(CheckStatus status);

/// How a residual is compared with its tolerance.
enum class Bound {
  /// pass iff residual <= tolerance
  at_most,
  /// pass iff residual > tolerance
  above,
};

struct CheckResult {
  std::string name;
  std::string module;
  CheckStatus status = CheckStatus::skipped;
  double residual = 0.0;
  double tolerance = 0.0;
  Bound bound = Bound::at_most;
  std::size_t samples = 0;
  /// Reason for a skip, or a short remark.
  std::string note;
  double duration_s = 0.0;
};

struct VerificationReport {
  RunConfig config;
  std::vector<CheckResult> checks;

  /// True iff every non-skipped check passed.
  bool passed() const noexcept;
  std::vector<std::string> failing() const;
};

/// Runs the quaternion, fibration and extremal property suites with the budgets in
/// `config` (n_samples random instances, grid_size lattice points). Checks needing a
/// larger grid than configured are marked skipped.
VerificationReport run_verify(const RunConfig& config);

std::string report_json(const VerificationReport& report, bool timings);
std::string report_csv(const VerificationReport& report, bool timings);

/// Sweep frames for config.alpha > 0, config.epsilon, config.n_frames.
std::vector<HotColdFrame> run_sweep(const RunConfig& config);

const std::vector<std::string>& sweep_csv_header();
std::string sweep_json(const std::vector<HotColdFrame>& frames);
std::string sweep_csv(const std::vector<HotColdFrame>& frames);
/// Stereographic projection from -1 of each frame's hot and cold circles (first factor).
std::string sweep_svg(const std::vector<HotColdFrame>& frames, double alpha);

struct FiberPairVariance {
  UnitQuaternion p;
  UnitQuaternion p_prime;
  double variance = 0.0;
};

struct ParallelismSweep {
  double alpha = 0.0;
  std::vector<FiberPairVariance> pairs;
  /// fiber(1) against fiber(e^{0.3 j}).
  double reference_variance = 0.0;
  double max_variance = 0.0;
};

struct CompareReport {
  RunConfig config;
  ParallelismSweep hopf;
  ParallelismSweep twisted;
  bool hopf_constant = false;
  /// Absent when the configured alpha is 0 and the two sides coincide.
  std::optional<bool> twisted_nonconstant;

  bool passed() const noexcept { return hopf_constant && twisted_nonconstant.value_or(true); }
};

/// Fiber pairs compared on each side; each pair uses n_samples points.
inline constexpr std::size_t kComparePairs = 32;

CompareReport run_compare(const RunConfig& config);
std::string compare_json(const CompareReport& report);

}  // namespace clifford::cli
