#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "clifford/quaternion.hpp"

namespace clifford {

using SphereObjective = std::function<double(const UnitQuaternion&)>;

enum class Sense { minimize, maximize };

struct RefineOptions {
  int max_steps = 50;
  double initial_step = 0.1;
  /// Central-difference step for the body-frame gradient.
  double gradient_step = 1e-6;
  double min_step = 1e-14;
};

struct RefineResult {
  UnitQuaternion point;
  double value = 0.0;
  int steps = 0;
};

/// Projected steepest descent (or ascent) on S^3 with step halving. Each step
/// moves along the geodesic in the direction of the finite-difference gradient
/// and is accepted only if it strictly improves the objective.
RefineResult refine_extremum(const SphereObjective& objective, const UnitQuaternion& start,
                             Sense sense, const RefineOptions& options = {});

struct ExtremizeOptions {
  /// Grid points per side handed to the local refinement.
  std::size_t seeds = 48;
  /// Refined points within min(absolute_band, relative_band * spread) of the
  /// extremal value belong to the argmin / argmax set.
  double absolute_band = 1e-3;
  double relative_band = 1e-2;
  /// Spread below which the objective is reported as degenerate (no distinguished set).
  double degenerate_spread = 1e-6;
  RefineOptions refine{};
};

struct SphereExtrema {
  std::vector<UnitQuaternion> argmin;
  std::vector<UnitQuaternion> argmax;
  double min_value = 0.0;
  double max_value = 0.0;
  double spacing = 0.0;
  bool degenerate = false;
};

/// Global minimum and maximum sets of `objective` over S^3: evaluate on a
/// quasi-uniform lattice of grid_size points, then refine the best seeds locally.
SphereExtrema extremize_on_sphere(const SphereObjective& objective, std::size_t grid_size,
                                  const ExtremizeOptions& options = {});

}  // namespace clifford
