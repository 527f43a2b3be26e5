#include "clifford/manifold_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "clifford/errors.hpp"
#include "clifford/sampling.hpp"

namespace clifford {
namespace {

bool improves(double candidate, double current, Sense sense) {
  return sense == Sense::minimize ? candidate < current : candidate > current;
}

}  // namespace

RefineResult refine_extremum(const SphereObjective& objective, const UnitQuaternion& start,
                             Sense sense, const RefineOptions& options) {
  const double sign = sense == Sense::minimize ? -1.0 : 1.0;
  const double h = options.gradient_step;
  RefineResult result{start, objective(start), 0};
  double step = options.initial_step;

  for (int it = 0; it < options.max_steps; ++it) {
    Vec3 grad{};
    for (std::size_t c = 0; c < 3; ++c) {
      Vec3 e{0.0, 0.0, 0.0};
      e[c] = h;
      const double plus = objective(exp_body(result.point, e));
      e[c] = -h;
      const double minus = objective(exp_body(result.point, e));
      grad[c] = (plus - minus) / (2.0 * h);
    }
    const double norm = std::sqrt(grad[0] * grad[0] + grad[1] * grad[1] + grad[2] * grad[2]);
    if (norm == 0.0 || !std::isfinite(norm)) break;
    const Vec3 dir{sign * grad[0] / norm, sign * grad[1] / norm, sign * grad[2] / norm};

    bool moved = false;
    while (step >= options.min_step) {
      const UnitQuaternion trial =
          exp_body(result.point, {step * dir[0], step * dir[1], step * dir[2]});
      const double value = objective(trial);
      if (improves(value, result.value, sense)) {
        result.point = trial;
        result.value = value;
        moved = true;
        break;
      }
      step *= 0.5;
    }
    if (!moved) break;
    ++result.steps;
    step = std::min(2.0 * step, 1.0);
  }
  return result;
}

SphereExtrema extremize_on_sphere(const SphereObjective& objective, std::size_t grid_size,
                                  const ExtremizeOptions& options) {
  if (grid_size < 1) throw PreconditionError("extremize_on_sphere: empty grid");
  const std::vector<UnitQuaternion> grid = fibonacci_lattice(grid_size);
  std::vector<double> values(grid.size());
  std::transform(grid.begin(), grid.end(), values.begin(), objective);

  std::vector<std::size_t> order(grid.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  const std::size_t seeds = std::min(options.seeds, grid.size());
  SphereExtrema out;
  out.spacing = lattice_spacing(grid_size);

  RefineOptions refine = options.refine;
  refine.initial_step = std::min(refine.initial_step, out.spacing);

  std::vector<RefineResult> low, high;
  low.reserve(seeds);
  high.reserve(seeds);
  for (std::size_t s = 0; s < seeds; ++s) {
    low.push_back(refine_extremum(objective, grid[order[s]], Sense::minimize, refine));
    high.push_back(
        refine_extremum(objective, grid[order[grid.size() - 1 - s]], Sense::maximize, refine));
  }

  auto by_value = [](const RefineResult& a, const RefineResult& b) { return a.value < b.value; };
  out.min_value = std::min_element(low.begin(), low.end(), by_value)->value;
  out.max_value = std::max_element(high.begin(), high.end(), by_value)->value;
  const double spread = out.max_value - out.min_value;
  out.degenerate = spread < options.degenerate_spread;
  const double band = std::min(options.absolute_band, options.relative_band * spread);

  for (const auto& r : low) {
    if (r.value - out.min_value <= band) out.argmin.push_back(r.point);
  }
  for (const auto& r : high) {
    if (out.max_value - r.value <= band) out.argmax.push_back(r.point);
  }
  return out;
}

}  // namespace clifford
