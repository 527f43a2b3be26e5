#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "clifford/quaternion.hpp"

namespace clifford {

/// Seeded source of random points on S^3 and on the 2-sphere of imaginary units.
///
/// Uniform points are four standard normals, normalized. The stream is fully
/// determined by the seed.
class SphereSampler {
 public:
  explicit SphereSampler(std::uint64_t seed) : engine_(seed) {}

  UnitQuaternion uniform_point();
  ImaginaryUnit uniform_axis();
  double uniform_real(double lo, double hi);

  /// A point at geodesic distance `separation` from `from`, in a uniformly random direction.
  UnitQuaternion point_at_distance(const UnitQuaternion& from, double separation);

  std::mt19937_64& engine() noexcept { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// n uniform points on S^3; identical output for identical (seed, n). Throws for n < 1.
std::vector<UnitQuaternion> sample_uniform(std::uint64_t seed, std::size_t n);

/// Quasi-uniform deterministic lattice of n points on S^3 (super-Fibonacci spiral).
std::vector<UnitQuaternion> fibonacci_lattice(std::size_t n);

/// Nominal spacing of an n-point quasi-uniform set: cbrt(vol(S^3) / n) = cbrt(2 pi^2 / n).
double lattice_spacing(std::size_t n);

}  // namespace clifford
