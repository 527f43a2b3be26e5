#include "clifford/sampling.hpp"

#include <cmath>
#include <numbers>

#include "clifford/errors.hpp"

namespace clifford {

UnitQuaternion SphereSampler::uniform_point() {
  for (;;) {
    const double w = normal_(engine_), x = normal_(engine_), y = normal_(engine_),
                 z = normal_(engine_);
    if (w * w + x * x + y * y + z * z > 1e-20) return UnitQuaternion::from_components(w, x, y, z);
  }
}

ImaginaryUnit SphereSampler::uniform_axis() {
  for (;;) {
    const double x = normal_(engine_), y = normal_(engine_), z = normal_(engine_);
    if (x * x + y * y + z * z > 1e-20) return ImaginaryUnit::from_vector(x, y, z);
  }
}

double SphereSampler::uniform_real(double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(engine_);
}

UnitQuaternion SphereSampler::point_at_distance(const UnitQuaternion& from, double separation) {
  const Vec3 dir = uniform_axis().vector();
  return exp_body(from, {separation * dir[0], separation * dir[1], separation * dir[2]});
}

std::vector<UnitQuaternion> sample_uniform(std::uint64_t seed, std::size_t n) {
  if (n < 1) throw PreconditionError("sample_uniform: n must be at least 1");
  SphereSampler sampler(seed);
  std::vector<UnitQuaternion> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) out.push_back(sampler.uniform_point());
  return out;
}

std::vector<UnitQuaternion> fibonacci_lattice(std::size_t n) {
  if (n < 1) throw PreconditionError("fibonacci_lattice: n must be at least 1");
  // Alexa's super-Fibonacci spiral: two irrational winding rates on the Hopf tori.
  constexpr double phi = std::numbers::sqrt2;
  constexpr double psi = 1.533751168755204288118041;
  constexpr double two_pi = 2.0 * std::numbers::pi;
  std::vector<UnitQuaternion> out;
  out.reserve(n);
  const double count = static_cast<double>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double s = static_cast<double>(k) + 0.5;
    const double r = std::sqrt(s / count);
    const double big_r = std::sqrt(1.0 - s / count);
    const double alpha = two_pi * s / phi;
    const double beta = two_pi * s / psi;
    out.push_back(UnitQuaternion::from_components(r * std::sin(alpha), r * std::cos(alpha),
                                                  big_r * std::sin(beta), big_r * std::cos(beta)));
  }
  return out;
}

double lattice_spacing(std::size_t n) {
  return std::cbrt(2.0 * std::numbers::pi * std::numbers::pi / static_cast<double>(n));
}

}  // namespace clifford
