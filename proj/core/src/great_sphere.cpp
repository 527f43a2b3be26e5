#include "clifford/great_sphere.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "clifford/errors.hpp"
#include "clifford/manifold_search.hpp"
#include "clifford/sampling.hpp"

namespace clifford {

double product_distance(const ProductPoint& a, const ProductPoint& b) noexcept {
  return std::hypot(geodesic_distance(a.first, b.first), geodesic_distance(a.second, b.second));
}

GreatThreeSphere::GreatThreeSphere(const UnitQuaternion& p, const UnitQuaternion& q) noexcept {
  const auto canonical = canonicalize_sign({p, q});
  p_ = canonical.first;
  q_ = canonical.second;
}

bool GreatThreeSphere::same_as(const GreatThreeSphere& other, double tol) const noexcept {
  auto close = [tol](const UnitQuaternion& a, const UnitQuaternion& b) {
    const auto ac = a.components();
    const auto bc = b.components();
    for (std::size_t n = 0; n < 4; ++n) {
      if (std::abs(ac[n] - bc[n]) > tol) return false;
    }
    return true;
  };
  return (close(p_, other.p_) && close(q_, other.q_)) ||
         (close(p_, -other.p_) && close(q_, -other.q_));
}

double membership_residual(const GreatThreeSphere& sphere, const ProductPoint& point) noexcept {
  return geodesic_distance(point.second, sphere.graph(point.first));
}

bool fiber_contains(const GreatThreeSphere& sphere, const ProductPoint& point, double tol) noexcept {
  return membership_residual(sphere, point) <= tol;
}

double point_to_sphere_distance(const ProductPoint& point, const GreatThreeSphere& sphere) noexcept {
  const UnitQuaternion pulled = mul(mul(inverse(sphere.p()), point.second), sphere.q());
  return geodesic_distance(point.first, pulled) / std::numbers::sqrt2;
}

double petro_discrepancy(const GreatThreeSphere& a, const GreatThreeSphere& b) noexcept {
  const double direct =
      std::abs(geodesic_distance(a.p(), b.p()) - geodesic_distance(a.q(), b.q()));
  const double flipped =
      std::abs(geodesic_distance(a.p(), -b.p()) - geodesic_distance(a.q(), -b.q()));
  return std::min(direct, flipped);
}

bool petro_disjoint(const GreatThreeSphere& a, const GreatThreeSphere& b, double tol) noexcept {
  return petro_discrepancy(a, b) > tol;
}

double brute_force_min_distance(const GreatThreeSphere& a, const GreatThreeSphere& b,
                                std::size_t grid_size) {
  if (grid_size < 1000) {
    throw PreconditionError("brute_force_min_distance: grid_size must be at least 1000");
  }
  const SphereObjective objective = [&](const UnitQuaternion& x) {
    return point_to_sphere_distance(a.point(x), b);
  };
  ExtremizeOptions options;
  options.seeds = 8;
  options.refine.max_steps = 200;
  return extremize_on_sphere(objective, grid_size, options).min_value;
}

DistanceProfile pointwise_distance_profile(const GreatThreeSphere& a, const GreatThreeSphere& b,
                                           std::size_t n_samples, std::uint64_t seed) {
  if (n_samples < 1) throw PreconditionError("pointwise_distance_profile: no samples");
  SphereSampler sampler(seed);
  DistanceProfile profile;
  profile.samples = n_samples;
  profile.min = std::numeric_limits<double>::infinity();
  profile.max = -std::numeric_limits<double>::infinity();
  // Welford's running mean and variance.
  double m2 = 0.0;
  for (std::size_t n = 0; n < n_samples; ++n) {
    const double value = point_to_sphere_distance(a.point(sampler.uniform_point()), b);
    const double delta = value - profile.mean;
    profile.mean += delta / static_cast<double>(n + 1);
    m2 += delta * (value - profile.mean);
    profile.min = std::min(profile.min, value);
    profile.max = std::max(profile.max, value);
  }
  profile.variance = m2 / static_cast<double>(n_samples);
  return profile;
}

bool fibers_parallel(const GreatThreeSphere& a, const GreatThreeSphere& b, std::size_t n_samples,
                     std::uint64_t seed, double tol) {
  if (!petro_disjoint(a, b)) {
    throw IntersectingSpheresError("fibers_parallel: the spheres intersect");
  }
  return pointwise_distance_profile(a, b, n_samples, seed).spread() <= tol;
}

GreatThreeSphere PairIsometry::apply(const GreatThreeSphere& sphere) const noexcept {
  return {mul(mul(second_.left, sphere.p()), clifford::inverse(first_.left)),
          mul(mul(second_.right, sphere.q()), clifford::inverse(first_.right))};
}

double isometry_defect(const PairIsometry& isometry, std::size_t n_samples, std::uint64_t seed) {
  SphereSampler sampler(seed);
  double worst = 0.0;
  for (std::size_t n = 0; n < n_samples; ++n) {
    const ProductPoint a{sampler.uniform_point(), sampler.uniform_point()};
    const ProductPoint b{sampler.uniform_point(), sampler.uniform_point()};
    const double before = product_distance(a, b);
    const double after = product_distance(isometry.apply(a), isometry.apply(b));
    worst = std::max(worst, std::abs(after - before));
  }
  return worst;
}

double isometry_difference(const PairIsometry& f, const PairIsometry& g, std::size_t n_samples,
                           std::uint64_t seed) {
  SphereSampler sampler(seed);
  double worst = 0.0;
  for (std::size_t n = 0; n < n_samples; ++n) {
    const ProductPoint x{sampler.uniform_point(), sampler.uniform_point()};
    worst = std::max(worst, product_distance(f.apply(x), g.apply(x)));
  }
  return worst;
}

}  // namespace clifford
