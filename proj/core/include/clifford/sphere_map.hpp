#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

#include "clifford/quaternion.hpp"

namespace clifford {

/// Largest twist angle for which f_alpha is distance-decreasing.
double max_twist_angle() noexcept;

/// A self-map of S^3. Fibrations are built from distance-decreasing instances.
class SphereMap {
 public:
  virtual ~SphereMap() = default;
  virtual UnitQuaternion operator()(const UnitQuaternion& p) const = 0;
  virtual std::string name() const = 0;
};

class ConstantMap final : public SphereMap {
 public:
  explicit ConstantMap(const UnitQuaternion& value = {}) noexcept : value_(value) {}
  UnitQuaternion operator()(const UnitQuaternion&) const override { return value_; }
  std::string name() const override;
  const UnitQuaternion& value() const noexcept { return value_; }

 private:
  UnitQuaternion value_;
};

/// p -> p (cos a + i sin a) p^-1, the Hopf map pushed onto the 2-sphere of radius
/// sin a about cos a. Constant along Hopf circles p e^{it}.
class HopfTwistMap final : public SphereMap {
 public:
  /// Throws PreconditionError unless 0 <= alpha <= pi/6.
  explicit HopfTwistMap(double alpha);
  UnitQuaternion operator()(const UnitQuaternion& p) const override;
  std::string name() const override;
  double alpha() const noexcept { return alpha_; }

 private:
  double alpha_;
  UnitQuaternion twist_;
};

/// pi_H(p) = p i p^-1.
ImaginaryUnit hopf_map(const UnitQuaternion& p);

/// f_alpha(p) = p (cos alpha + i sin alpha) p^-1. Throws PreconditionError outside [0, pi/6].
UnitQuaternion f_alpha(const UnitQuaternion& p, double alpha);

/// d(f_alpha(q p), q f_alpha(p) q^-1).
double pointwise_homogeneity_check(double alpha, const UnitQuaternion& q, const UnitQuaternion& p);

struct LipschitzEstimate {
  double max_ratio = 0.0;
  /// d(a, b) of the pair attaining max_ratio.
  double separation_at_max = 0.0;
  std::size_t pairs = 0;
};

/// Max over seeded pairs of d(f(a), f(b)) / d(a, b). Half of the pairs are uniform on
/// S^3 x S^3; the other half are at separations log-uniform in [1e-4, 1].
/// Throws PreconditionError for n_pairs < 10^4.
LipschitzEstimate lipschitz_estimate(const SphereMap& f, std::size_t n_pairs, std::uint64_t seed);

/// Throws PreconditionError if a sampled ratio reaches 1.
void validate_distance_decreasing(const SphereMap& f, std::size_t n_pairs = 10000,
                                  std::uint64_t seed = 0x5eed);

}  // namespace clifford
