#include "clifford/sphere_map.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "clifford/errors.hpp"
#include "clifford/sampling.hpp"

namespace clifford {

double max_twist_angle() noexcept { return std::numbers::pi / 6.0; }

std::string ConstantMap::name() const {
  std::ostringstream os;
  os.precision(17);
  os << "constant" << value_;
  return os.str();
}

HopfTwistMap::HopfTwistMap(double alpha)
    : alpha_(alpha), twist_(exp_axis(ImaginaryUnit::i(), alpha)) {
  if (!(alpha >= 0.0 && alpha <= max_twist_angle())) {
    throw PreconditionError("f_alpha: alpha must lie in [0, pi/6]");
  }
}

UnitQuaternion HopfTwistMap::operator()(const UnitQuaternion& p) const {
  return mul(mul(p, twist_), inverse(p));
}

std::string HopfTwistMap::name() const {
  std::ostringstream os;
  os.precision(17);
  os << "f_alpha(" << alpha_ << ")";
  return os.str();
}

ImaginaryUnit hopf_map(const UnitQuaternion& p) {
  const UnitQuaternion image = mul(mul(p, UnitQuaternion::unit_i()), inverse(p));
  return ImaginaryUnit::from_vector(image.imaginary());
}

UnitQuaternion f_alpha(const UnitQuaternion& p, double alpha) { return HopfTwistMap(alpha)(p); }

double pointwise_homogeneity_check(double alpha, const UnitQuaternion& q, const UnitQuaternion& p) {
  const HopfTwistMap f(alpha);
  return geodesic_distance(f(mul(q, p)), mul(mul(q, f(p)), inverse(q)));
}

LipschitzEstimate lipschitz_estimate(const SphereMap& f, std::size_t n_pairs, std::uint64_t seed) {
  if (n_pairs < 10000) throw PreconditionError("lipschitz_estimate: need at least 10^4 pairs");
  SphereSampler sampler(seed);
  LipschitzEstimate est;
  for (std::size_t n = 0; n < n_pairs; ++n) {
    const UnitQuaternion a = sampler.uniform_point();
    const UnitQuaternion b = (n % 2 == 0)
                                 ? sampler.uniform_point()
                                 : sampler.point_at_distance(
                                       a, std::pow(10.0, sampler.uniform_real(-4.0, 0.0)));
    const double d = geodesic_distance(a, b);
    if (d == 0.0) continue;
    ++est.pairs;
    const double ratio = geodesic_distance(f(a), f(b)) / d;
    if (ratio > est.max_ratio) {
      est.max_ratio = ratio;
      est.separation_at_max = d;
    }
  }
  return est;
}

void validate_distance_decreasing(const SphereMap& f, std::size_t n_pairs, std::uint64_t seed) {
  const LipschitzEstimate est = lipschitz_estimate(f, n_pairs, seed);
  if (!(est.max_ratio < 1.0)) {
    std::ostringstream os;
    os << f.name() << " is not distance-decreasing: sampled ratio " << est.max_ratio
       << " at separation " << est.separation_at_max;
    throw PreconditionError(os.str());
  }
}

}  // namespace clifford
