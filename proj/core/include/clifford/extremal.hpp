#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "clifford/great_sphere.hpp"
#include "clifford/manifold_search.hpp"
#include "clifford/quaternion.hpp"

namespace clifford {

/// The great 3-sphere {(y, e^{u theta} y e^{-u phi})}, placed conveniently relative
/// to the diagonal, with 0 < phi < theta < pi.
class OffsetSphereParams {
 public:
  /// Throws PreconditionError unless 0 < phi < theta < pi.
  OffsetSphereParams(const ImaginaryUnit& axis, double theta, double phi);

  const ImaginaryUnit& axis() const noexcept { return axis_; }
  double theta() const noexcept { return theta_; }
  double phi() const noexcept { return phi_; }

  GreatThreeSphere sphere() const noexcept;

 private:
  ImaginaryUnit axis_;
  double theta_;
  double phi_;
};

/// Product distance from (z, z) to the offset sphere: (1/sqrt 2) d(z, e^{-u theta} z e^{u phi}).
double point_to_diagonal_offset_distance(const UnitQuaternion& z, const OffsetSphereParams& params);

/// z^-1 e^{u theta} z; stays at distance theta from 1 for every z.
UnitQuaternion conjugation_orbit_point(const UnitQuaternion& z, double theta,
                                       const ImaginaryUnit& axis) noexcept;

/// Hot (closest) and cold (furthest) great circles, as point sets in one S^3 factor.
struct HotColdCircles {
  GreatCircle hot;
  GreatCircle cold;
};

/// In the diagonal: hot = circle through 1 and the axis u, cold = circle through the
/// other two units (v, w) of the positive basis (u, v, w).
HotColdCircles hot_cold_analytic(const OffsetSphereParams& params);

/// (1/sqrt 2)(theta - phi), the distance along the hot circle.
double hot_value(const OffsetSphereParams& params) noexcept;
/// (1/sqrt 2) min(theta + phi, 2 pi - theta - phi), the distance along the cold circle.
double cold_value(const OffsetSphereParams& params) noexcept;

/// Brute-force argmin / argmax sets of point_to_diagonal_offset_distance on a lattice of
/// grid_size points with local refinement. Throws PreconditionError for grid_size < 10^4.
SphereExtrema hot_cold_numeric(const OffsetSphereParams& params, std::size_t grid_size);

// The twisted fibration seen from Sigma_1 = {(x, x e^{-i alpha})} toward its
// neighbor Sigma_{p(theta)}, p(theta) = e^{j_theta eps}.

/// q' = e^{j_theta eps} e^{-i alpha} e^{-j_theta eps} e^{i alpha}, by direct products.
UnitQuaternion q_prime(double alpha, double eps, double theta);
/// The expansion
///   (cos^2 eps + sin^2 eps cos 2a) + (sin^2 eps sin 2a) i
///     + (2 cos eps sin eps sin a)(j cos(theta + a - pi/2) + k sin(theta + a - pi/2)),
/// evaluated as written. It matches q_prime only under the ij = -k convention; see
/// q_prime_corrected_closed_form.
UnitQuaternion q_prime_closed_form(double alpha, double eps, double theta);
/// The same expansion with phase theta - a + pi/2, which equals q_prime for ij = k.
UnitQuaternion q_prime_corrected_closed_form(double alpha, double eps, double theta);

/// q'' = e^{-i g} q' e^{i g}, g = (pi/2 - alpha)/2, by direct products.
UnitQuaternion q_double_prime(double alpha, double eps, double theta);
/// The expansion of q'' (phase theta).
UnitQuaternion q_double_prime_closed_form(double alpha, double eps, double theta);
/// normalize(1 + 2 eps sin(alpha) j_theta).
UnitQuaternion q_double_prime_first_order(double alpha, double eps, double theta);

/// T(x, y) = (x, y e^{i alpha}), taking Sigma_1 to the diagonal.
PairIsometry isometry_t(double alpha) noexcept;
/// T'(x, y) = (x e^{i g}, y e^{i g}), g = (pi/2 - alpha)/2.
PairIsometry isometry_t_prime(double alpha) noexcept;

/// Sigma_{p(theta)} in the twisted fibration with twist alpha.
GreatThreeSphere neighbor_fiber(double alpha, double eps, double theta);

struct HotColdFrame {
  double theta = 0.0;
  GreatCircle hot;
  GreatCircle cold;
  UnitQuaternion q_exact;
  UnitQuaternion q_first_order;

  double approx_error() const noexcept { return geodesic_distance(q_exact, q_first_order); }
};

/// Hot and cold circles on Sigma_1 (projected to the first factor) relative to
/// Sigma_{p(theta)}, in the limit eps -> 0. The q'' fields are evaluated at eps.
///
/// With g = e^{i(alpha/2 - pi/4)}: the closest circle passes through i g and
/// (-j sin theta + k cos theta) g, the furthest through g and j_theta g. In the
/// frame reached by T' o T the neighbor is {(y, e^{j_theta eps} y q'')} with
/// q'' ~ e^{+j_theta 2 eps sin alpha}, so the two exponents have opposite signs
/// and the hot and cold roles of the diagonal lemma are exchanged.
/// Throws PreconditionError unless 0 < alpha <= pi/6.
HotColdFrame hot_cold_on_sigma1(double alpha, double theta, double eps);

struct DiagonalReduction {
  /// (x, y) -> (x, p1^-1 y q1): the first sphere onto the diagonal.
  PairIsometry to_diagonal;
  /// Simultaneous right multiplication of both factors (preserves the diagonal)
  /// rotating the second exponent's axis onto the first's.
  PairIsometry alignment;
  /// alignment * to_diagonal.
  PairIsometry isometry;
  /// isometry applied to the second sphere.
  GreatThreeSphere image;
  /// Present unless the spheres are parallel (one exponent is +-1 and has no axis).
  std::optional<OffsetSphereParams> params;
  bool parallel = false;
};

/// Moves a onto the diagonal and b into offset form. Throws IntersectingSpheresError
/// when the spheres meet.
DiagonalReduction reduce_to_diagonal(const GreatThreeSphere& a, const GreatThreeSphere& b);

/// Exact hot / cold circles on a (first-factor projection) relative to b, through
/// reduce_to_diagonal and hot_cold_analytic. Throws PreconditionError for parallel spheres.
HotColdCircles hot_cold_between(const GreatThreeSphere& a, const GreatThreeSphere& b);

/// Brute-force extremal sets of x -> d((x, p1 x q1^-1), b) over S^3 (first factor of a).
SphereExtrema hot_cold_numeric_between(const GreatThreeSphere& a, const GreatThreeSphere& b,
                                       std::size_t grid_size);

/// Frames at theta = 2 pi k / n_frames, k = 0..n_frames-1, in that order.
/// Throws PreconditionError unless 0 < alpha <= pi/6 and n_frames >= 4.
std::vector<HotColdFrame> eggbeater_sweep(double alpha, double eps, std::size_t n_frames);

/// The antipodal pair +-i g every hot circle of the sweep passes through.
UnitQuaternion hot_pivot(double alpha);
/// The antipodal pair +-g every cold circle of the sweep passes through.
UnitQuaternion cold_pivot(double alpha);

}  // namespace clifford
