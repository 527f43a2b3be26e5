#include "clifford/extremal.hpp"

#include <cmath>
#include <numbers>

#include "clifford/errors.hpp"
#include "clifford/sphere_map.hpp"

namespace clifford {
namespace {

constexpr double kPi = std::numbers::pi;

/// Axis and angle in (0, pi) of q = cos t + u sin t; nullopt when q = +-1.
std::optional<std::pair<ImaginaryUnit, double>> axis_angle(const UnitQuaternion& q) {
  const Vec3 im = q.imaginary();
  const double s = std::sqrt(im[0] * im[0] + im[1] * im[1] + im[2] * im[2]);
  if (s <= 1e-12) return std::nullopt;
  return std::pair{ImaginaryUnit::from_vector(im), std::atan2(s, q.w())};
}

/// h with h from h^-1 = to (the shortest rotation of the imaginary axis `from` onto `to`).
UnitQuaternion rotation_between(const ImaginaryUnit& from, const ImaginaryUnit& to) {
  const Vec3 a = from.vector();
  const Vec3 b = to.vector();
  const double c = a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
  if (c < -1.0 + 1e-12) {
    // Half turn about any axis perpendicular to `from`.
    return from.orthonormal_completion().first.quaternion();
  }
  const Vec3 n{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  return UnitQuaternion::from_components(1.0 + c, n[0], n[1], n[2]);
}

UnitQuaternion closed_form(double alpha, double eps, double phase) {
  const double c = std::cos(eps), s = std::sin(eps);
  const double lateral = 2.0 * c * s * std::sin(alpha);
  return UnitQuaternion::from_components(c * c + s * s * std::cos(2.0 * alpha),
                                         s * s * std::sin(2.0 * alpha),
                                         lateral * std::cos(phase), lateral * std::sin(phase));
}

double half_complement(double alpha) noexcept { return 0.5 * (0.5 * kPi - alpha); }

void require_twist(double alpha, const char* where) {
  if (!(alpha > 0.0 && alpha <= max_twist_angle())) {
    throw PreconditionError(std::string(where) + ": alpha must lie in (0, pi/6]");
  }
}

/// The circle through the images of z1, z2 in the diagonal, projected to the first factor
/// of the preimage of `to_diagonal`.
GreatCircle lift_circle(const PairIsometry& to_diagonal, const UnitQuaternion& z1,
                        const UnitQuaternion& z2) {
  const PairIsometry back = to_diagonal.inverse();
  return GreatCircle::through(back.apply(ProductPoint{z1, z1}).first,
                              back.apply(ProductPoint{z2, z2}).first);
}

}  // namespace

OffsetSphereParams::OffsetSphereParams(const ImaginaryUnit& axis, double theta, double phi)
    : axis_(axis), theta_(theta), phi_(phi) {
  if (!(0.0 < phi && phi < theta && theta < kPi)) {
    throw PreconditionError("OffsetSphereParams: require 0 < phi < theta < pi");
  }
}

GreatThreeSphere OffsetSphereParams::sphere() const noexcept {
  return {exp_axis(axis_, theta_), exp_axis(axis_, phi_)};
}

double point_to_diagonal_offset_distance(const UnitQuaternion& z, const OffsetSphereParams& params) {
  const UnitQuaternion moved =
      mul(mul(exp_axis(params.axis(), -params.theta()), z), exp_axis(params.axis(), params.phi()));
  return geodesic_distance(z, moved) / std::numbers::sqrt2;
}

UnitQuaternion conjugation_orbit_point(const UnitQuaternion& z, double theta,
                                       const ImaginaryUnit& axis) noexcept {
  return mul(mul(inverse(z), exp_axis(axis, theta)), z);
}

HotColdCircles hot_cold_analytic(const OffsetSphereParams& params) {
  const auto [v, w] = params.axis().orthonormal_completion();
  return {GreatCircle(UnitQuaternion::identity(), params.axis()), GreatCircle(v, w)};
}

double hot_value(const OffsetSphereParams& params) noexcept {
  return (params.theta() - params.phi()) / std::numbers::sqrt2;
}

double cold_value(const OffsetSphereParams& params) noexcept {
  const double sum = params.theta() + params.phi();
  return std::min(sum, 2.0 * kPi - sum) / std::numbers::sqrt2;
}

SphereExtrema hot_cold_numeric(const OffsetSphereParams& params, std::size_t grid_size) {
  if (grid_size < 10000) throw PreconditionError("hot_cold_numeric: grid_size must be >= 10^4");
  return extremize_on_sphere(
      [&](const UnitQuaternion& z) { return point_to_diagonal_offset_distance(z, params); },
      grid_size);
}

UnitQuaternion q_prime(double alpha, double eps, double theta) {
  const ImaginaryUnit jt = ImaginaryUnit::j_theta(theta);
  const ImaginaryUnit i = ImaginaryUnit::i();
  return exp_axis(jt, eps) * exp_axis(i, -alpha) * exp_axis(jt, -eps) * exp_axis(i, alpha);
}

UnitQuaternion q_prime_closed_form(double alpha, double eps, double theta) {
  return closed_form(alpha, eps, theta + alpha - 0.5 * kPi);
}

UnitQuaternion q_prime_corrected_closed_form(double alpha, double eps, double theta) {
  return closed_form(alpha, eps, theta - alpha + 0.5 * kPi);
}

UnitQuaternion q_double_prime(double alpha, double eps, double theta) {
  const ImaginaryUnit i = ImaginaryUnit::i();
  const double g = half_complement(alpha);
  return exp_axis(i, -g) * q_prime(alpha, eps, theta) * exp_axis(i, g);
}

UnitQuaternion q_double_prime_closed_form(double alpha, double eps, double theta) {
  return closed_form(alpha, eps, theta);
}

UnitQuaternion q_double_prime_first_order(double alpha, double eps, double theta) {
  const double lateral = 2.0 * eps * std::sin(alpha);
  return UnitQuaternion::from_components(1.0, 0.0, lateral * std::cos(theta),
                                         lateral * std::sin(theta));
}

PairIsometry isometry_t(double alpha) noexcept {
  return {Rotation4::identity(),
          Rotation4::right_multiplication(exp_axis(ImaginaryUnit::i(), alpha))};
}

PairIsometry isometry_t_prime(double alpha) noexcept {
  const Rotation4 r = Rotation4::right_multiplication(exp_axis(ImaginaryUnit::i(), half_complement(alpha)));
  return {r, r};
}

GreatThreeSphere neighbor_fiber(double alpha, double eps, double theta) {
  const UnitQuaternion p = exp_axis(ImaginaryUnit::j_theta(theta), eps);
  return {p, f_alpha(p, alpha)};
}

UnitQuaternion hot_pivot(double alpha) {
  return mul(UnitQuaternion::unit_i(), cold_pivot(alpha));
}

UnitQuaternion cold_pivot(double alpha) {
  return exp_axis(ImaginaryUnit::i(), 0.5 * alpha - 0.25 * kPi);
}

HotColdFrame hot_cold_on_sigma1(double alpha, double theta, double eps) {
  require_twist(alpha, "hot_cold_on_sigma1");
  // After T' o T the neighbor is {(y, e^{u eps} y q'')}, q'' -> e^{+u 2 eps sin(alpha)},
  // u = j_theta. Right multiplication of both factors by i keeps the diagonal and turns
  // the second exponent's axis from -u to u, giving the lemma's offset form about u.
  const ImaginaryUnit u = ImaginaryUnit::j_theta(theta);
  const Rotation4 by_i = Rotation4::right_multiplication(UnitQuaternion::unit_i());
  const PairIsometry to_lemma =
      PairIsometry(by_i, by_i) * isometry_t_prime(alpha) * isometry_t(alpha);
  const auto [v, w] = u.orthonormal_completion();

  HotColdFrame frame{theta,
                     lift_circle(to_lemma, UnitQuaternion::identity(), u),
                     lift_circle(to_lemma, v, w),
                     q_double_prime(alpha, eps, theta),
                     q_double_prime_first_order(alpha, eps, theta)};
  return frame;
}

DiagonalReduction reduce_to_diagonal(const GreatThreeSphere& a, const GreatThreeSphere& b) {
  if (!petro_disjoint(a, b)) {
    throw IntersectingSpheresError("reduce_to_diagonal: the spheres intersect");
  }
  const PairIsometry to_diagonal(Rotation4::identity(), Rotation4{inverse(a.p()), inverse(a.q())});
  const GreatThreeSphere base = to_diagonal.apply(b);

  const auto r = axis_angle(base.p());
  const auto s = axis_angle(base.q());
  if (!r || !s) {
    return {to_diagonal, PairIsometry::identity(), to_diagonal, base, std::nullopt, true};
  }

  // Right multiplication by g on both factors sends s to g^-1 s g; choose g^-1 = h
  // with h s_axis h^-1 = r_axis.
  const UnitQuaternion h = rotation_between(s->first, r->first);
  const Rotation4 right{UnitQuaternion::identity(), h};
  const PairIsometry alignment(right, right);
  const PairIsometry isometry = alignment * to_diagonal;

  const double theta = r->second;
  const double phi = s->second;
  // When phi > theta, (-r, -s) = (e^{-u (pi - theta)}, e^{-u (pi - phi)}) is the same sphere.
  std::optional<OffsetSphereParams> params;
  if (phi < theta) {
    params.emplace(r->first, theta, phi);
  } else {
    params.emplace(-r->first, kPi - theta, kPi - phi);
  }
  return {to_diagonal, alignment, isometry, isometry.apply(b), params, false};
}

HotColdCircles hot_cold_between(const GreatThreeSphere& a, const GreatThreeSphere& b) {
  const DiagonalReduction red = reduce_to_diagonal(a, b);
  if (!red.params) {
    throw PreconditionError("hot_cold_between: parallel spheres have no hot or cold set");
  }
  const HotColdCircles diag = hot_cold_analytic(*red.params);
  return {lift_circle(red.isometry, diag.hot.a(), diag.hot.b()),
          lift_circle(red.isometry, diag.cold.a(), diag.cold.b())};
}

SphereExtrema hot_cold_numeric_between(const GreatThreeSphere& a, const GreatThreeSphere& b,
                                       std::size_t grid_size) {
  return extremize_on_sphere(
      [&](const UnitQuaternion& x) { return point_to_sphere_distance(a.point(x), b); }, grid_size);
}

std::vector<HotColdFrame> eggbeater_sweep(double alpha, double eps, std::size_t n_frames) {
  require_twist(alpha, "eggbeater_sweep");
  if (n_frames < 4) throw PreconditionError("eggbeater_sweep: n_frames must be >= 4");
  if (!(eps > 0.0)) throw PreconditionError("eggbeater_sweep: eps must be positive");
  std::vector<HotColdFrame> frames;
  frames.reserve(n_frames);
  for (std::size_t k = 0; k < n_frames; ++k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(n_frames);
    frames.push_back(hot_cold_on_sigma1(alpha, theta, eps));
  }
  return frames;
}

}  // namespace clifford
