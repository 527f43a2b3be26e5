#include "clifford/quaternion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "clifford/errors.hpp"

namespace clifford {
namespace {

double norm4(double w, double x, double y, double z) noexcept {
  return std::sqrt(w * w + x * x + y * y + z * z);
}

double norm3(const Vec3& v) noexcept { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

Vec3 cross(const Vec3& a, const Vec3& b) noexcept {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double dot3(const Vec3& a, const Vec3& b) noexcept { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

}  // namespace

UnitQuaternion UnitQuaternion::from_components(double w, double x, double y, double z) {
  const double n = norm4(w, x, y, z);
  if (!std::isfinite(n) || n == 0.0) {
    throw PreconditionError("UnitQuaternion: components must be finite and not all zero");
  }
  return UnitQuaternion(w / n, x / n, y / n, z / n);
}

std::ostream& operator<<(std::ostream& os, const UnitQuaternion& q) {
  return os << '[' << q.w() << ", " << q.x() << ", " << q.y() << ", " << q.z() << ']';
}

ImaginaryUnit ImaginaryUnit::from_vector(double x, double y, double z) {
  return ImaginaryUnit(UnitQuaternion::from_components(0.0, x, y, z));
}

ImaginaryUnit ImaginaryUnit::from_quaternion(const UnitQuaternion& q) {
  if (std::abs(q.w()) > kUnitTolerance) {
    throw PreconditionError("ImaginaryUnit: quaternion has a nonzero real part");
  }
  return from_vector(q.x(), q.y(), q.z());
}

ImaginaryUnit ImaginaryUnit::j_theta(double theta) {
  return from_vector(0.0, std::cos(theta), std::sin(theta));
}

std::pair<ImaginaryUnit, ImaginaryUnit> ImaginaryUnit::orthonormal_completion() const {
  const Vec3 u = vector();
  std::size_t largest = 0;
  for (std::size_t c = 1; c < 3; ++c) {
    if (std::abs(u[c]) > std::abs(u[largest])) largest = c;
  }
  Vec3 e{0.0, 0.0, 0.0};
  e[(largest + 1) % 3] = 1.0;
  const double along = dot3(e, u);
  const Vec3 v{e[0] - along * u[0], e[1] - along * u[1], e[2] - along * u[2]};
  const ImaginaryUnit second = from_vector(v);
  const ImaginaryUnit third = from_vector(cross(u, second.vector()));
  return {second, third};
}

UnitQuaternion mul(const UnitQuaternion& a, const UnitQuaternion& b) noexcept {
  const double w = a.w() * b.w() - a.x() * b.x() - a.y() * b.y() - a.z() * b.z();
  const double x = a.w() * b.x() + a.x() * b.w() + a.y() * b.z() - a.z() * b.y();
  const double y = a.w() * b.y() - a.x() * b.z() + a.y() * b.w() + a.z() * b.x();
  const double z = a.w() * b.z() + a.x() * b.y() - a.y() * b.x() + a.z() * b.w();
  // A product of unit quaternions is never zero.
  return UnitQuaternion::from_components(w, x, y, z);
}

UnitQuaternion conjugate(const UnitQuaternion& a) noexcept {
  return UnitQuaternion::from_components(a.w(), -a.x(), -a.y(), -a.z());
}

UnitQuaternion exp_axis(const ImaginaryUnit& u, double t) noexcept {
  const double s = std::sin(t);
  const Vec3 v = u.vector();
  return UnitQuaternion::from_components(std::cos(t), s * v[0], s * v[1], s * v[2]);
}

double geodesic_distance(const UnitQuaternion& a, const UnitQuaternion& b) noexcept {
  const double dw = a.w() - b.w(), dx = a.x() - b.x(), dy = a.y() - b.y(), dz = a.z() - b.z();
  const double sw = a.w() + b.w(), sx = a.x() + b.x(), sy = a.y() + b.y(), sz = a.z() + b.z();
  return 2.0 * std::atan2(norm4(dw, dx, dy, dz), norm4(sw, sx, sy, sz));
}

UnitQuaternion geodesic_midpoint(const UnitQuaternion& a, const UnitQuaternion& b) {
  const double sum = norm4(a.w() + b.w(), a.x() + b.x(), a.y() + b.y(), a.z() + b.z());
  if (sum <= kUnitTolerance) {
    throw AntipodalError("geodesic_midpoint: antipodal points have no unique midpoint");
  }
  Vec3 half = log_body(a, b);
  for (double& c : half) c *= 0.5;
  return exp_body(a, half);
}

std::pair<UnitQuaternion, UnitQuaternion> canonicalize_sign(
    const std::pair<UnitQuaternion, UnitQuaternion>& pair) noexcept {
  for (double c : pair.first.components()) {
    if (std::abs(c) > kSignThreshold) {
      if (c < 0.0) return {-pair.first, -pair.second};
      break;
    }
  }
  return pair;
}

UnitQuaternion exp_body(const UnitQuaternion& q, const Vec3& v) noexcept {
  const double angle = norm3(v);
  if (angle == 0.0) return q;
  const double s = std::sin(angle) / angle;
  return mul(q, UnitQuaternion::from_components(std::cos(angle), s * v[0], s * v[1], s * v[2]));
}

Vec3 log_body(const UnitQuaternion& a, const UnitQuaternion& b) noexcept {
  const UnitQuaternion c = mul(conjugate(a), b);
  const Vec3 im = c.imaginary();
  const double s = norm3(im);
  if (s == 0.0) return {0.0, 0.0, 0.0};
  const double angle = std::atan2(s, c.w());
  return {angle * im[0] / s, angle * im[1] / s, angle * im[2] / s};
}

GreatCircle::GreatCircle(const UnitQuaternion& a, const UnitQuaternion& b) : a_(a), b_(b) {
  if (std::abs(a.dot(b)) > kUnitTolerance) {
    throw PreconditionError("GreatCircle: basis points must be orthogonal");
  }
}

GreatCircle GreatCircle::through(const UnitQuaternion& a, const UnitQuaternion& b) {
  const double c = a.dot(b);
  const auto ac = a.components();
  const auto bc = b.components();
  std::array<double, 4> r{};
  for (std::size_t n = 0; n < 4; ++n) r[n] = bc[n] - c * ac[n];
  if (norm4(r[0], r[1], r[2], r[3]) <= 1e-12) {
    throw PreconditionError("GreatCircle::through: points are coincident or antipodal");
  }
  UnitQuaternion second = UnitQuaternion::from_array(r);
  // One more Gram-Schmidt pass brings <a, second> below the constructor tolerance.
  const double residual = a.dot(second);
  const auto sc = second.components();
  for (std::size_t n = 0; n < 4; ++n) r[n] = sc[n] - residual * ac[n];
  return GreatCircle(a, UnitQuaternion::from_array(r));
}

UnitQuaternion GreatCircle::point_at(double t) const noexcept {
  const double c = std::cos(t), s = std::sin(t);
  return UnitQuaternion::from_components(c * a_.w() + s * b_.w(), c * a_.x() + s * b_.x(),
                                         c * a_.y() + s * b_.y(), c * a_.z() + s * b_.z());
}

double GreatCircle::distance_to(const UnitQuaternion& q) const noexcept {
  const double ca = q.dot(a_), cb = q.dot(b_);
  const auto qc = q.components();
  const auto ac = a_.components();
  const auto bc = b_.components();
  double perp2 = 0.0;
  for (std::size_t n = 0; n < 4; ++n) {
    const double r = qc[n] - ca * ac[n] - cb * bc[n];
    perp2 += r * r;
  }
  return std::atan2(std::sqrt(perp2), std::hypot(ca, cb));
}

double GreatCircle::distance_to_circle(const GreatCircle& other) const noexcept {
  // Largest principal angle between the two planes: the point of this circle
  // furthest from `other` lies along the minor eigenvector of M^T M, with
  // M the 2x2 matrix of cross inner products.
  const double m11 = a_.dot(other.a_), m12 = a_.dot(other.b_);
  const double m21 = b_.dot(other.a_), m22 = b_.dot(other.b_);
  const double p = m11 * m11 + m12 * m12;
  const double q = m11 * m21 + m12 * m22;
  const double r = m21 * m21 + m22 * m22;
  const double major = 0.5 * std::atan2(2.0 * q, p - r);
  const double minor = major + 0.5 * std::acos(-1.0);
  const double furthest = other.distance_to(point_at(minor));
  return std::max({furthest, other.distance_to(a_), other.distance_to(b_)});
}

double GreatCircle::max_cross_inner_product(const GreatCircle& other) const noexcept {
  return std::max({std::abs(a_.dot(other.a_)), std::abs(a_.dot(other.b_)),
                   std::abs(b_.dot(other.a_)), std::abs(b_.dot(other.b_))});
}

}  // namespace clifford
