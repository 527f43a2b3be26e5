#pragma once

#include <array>
#include <iosfwd>
#include <utility>

namespace clifford {

/// Tolerance on |q| = 1 maintained by every UnitQuaternion.
inline constexpr double kUnitTolerance = 1e-12;

/// Leading-component threshold used when choosing a representative of {(p, q), (-p, -q)}.
inline constexpr double kSignThreshold = 1e-9;

using Vec3 = std::array<double, 3>;

/// A point of S^3, stored as w + x i + y j + z k with w^2 + x^2 + y^2 + z^2 = 1.
///
/// Every factory normalizes its input, so the unit constraint holds to within
/// kUnitTolerance after construction and after every product.
class UnitQuaternion {
 public:
  /// The identity 1.
  constexpr UnitQuaternion() noexcept = default;

  /// Normalizes (w, x, y, z). Throws PreconditionError for a zero or non-finite input.
  static UnitQuaternion from_components(double w, double x, double y, double z);
  static UnitQuaternion from_array(const std::array<double, 4>& c) {
    return from_components(c[0], c[1], c[2], c[3]);
  }

  static constexpr UnitQuaternion identity() noexcept { return {}; }
  static constexpr UnitQuaternion unit_i() noexcept { return UnitQuaternion(0, 1, 0, 0); }
  static constexpr UnitQuaternion unit_j() noexcept { return UnitQuaternion(0, 0, 1, 0); }
  static constexpr UnitQuaternion unit_k() noexcept { return UnitQuaternion(0, 0, 0, 1); }

  constexpr double w() const noexcept { return w_; }
  constexpr double x() const noexcept { return x_; }
  constexpr double y() const noexcept { return y_; }
  constexpr double z() const noexcept { return z_; }
  constexpr std::array<double, 4> components() const noexcept { return {w_, x_, y_, z_}; }
  constexpr Vec3 imaginary() const noexcept { return {x_, y_, z_}; }

  /// Euclidean inner product in R^4.
  constexpr double dot(const UnitQuaternion& o) const noexcept {
    return w_ * o.w_ + x_ * o.x_ + y_ * o.y_ + z_ * o.z_;
  }

  constexpr UnitQuaternion operator-() const noexcept { return UnitQuaternion(-w_, -x_, -y_, -z_); }

  friend constexpr bool operator==(const UnitQuaternion&, const UnitQuaternion&) = default;

 private:
  constexpr UnitQuaternion(double w, double x, double y, double z) noexcept
      : w_(w), x_(x), y_(y), z_(z) {}

  double w_ = 1.0;
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

std::ostream& operator<<(std::ostream& os, const UnitQuaternion& q);

/// A unit quaternion with zero real part; a point of the 2-sphere of imaginary units.
class ImaginaryUnit {
 public:
  /// Normalizes (x, y, z). Throws PreconditionError for a zero vector.
  static ImaginaryUnit from_vector(double x, double y, double z);
  static ImaginaryUnit from_vector(const Vec3& v) { return from_vector(v[0], v[1], v[2]); }
  /// Throws PreconditionError unless |Re q| <= kUnitTolerance.
  static ImaginaryUnit from_quaternion(const UnitQuaternion& q);

  static ImaginaryUnit i() { return ImaginaryUnit(UnitQuaternion::unit_i()); }
  static ImaginaryUnit j() { return ImaginaryUnit(UnitQuaternion::unit_j()); }
  static ImaginaryUnit k() { return ImaginaryUnit(UnitQuaternion::unit_k()); }
  /// j cos(theta) + k sin(theta), the point of the j-k great circle at angle theta.
  static ImaginaryUnit j_theta(double theta);

  const UnitQuaternion& quaternion() const noexcept { return q_; }
  Vec3 vector() const noexcept { return q_.imaginary(); }
  ImaginaryUnit operator-() const noexcept { return ImaginaryUnit(-q_); }

  /// Completes this unit to a positively oriented orthonormal basis (u, v, w) of the
  /// imaginary quaternions. For i this yields (j, k); for k it yields (i, j).
  std::pair<ImaginaryUnit, ImaginaryUnit> orthonormal_completion() const;

  operator const UnitQuaternion&() const noexcept { return q_; }  // NOLINT

 private:
  explicit ImaginaryUnit(const UnitQuaternion& q) noexcept : q_(q) {}
  UnitQuaternion q_;
};

/// Hamilton product, renormalized.
UnitQuaternion mul(const UnitQuaternion& a, const UnitQuaternion& b) noexcept;
inline UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) noexcept {
  return mul(a, b);
}

UnitQuaternion conjugate(const UnitQuaternion& a) noexcept;
/// For unit quaternions the inverse is the conjugate.
inline UnitQuaternion inverse(const UnitQuaternion& a) noexcept { return conjugate(a); }

/// cos t + u sin t.
UnitQuaternion exp_axis(const ImaginaryUnit& u, double t) noexcept;

/// Angle in [0, pi] between a and b as points of the unit 3-sphere.
double geodesic_distance(const UnitQuaternion& a, const UnitQuaternion& b) noexcept;

/// Midpoint of the minimizing geodesic, a (a^-1 b)^{1/2}. Throws AntipodalError when b = -a.
UnitQuaternion geodesic_midpoint(const UnitQuaternion& a, const UnitQuaternion& b);

/// Flips both signs so that the first component of `first` with magnitude above
/// kSignThreshold is positive.
std::pair<UnitQuaternion, UnitQuaternion> canonicalize_sign(
    const std::pair<UnitQuaternion, UnitQuaternion>& pair) noexcept;

/// q exp(v), with v in body coordinates (the tangent vector q (v1 i + v2 j + v3 k)).
UnitQuaternion exp_body(const UnitQuaternion& q, const Vec3& v) noexcept;

/// Body-frame logarithm of a^-1 b: the shortest v with exp_body(a, v) = b; |v| = d(a, b).
Vec3 log_body(const UnitQuaternion& a, const UnitQuaternion& b) noexcept;

/// Rotation angle in [0, pi] of q about its imaginary axis, i.e. d(q, 1).
inline double rotation_angle(const UnitQuaternion& q) noexcept {
  return geodesic_distance(q, UnitQuaternion::identity());
}

/// The great circle t -> a cos t + b sin t through two orthogonal unit quaternions.
class GreatCircle {
 public:
  /// Throws PreconditionError unless |<a, b>| <= kUnitTolerance.
  GreatCircle(const UnitQuaternion& a, const UnitQuaternion& b);

  /// Great circle through two non-antipodal, distinct points (Gram-Schmidt on b).
  static GreatCircle through(const UnitQuaternion& a, const UnitQuaternion& b);

  const UnitQuaternion& a() const noexcept { return a_; }
  const UnitQuaternion& b() const noexcept { return b_; }

  UnitQuaternion point_at(double t) const noexcept;

  /// Geodesic distance from q to the nearest point of the circle.
  double distance_to(const UnitQuaternion& q) const noexcept;
  bool contains(const UnitQuaternion& q, double tol) const noexcept { return distance_to(q) <= tol; }

  /// Largest principal angle between the two planes: the furthest any point of
  /// this circle lies from `other`. Zero iff both describe the same point set.
  double distance_to_circle(const GreatCircle& other) const noexcept;

  /// Max |<u, v>| over basis vectors u of this plane and v of the other's.
  double max_cross_inner_product(const GreatCircle& other) const noexcept;

 private:
  UnitQuaternion a_;
  UnitQuaternion b_;
};

}  // namespace clifford
