#pragma once

#include <cstddef>
#include <cstdint>

#include "clifford/quaternion.hpp"

namespace clifford {

/// Disjointness tolerance on the Petro criterion |d(p1,p2) - d(q1,q2)|.
inline constexpr double kPetroTolerance = 1e-9;
/// Membership tolerance: a point (a, b) lies on a sphere when d(b, p a q^-1) is below this.
inline constexpr double kMembershipTolerance = 1e-9;

/// A point of S^3 x S^3.
struct ProductPoint {
  UnitQuaternion first;
  UnitQuaternion second;
};

/// Product metric sqrt(d1^2 + d2^2), each factor measured on the unit 3-sphere.
double product_distance(const ProductPoint& a, const ProductPoint& b) noexcept;

/// The element x -> left x right^-1 of SO(4).
struct Rotation4 {
  UnitQuaternion left;
  UnitQuaternion right;

  UnitQuaternion apply(const UnitQuaternion& x) const noexcept {
    return mul(mul(left, x), clifford::inverse(right));
  }
  Rotation4 inverse() const noexcept { return {clifford::inverse(left), clifford::inverse(right)}; }
  /// (a * b)(x) = a(b(x)).
  friend Rotation4 operator*(const Rotation4& a, const Rotation4& b) noexcept {
    return {mul(a.left, b.left), mul(a.right, b.right)};
  }
  static Rotation4 identity() noexcept { return {}; }
  static Rotation4 left_multiplication(const UnitQuaternion& q) noexcept { return {q, {}}; }
  static Rotation4 right_multiplication(const UnitQuaternion& q) noexcept {
    return {{}, clifford::inverse(q)};
  }
  static Rotation4 conjugation(const UnitQuaternion& q) noexcept { return {q, q}; }
};

/// The great 3-sphere {(x, p x q^-1) : x in S^3}, the graph of an orientation-preserving
/// isometry between the factors. (p, q) and (-p, -q) describe the same sphere; the stored
/// pair is sign-canonicalized.
class GreatThreeSphere {
 public:
  GreatThreeSphere(const UnitQuaternion& p, const UnitQuaternion& q) noexcept;

  /// The diagonal {(x, x)}.
  static GreatThreeSphere diagonal() noexcept { return {{}, {}}; }

  const UnitQuaternion& p() const noexcept { return p_; }
  const UnitQuaternion& q() const noexcept { return q_; }

  /// x -> p x q^-1, the isometry whose graph this is.
  UnitQuaternion graph(const UnitQuaternion& x) const noexcept { return mul(mul(p_, x), inverse(q_)); }
  ProductPoint point(const UnitQuaternion& x) const noexcept { return {x, graph(x)}; }

  /// Same sphere: equal up to the simultaneous sign flip, within tol per component.
  bool same_as(const GreatThreeSphere& other, double tol = 1e-12) const noexcept;

 private:
  UnitQuaternion p_;
  UnitQuaternion q_;
};

/// d(second, p first q^-1).
double membership_residual(const GreatThreeSphere& sphere, const ProductPoint& point) noexcept;

bool fiber_contains(const GreatThreeSphere& sphere, const ProductPoint& point,
                    double tol = kMembershipTolerance) noexcept;

/// Product-metric distance from a point to a great 3-sphere, in closed form:
/// the infimum over the sphere is attained at the midpoint and equals
/// (1/sqrt 2) d(a, p^-1 b q).
double point_to_sphere_distance(const ProductPoint& point, const GreatThreeSphere& sphere) noexcept;

/// |d(p1,p2) - d(q1,q2)|, minimized over the sign representative of the second sphere.
double petro_discrepancy(const GreatThreeSphere& a, const GreatThreeSphere& b) noexcept;

/// Two graph spheres are disjoint precisely when d(p1,p2) != d(q1,q2).
bool petro_disjoint(const GreatThreeSphere& a, const GreatThreeSphere& b,
                    double tol = kPetroTolerance) noexcept;

/// Oracle for petro_disjoint: minimum over a quasi-uniform lattice of grid_size points x
/// of the distance from (x, p1 x q1^-1) to b, refined by local descent from the best
/// lattice points. Throws PreconditionError for grid_size < 1000.
double brute_force_min_distance(const GreatThreeSphere& a, const GreatThreeSphere& b,
                                std::size_t grid_size);

struct DistanceProfile {
  double mean = 0.0;
  double variance = 0.0;
  double min = 0.0;
  double max = 0.0;
  std::size_t samples = 0;

  double spread() const noexcept { return max - min; }
};

/// Statistics of x -> d((x, p1 x q1^-1), b) over n_samples seeded uniform x.
DistanceProfile pointwise_distance_profile(const GreatThreeSphere& a, const GreatThreeSphere& b,
                                           std::size_t n_samples, std::uint64_t seed);

/// Parallel fibers: the pointwise distance is constant to within tol over the samples.
/// Throws IntersectingSpheresError when the spheres meet.
bool fibers_parallel(const GreatThreeSphere& a, const GreatThreeSphere& b, std::size_t n_samples,
                     std::uint64_t seed = 0, double tol = 1e-9);

/// An element of SO(4) x SO(4) acting on S^3 x S^3 factorwise.
class PairIsometry {
 public:
  PairIsometry() noexcept = default;
  PairIsometry(const Rotation4& first, const Rotation4& second) noexcept
      : first_(first), second_(second) {}

  static PairIsometry identity() noexcept { return {}; }

  const Rotation4& first_factor() const noexcept { return first_; }
  const Rotation4& second_factor() const noexcept { return second_; }

  ProductPoint apply(const ProductPoint& point) const noexcept {
    return {first_.apply(point.first), second_.apply(point.second)};
  }
  /// Image of a graph sphere: {(a x b^-1, c p x q^-1 d^-1)} = graph of (c p a^-1, d q b^-1).
  GreatThreeSphere apply(const GreatThreeSphere& sphere) const noexcept;

  PairIsometry inverse() const noexcept { return {first_.inverse(), second_.inverse()}; }

  /// (a * b)(x) = a(b(x)).
  friend PairIsometry operator*(const PairIsometry& a, const PairIsometry& b) noexcept {
    return {a.first_ * b.first_, a.second_ * b.second_};
  }

 private:
  Rotation4 first_;
  Rotation4 second_;
};

/// Max over n seeded sample pairs of |d(I(a), I(b)) - d(a, b)| in the product metric.
double isometry_defect(const PairIsometry& isometry, std::size_t n_samples, std::uint64_t seed);

/// Max over n seeded sample points of the product distance between the images under f and g.
double isometry_difference(const PairIsometry& f, const PairIsometry& g, std::size_t n_samples,
                           std::uint64_t seed);

}  // namespace clifford
