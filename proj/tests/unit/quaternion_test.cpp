#include <numbers>

#include "clifford/errors.hpp"
#include "clifford/quaternion.hpp"
#include "clifford/sampling.hpp"
#include "test_support.hpp"

namespace clifford {
namespace {

using test::near;
using test::quat;
constexpr double kPi = std::numbers::pi;

const UnitQuaternion one = UnitQuaternion::identity();
const UnitQuaternion qi = UnitQuaternion::unit_i();
const UnitQuaternion qj = UnitQuaternion::unit_j();
const UnitQuaternion qk = UnitQuaternion::unit_k();

TEST(Mul, HamiltonTable) {
  EXPECT_TRUE(near(qi * qj, qk, 0));
  EXPECT_TRUE(near(qj * qi, -qk, 0));
  EXPECT_TRUE(near(qj * qk, qi, 0));
  EXPECT_TRUE(near(qk * qi, qj, 0));
  EXPECT_TRUE(near(qi * qi, -one, 0));
}

TEST(Mul, AnglesAddOnTheICircle) {
  const auto i = ImaginaryUnit::i();
  EXPECT_TRUE(near(exp_axis(i, kPi / 6) * exp_axis(i, kPi / 3), qi, 1e-15));
}

TEST(Mul, AssociativeNotCommutative) {
  SphereSampler s(1);
  for (int n = 0; n < 200; ++n) {
    const auto a = s.uniform_point(), b = s.uniform_point(), c = s.uniform_point();
    EXPECT_TRUE(near((a * b) * c, a * (b * c), 1e-14));
  }
  EXPECT_GT(test::max_gap(qi * qj, qj * qi), 1.0);
}

TEST(Inverse, Basics) {
  EXPECT_TRUE(near(inverse(one), one, 0));
  EXPECT_TRUE(near(inverse(qi), -qi, 0));
  const auto q = exp_axis(ImaginaryUnit::j(), 0.7);
  EXPECT_TRUE(near(inverse(q), exp_axis(ImaginaryUnit::j(), -0.7), 1e-16));
  EXPECT_TRUE(near(q * inverse(q), one, 1e-15));
}

TEST(Inverse, OfProductReversesOrder) {
  SphereSampler s(2);
  for (int n = 0; n < 500; ++n) {
    const auto a = s.uniform_point(), b = s.uniform_point();
    EXPECT_TRUE(near(inverse(a * b), inverse(b) * inverse(a), 1e-12));
  }
}

TEST(ExpAxis, Examples) {
  const auto i = ImaginaryUnit::i();
  EXPECT_TRUE(near(exp_axis(i, 0), one, 0));
  EXPECT_TRUE(near(exp_axis(i, kPi / 2), qi, 1e-16));
  EXPECT_TRUE(near(exp_axis(ImaginaryUnit::j_theta(kPi / 2), 0.3), quat(std::cos(0.3), 0, 0, std::sin(0.3)), 1e-16));
}

TEST(ExpAxis, OneParameterSubgroup) {
  SphereSampler s(3);
  for (int n = 0; n < 500; ++n) {
    const auto u = s.uniform_axis();
    const double a = s.uniform_real(-4, 4), b = s.uniform_real(-4, 4);
    EXPECT_TRUE(near(exp_axis(u, a + b), exp_axis(u, a) * exp_axis(u, b), 1e-12));
  }
}

TEST(GeodesicDistance, Examples) {
  EXPECT_DOUBLE_EQ(geodesic_distance(one, one), 0.0);
  EXPECT_NEAR(geodesic_distance(one, qi), kPi / 2, 1e-15);
  const auto i = ImaginaryUnit::i();
  EXPECT_NEAR(geodesic_distance(exp_axis(i, 0.9), exp_axis(i, 0.2)), 0.7, 1e-15);
  EXPECT_NEAR(geodesic_distance(one, -one), kPi, 1e-15);
}

TEST(GeodesicDistance, AccurateForNearbyPoints) {
  // arccos of the inner product would lose half the digits here.
  const auto u = ImaginaryUnit::from_vector(1, 2, 3);
  EXPECT_NEAR(geodesic_distance(one, exp_axis(u, 1e-10)), 1e-10, 1e-24);
}

TEST(GeodesicDistance, BiInvariantAndTriangle) {
  SphereSampler s(4);
  for (int n = 0; n < 1000; ++n) {
    const auto a = s.uniform_point(), b = s.uniform_point(), p = s.uniform_point(), q = s.uniform_point();
    EXPECT_NEAR(geodesic_distance(a * p * b, a * q * b), geodesic_distance(p, q), 1e-10);
    EXPECT_LE(geodesic_distance(a, p), geodesic_distance(a, b) + geodesic_distance(b, p) + 1e-10);
  }
}

TEST(Midpoint, Examples) {
  EXPECT_TRUE(near(geodesic_midpoint(one, qi), exp_axis(ImaginaryUnit::i(), kPi / 4), 1e-15));
  const auto a = quat(0.1, 0.2, -0.3, 0.9);
  EXPECT_TRUE(near(geodesic_midpoint(a, a), a, 1e-15));
  // j e^{i pi/2} j^-1 = -i.
  const auto b = qj * exp_axis(ImaginaryUnit::i(), kPi / 2) * inverse(qj);
  const auto m = geodesic_midpoint(one, b);
  EXPECT_NEAR(geodesic_distance(one, m), geodesic_distance(m, b), 1e-15);
  EXPECT_NEAR(geodesic_distance(one, m), kPi / 4, 1e-15);
}

TEST(Midpoint, AntipodalThrows) {
  EXPECT_THROW(geodesic_midpoint(one, -one), AntipodalError);
  EXPECT_THROW(geodesic_midpoint(qj, -qj), AntipodalError);
}

TEST(Midpoint, SymmetricAndOnTheGeodesic) {
  SphereSampler s(5);
  for (int n = 0; n < 500; ++n) {
    const auto a = s.uniform_point(), b = s.uniform_point();
    const auto m = geodesic_midpoint(a, b);
    EXPECT_TRUE(near(m, geodesic_midpoint(b, a), 1e-12));
    const double d = geodesic_distance(a, b);
    EXPECT_NEAR(geodesic_distance(a, m) + geodesic_distance(m, b), d, 1e-12);
    EXPECT_NEAR(geodesic_distance(a, m), d / 2, 1e-12);
  }
}

TEST(CanonicalizeSign, Examples) {
  const auto flipped = canonicalize_sign({-one, -qi});
  EXPECT_EQ(flipped.first, one);
  EXPECT_EQ(flipped.second, qi);
  const auto kept = canonicalize_sign({one, qi});
  EXPECT_EQ(kept.first, one);
  EXPECT_EQ(kept.second, qi);
  const auto p = exp_axis(ImaginaryUnit::j(), 0.4), q = exp_axis(ImaginaryUnit::k(), 1.1);
  const auto once = canonicalize_sign({-p, -q});
  EXPECT_EQ(once.first, p);
  EXPECT_EQ(once.second, q);
  const auto twice = canonicalize_sign(once);
  EXPECT_EQ(twice.first, once.first);
  EXPECT_EQ(twice.second, once.second);
}

TEST(CanonicalizeSign, SkipsTinyLeadingComponents) {
  // First component below the threshold: the sign is decided by the second.
  const auto p = quat(1e-12, -1, 0, 0);
  const auto c = canonicalize_sign({p, one});
  EXPECT_GT(c.first.x(), 0.0);
  EXPECT_EQ(c.second, -one);
}

TEST(CanonicalizeSign, InvariantUnderFlip) {
  SphereSampler s(6);
  for (int n = 0; n < 200; ++n) {
    const auto p = s.uniform_point(), q = s.uniform_point();
    const auto a = canonicalize_sign({p, q}), b = canonicalize_sign({-p, -q});
    EXPECT_EQ(a.first, b.first);
    EXPECT_EQ(a.second, b.second);
  }
}

TEST(UnitQuaternion, NormalizesAndRejectsZero) {
  const auto q = quat(3, 4, 0, 0);
  EXPECT_DOUBLE_EQ(q.w(), 0.6);
  EXPECT_DOUBLE_EQ(q.x(), 0.8);
  EXPECT_THROW(quat(0, 0, 0, 0), PreconditionError);
  EXPECT_THROW(quat(NAN, 0, 0, 1), PreconditionError);
}

TEST(UnitQuaternion, StaysUnitAfterLongProducts) {
  SphereSampler s(7);
  UnitQuaternion q;
  for (int n = 0; n < 100000; ++n) q = q * s.uniform_point();
  EXPECT_NEAR(q.dot(q), 1.0, 1e-12);
}

TEST(ImaginaryUnit, RejectsRealPart) {
  EXPECT_THROW(ImaginaryUnit::from_quaternion(quat(0.5, 0.5, 0.5, 0.5)), PreconditionError);
  EXPECT_THROW(ImaginaryUnit::from_vector(0, 0, 0), PreconditionError);
  EXPECT_EQ(ImaginaryUnit::from_quaternion(qk).quaternion(), qk);
}

TEST(ImaginaryUnit, CompletionIsPositiveOrthonormal) {
  const auto [v, w] = ImaginaryUnit::i().orthonormal_completion();
  EXPECT_TRUE(near(v, qj, 0));
  EXPECT_TRUE(near(w, qk, 0));
  const auto [v2, w2] = ImaginaryUnit::k().orthonormal_completion();
  EXPECT_TRUE(near(v2, qi, 0));
  EXPECT_TRUE(near(w2, qj, 0));
  SphereSampler s(8);
  for (int n = 0; n < 200; ++n) {
    const auto u = s.uniform_axis();
    const auto [a, b] = u.orthonormal_completion();
    EXPECT_NEAR(a.quaternion().dot(u), 0, 1e-15);
    EXPECT_NEAR(b.quaternion().dot(u), 0, 1e-15);
    EXPECT_NEAR(a.quaternion().dot(b), 0, 1e-15);
    // u v = w for a positive basis.
    EXPECT_TRUE(near(u.quaternion() * a.quaternion(), b.quaternion(), 1e-14));
  }
}

TEST(GreatCircle, RequiresOrthogonalBasis) {
  EXPECT_THROW(GreatCircle(one, quat(1, 1, 0, 0)), PreconditionError);
  EXPECT_NO_THROW(GreatCircle(one, qi));
}

TEST(GreatCircle, PointsAndDistances) {
  const GreatCircle c(one, qi);
  EXPECT_TRUE(near(c.point_at(kPi / 2), qi, 1e-16));
  EXPECT_NEAR(c.distance_to(qj), kPi / 2, 1e-15);
  EXPECT_NEAR(c.distance_to(exp_axis(ImaginaryUnit::i(), 1.234)), 0, 1e-15);
  // (1 + j)/sqrt2 is pi/4 from 1, the closest circle point.
  EXPECT_NEAR(c.distance_to(quat(1, 0, 1, 0)), kPi / 4, 1e-15);
  EXPECT_TRUE(c.contains(-qi, 1e-12));
}

TEST(GreatCircle, ThroughAndCircleDistance) {
  const auto a = quat(1, 2, 3, 4), b = quat(-1, 0.5, 2, 0);
  const auto c = GreatCircle::through(a, b);
  EXPECT_LT(c.distance_to(a), 1e-15);
  EXPECT_LT(c.distance_to(b), 1e-15);
  const auto same = GreatCircle::through(b, -a);
  EXPECT_LT(c.distance_to_circle(same), 1e-12);
  const GreatCircle jk(qj, qk), one_i(one, qi);
  EXPECT_NEAR(one_i.distance_to_circle(jk), kPi / 2, 1e-15);
  EXPECT_NEAR(one_i.max_cross_inner_product(jk), 0, 0);
  EXPECT_THROW(GreatCircle::through(a, -a), PreconditionError);
}

}  // namespace
}  // namespace clifford
