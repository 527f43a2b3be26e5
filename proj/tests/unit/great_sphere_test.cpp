#include <numbers>

#include "clifford/errors.hpp"
#include "clifford/great_sphere.hpp"
#include "clifford/manifold_search.hpp"
#include "clifford/sampling.hpp"
#include "test_support.hpp"

namespace clifford {
namespace {

using test::near;
constexpr double kPi = std::numbers::pi;
const UnitQuaternion one = UnitQuaternion::identity();
const UnitQuaternion qi = UnitQuaternion::unit_i();
const UnitQuaternion qj = UnitQuaternion::unit_j();

TEST(GreatThreeSphere, StoredCanonically) {
  const GreatThreeSphere s(-one, -qi);
  EXPECT_EQ(s.p(), one);
  EXPECT_EQ(s.q(), qi);
  EXPECT_TRUE(s.same_as(GreatThreeSphere(one, qi)));
  EXPECT_FALSE(s.same_as(GreatThreeSphere(one, -qi)));
}

TEST(GreatThreeSphere, PointsAreMembers) {
  SphereSampler s(1);
  for (int n = 0; n < 200; ++n) {
    const GreatThreeSphere sphere(s.uniform_point(), s.uniform_point());
    EXPECT_TRUE(fiber_contains(sphere, sphere.point(s.uniform_point())));
  }
}

TEST(FiberContains, Examples) {
  SphereSampler s(2);
  const auto z = s.uniform_point();
  EXPECT_TRUE(fiber_contains(GreatThreeSphere::diagonal(), {z, z}));
  const double a = kPi / 6;
  const GreatThreeSphere sigma1(one, exp_axis(ImaginaryUnit::i(), a));
  EXPECT_TRUE(fiber_contains(sigma1, {one, exp_axis(ImaginaryUnit::i(), -a)}));
  EXPECT_FALSE(fiber_contains(GreatThreeSphere::diagonal(), {one, qi}));
}

TEST(PetroDisjoint, Examples) {
  const auto diag = GreatThreeSphere::diagonal();
  EXPECT_TRUE(petro_disjoint(diag, GreatThreeSphere(qi, one)));
  EXPECT_NEAR(petro_discrepancy(diag, GreatThreeSphere(qi, one)), kPi / 2, 1e-15);
  EXPECT_FALSE(petro_disjoint(diag, GreatThreeSphere(qi, qj)));
}

TEST(PetroDisjoint, IndependentOfRepresentatives) {
  SphereSampler s(3);
  for (int n = 0; n < 500; ++n) {
    const auto p1 = s.uniform_point(), q1 = s.uniform_point(), p2 = s.uniform_point(), q2 = s.uniform_point();
    const double d = std::abs(geodesic_distance(p1, p2) - geodesic_distance(q1, q2));
    const double flipped = std::abs(geodesic_distance(p1, -p2) - geodesic_distance(q1, -q2));
    // d(p, -x) = pi - d(p, x), so both choices give the same discrepancy.
    EXPECT_NEAR(d, flipped, 1e-12);
    EXPECT_NEAR(petro_discrepancy(GreatThreeSphere(p1, q1), GreatThreeSphere(p2, q2)), d, 1e-12);
  }
}

TEST(PointToSphereDistance, MatchesMinimizationOverTheSphere) {
  SphereSampler s(4);
  for (int n = 0; n < 10; ++n) {
    const GreatThreeSphere sphere(s.uniform_point(), s.uniform_point());
    const ProductPoint point{s.uniform_point(), s.uniform_point()};
    const auto ex = extremize_on_sphere(
        [&](const UnitQuaternion& y) { return product_distance(point, sphere.point(y)); }, 5000);
    EXPECT_NEAR(point_to_sphere_distance(point, sphere), ex.min_value, 1e-6);
  }
}

TEST(BruteForceMinDistance, Examples) {
  const auto diag = GreatThreeSphere::diagonal();
  SphereSampler s(5);
  const GreatThreeSphere any(s.uniform_point(), s.uniform_point());
  EXPECT_LT(brute_force_min_distance(any, any, 1000), 1e-12);
  EXPECT_NEAR(brute_force_min_distance(diag, GreatThreeSphere(qi, one), 2000), (kPi / 2) / std::numbers::sqrt2, 1e-3);
  EXPECT_LT(brute_force_min_distance(diag, GreatThreeSphere(qi, qj), 2000), 1e-3);
  EXPECT_THROW(brute_force_min_distance(diag, diag, 999), PreconditionError);
}

TEST(BruteForceMinDistance, EqualsDiscrepancyOverRootTwo) {
  SphereSampler s(6);
  for (int n = 0; n < 20; ++n) {
    const GreatThreeSphere a(s.uniform_point(), s.uniform_point());
    const GreatThreeSphere b(s.uniform_point(), s.uniform_point());
    EXPECT_NEAR(brute_force_min_distance(a, b, 2000), petro_discrepancy(a, b) / std::numbers::sqrt2, 1e-3);
  }
}

TEST(BruteForceMinDistance, ZeroForConstructedIntersections) {
  SphereSampler s(7);
  for (int n = 0; n < 20; ++n) {
    const auto p1 = s.uniform_point(), q1 = s.uniform_point(), p2 = s.uniform_point();
    const auto q2 = s.point_at_distance(q1, geodesic_distance(p1, p2));
    const GreatThreeSphere a(p1, q1), b(p2, q2);
    EXPECT_FALSE(petro_disjoint(a, b));
    EXPECT_LT(brute_force_min_distance(a, b, 2000), 1e-3);
  }
}

TEST(DistanceProfile, ConstantForParallelSpheres) {
  // (1, 1) and (i, 1): the left translate by i moves every point pi/(2 sqrt 2) away.
  const auto prof = pointwise_distance_profile(GreatThreeSphere::diagonal(), GreatThreeSphere(qi, one), 500, 1);
  EXPECT_NEAR(prof.min, (kPi / 2) / std::numbers::sqrt2, 1e-12);
  EXPECT_LT(prof.spread(), 1e-12);
  EXPECT_TRUE(fibers_parallel(GreatThreeSphere::diagonal(), GreatThreeSphere(qi, one), 500));
  EXPECT_THROW(fibers_parallel(GreatThreeSphere::diagonal(), GreatThreeSphere(qi, qj), 100),
               IntersectingSpheresError);
}

TEST(Rotation4, ComposesAndInverts) {
  SphereSampler s(8);
  const Rotation4 a{s.uniform_point(), s.uniform_point()}, b{s.uniform_point(), s.uniform_point()};
  const auto x = s.uniform_point();
  EXPECT_TRUE(near((a * b).apply(x), a.apply(b.apply(x)), 1e-14));
  EXPECT_TRUE(near(a.inverse().apply(a.apply(x)), x, 1e-14));
  const auto q = s.uniform_point();
  EXPECT_TRUE(near(Rotation4::right_multiplication(q).apply(x), x * q, 1e-15));
  EXPECT_TRUE(near(Rotation4::left_multiplication(q).apply(x), q * x, 1e-15));
  EXPECT_TRUE(near(Rotation4::conjugation(q).apply(x), q * x * inverse(q), 1e-15));
}

TEST(PairIsometry, PreservesProductMetric) {
  SphereSampler s(9);
  for (int n = 0; n < 20; ++n) {
    const PairIsometry iso({s.uniform_point(), s.uniform_point()}, {s.uniform_point(), s.uniform_point()});
    EXPECT_LT(isometry_defect(iso, 200, n), 1e-10);
  }
}

TEST(PairIsometry, SphereImageMatchesPointImages) {
  SphereSampler s(10);
  for (int n = 0; n < 50; ++n) {
    const PairIsometry iso({s.uniform_point(), s.uniform_point()}, {s.uniform_point(), s.uniform_point()});
    const GreatThreeSphere sphere(s.uniform_point(), s.uniform_point());
    const auto image = iso.apply(sphere);
    for (int k = 0; k < 10; ++k) {
      EXPECT_LT(membership_residual(image, iso.apply(sphere.point(s.uniform_point()))), 1e-12);
    }
    EXPECT_LT(isometry_difference(iso * iso.inverse(), PairIsometry::identity(), 50, n), 1e-12);
  }
}

}  // namespace
}  // namespace clifford
