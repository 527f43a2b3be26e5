#include <algorithm>
#include <numbers>

#include "clifford/errors.hpp"
#include "clifford/manifold_search.hpp"
#include "clifford/sampling.hpp"
#include "test_support.hpp"

namespace clifford {
namespace {

TEST(SampleUniform, DeterministicForSeed) {
  const auto a = sample_uniform(42, 500);
  const auto b = sample_uniform(42, 500);
  ASSERT_EQ(a.size(), 500u);
  EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
  const auto c = sample_uniform(43, 500);
  EXPECT_FALSE(std::equal(a.begin(), a.end(), c.begin()));
}

TEST(SampleUniform, UnitNormAndCentered) {
  const auto points = sample_uniform(7, 100000);
  const auto axis = test::quat(1, -2, 0.5, 3);
  double sum = 0.0;
  for (const auto& p : points) {
    EXPECT_NEAR(p.dot(p), 1.0, 1e-12);
    sum += p.dot(axis);
  }
  EXPECT_NEAR(sum / points.size(), 0.0, 0.01);
}

TEST(SampleUniform, SecondMomentIsQuarter) {
  // E[x_k^2] = 1/4 on S^3 by symmetry.
  const auto points = sample_uniform(9, 100000);
  for (int k = 0; k < 4; ++k) {
    double m = 0.0;
    for (const auto& p : points) m += p.components()[k] * p.components()[k];
    EXPECT_NEAR(m / points.size(), 0.25, 0.01);
  }
}

TEST(SampleUniform, RejectsEmpty) { EXPECT_THROW(sample_uniform(1, 0), PreconditionError); }

TEST(SphereSampler, PointAtDistance) {
  SphereSampler s(11);
  for (int n = 0; n < 200; ++n) {
    const auto from = s.uniform_point();
    const double d = s.uniform_real(0.0, std::numbers::pi);
    EXPECT_NEAR(geodesic_distance(from, s.point_at_distance(from, d)), d, 1e-12);
  }
}

double covering_radius(const std::vector<UnitQuaternion>& points, std::uint64_t seed) {
  SphereSampler s(seed);
  double covering = 0.0;
  for (int k = 0; k < 400; ++k) {
    const auto probe = s.uniform_point();
    double nearest = 4.0;
    for (const auto& p : points) nearest = std::min(nearest, geodesic_distance(p, probe));
    covering = std::max(covering, nearest);
  }
  return covering;
}

TEST(FibonacciLattice, CoversTheSphere) {
  constexpr std::size_t n = 4000;
  const auto lattice = fibonacci_lattice(n);
  ASSERT_EQ(lattice.size(), n);
  for (const auto& p : lattice) EXPECT_NEAR(p.dot(p), 1.0, 1e-12);
  // Quasi-uniform: the largest gap is a small multiple of the cell size.
  EXPECT_LT(covering_radius(lattice, 12), 1.5 * lattice_spacing(n));
}

double min_separation(const std::vector<UnitQuaternion>& points) {
  double sep = 4.0;
  for (std::size_t a = 0; a < points.size(); ++a) {
    for (std::size_t b = a + 1; b < points.size(); ++b) sep = std::min(sep, geodesic_distance(points[a], points[b]));
  }
  return sep;
}

TEST(FibonacciLattice, NoClusters) {
  constexpr std::size_t n = 2000;
  const double sep = min_separation(fibonacci_lattice(n));
  EXPECT_GT(sep, 0.4 * lattice_spacing(n));
  EXPECT_GT(sep, 5.0 * min_separation(sample_uniform(13, n)));
}

TEST(FibonacciLattice, BalancedHemispheres) {
  const auto lattice = fibonacci_lattice(10000);
  for (const auto& axis : {test::quat(1, 0, 0, 0), test::quat(0, 1, 1, 0), test::quat(1, 1, 1, 1)}) {
    const auto upper = std::count_if(lattice.begin(), lattice.end(), [&](const UnitQuaternion& p) { return p.dot(axis) > 0; });
    EXPECT_NEAR(static_cast<double>(upper) / lattice.size(), 0.5, 0.01);
  }
}

TEST(LatticeSpacing, CubeRootOfCellVolume) {
  EXPECT_NEAR(lattice_spacing(1000), std::cbrt(2 * std::numbers::pi * std::numbers::pi / 1000), 1e-15);
}

TEST(RefineExtremum, ConvergesToKnownMinimum) {
  const auto target = test::quat(0.3, -0.2, 0.9, 0.1);
  const SphereObjective f = [&](const UnitQuaternion& x) { return geodesic_distance(x, target); };
  SphereSampler s(13);
  const auto start = s.point_at_distance(target, 0.2);
  const auto r = refine_extremum(f, start, Sense::minimize, {200, 0.05});
  EXPECT_LT(r.value, 1e-6);
  EXPECT_LE(r.value, f(start));
}

TEST(RefineExtremum, NeverWorsens) {
  const auto a = test::quat(1, 2, 3, 4);
  const SphereObjective f = [&](const UnitQuaternion& x) { return x.dot(a) + 0.3 * x.w() * x.y(); };
  SphereSampler s(14);
  for (int n = 0; n < 50; ++n) {
    const auto start = s.uniform_point();
    EXPECT_GE(refine_extremum(f, start, Sense::maximize).value, f(start));
    EXPECT_LE(refine_extremum(f, start, Sense::minimize).value, f(start));
  }
}

TEST(ExtremizeOnSphere, LinearFunctionalHasAntipodalExtremes) {
  const auto a = test::quat(0.5, 0.5, -0.5, 0.5);
  const auto ex = extremize_on_sphere([&](const UnitQuaternion& x) { return x.dot(a); }, 2000);
  EXPECT_NEAR(ex.max_value, 1.0, 1e-8);
  EXPECT_NEAR(ex.min_value, -1.0, 1e-8);
  ASSERT_FALSE(ex.argmax.empty());
  ASSERT_FALSE(ex.argmin.empty());
  for (const auto& p : ex.argmax) EXPECT_LT(geodesic_distance(p, a), 2 * ex.spacing);
  for (const auto& p : ex.argmin) EXPECT_LT(geodesic_distance(p, -a), 2 * ex.spacing);
  EXPECT_FALSE(ex.degenerate);
}

TEST(ExtremizeOnSphere, ConstantIsDegenerate) {
  const auto ex = extremize_on_sphere([](const UnitQuaternion&) { return 0.25; }, 500);
  EXPECT_TRUE(ex.degenerate);
  EXPECT_DOUBLE_EQ(ex.min_value, 0.25);
}

}  // namespace
}  // namespace clifford
