#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>

#include "clifford/great_sphere.hpp"
#include "clifford/sphere_map.hpp"

namespace clifford {

/// The fibration of S^3 x S^3 by the great 3-spheres
///   Sigma_p = {(x, p x f(p)^-1) : x in S^3},  p in S^3,
/// determined by a distance-decreasing map f.
class Fibration {
 public:
  /// Number of sample pairs spent checking that f is distance-decreasing.
  static constexpr std::size_t kValidationPairs = 10000;

  /// Validates f with kValidationPairs seeded pairs; throws PreconditionError on failure.
  explicit Fibration(std::shared_ptr<const SphereMap> map);

  /// f = 1, the restriction of the Hopf fibration: Sigma_v = H_v = {(x, v x)}.
  static Fibration hopf();
  /// f = f_alpha.
  static Fibration twisted(double alpha);

  const SphereMap& map() const noexcept { return *map_; }
  std::shared_ptr<const SphereMap> shared_map() const noexcept { return map_; }

  /// Sigma_p, sign-canonicalized.
  GreatThreeSphere fiber(const UnitQuaternion& p) const { return {p, (*map_)(p)}; }

 private:
  std::shared_ptr<const SphereMap> map_;
};

inline GreatThreeSphere fiber(const Fibration& fibration, const UnitQuaternion& p) {
  return fibration.fiber(p);
}

struct SolveOptions {
  long max_iterations = 100000;
  double step_tolerance = 1e-12;
  double residual_tolerance = kMembershipTolerance;
  /// Plain iterations between safeguarded Newton corrections; 0 disables them.
  int newton_interval = 32;
};

struct FiberSolution {
  UnitQuaternion index;
  /// Membership residual d(y, p x f(p)^-1) at the returned index.
  double residual = 0.0;
  long iterations = 0;
  long newton_steps = 0;
};

/// Finds the fiber through (x, y): the fixed point of p -> y f(p) x^-1 starting at
/// p = y x^-1. The iteration is non-expanding because f is distance-decreasing; a
/// Newton correction on log(p^-1 G(p)) is tried every newton_interval steps and kept
/// only when it halves the residual. Throws ConvergenceError when the residual is
/// still above residual_tolerance after max_iterations.
FiberSolution solve_fiber_through_point(const Fibration& fibration, const ProductPoint& point,
                                        const SolveOptions& options = {});

/// q . (x, y) = (x q^-1, q y q^-1); maps Sigma_p to Sigma_{qp} when f(qp) = q f(p) q^-1.
PairIsometry homogeneity_action(const UnitQuaternion& q) noexcept;

/// q . (x, y) = (x, q y); maps the Hopf fiber H_v to H_{qv}.
PairIsometry hopf_homogeneity_action(const UnitQuaternion& q) noexcept;

/// Max over n seeded x of the distance from action . (x, p x f(p)^-1) to Sigma_{qp}.
/// The action defaults to homogeneity_action(q).
double verify_fiberwise_homogeneity(const Fibration& fibration, const UnitQuaternion& q,
                                    const UnitQuaternion& p, std::size_t n_samples,
                                    std::uint64_t seed = 0,
                                    const std::optional<PairIsometry>& action = std::nullopt);

/// Given T1(x) = p1 x q1^-1 and T2(x) = p2 x q2^-1 with f o T1 = T2 o f, the isometry
/// (x, y) -> (q1 x q2^-1, p1 y p2^-1), which carries Sigma_u to Sigma_{T1(u)}.
PairIsometry mix_match_isometry(const Rotation4& t1, const Rotation4& t2) noexcept;

/// Max over n seeded u of d(f(T1 u), T2 f(u)); zero when T1, T2 intertwine f.
double intertwining_defect(const SphereMap& f, const Rotation4& t1, const Rotation4& t2,
                           std::size_t n_samples, std::uint64_t seed = 0);

}  // namespace clifford
