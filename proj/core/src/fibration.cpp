#include "clifford/fibration.hpp"

#include <array>
#include <cmath>
#include <sstream>
#include <utility>

#include "clifford/errors.hpp"
#include "clifford/sampling.hpp"

namespace clifford {
namespace {

double norm3(const Vec3& v) noexcept { return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]); }

/// Solves J x = b by Gaussian elimination with partial pivoting.
std::optional<Vec3> solve3(std::array<Vec3, 3> j, Vec3 b) {
  for (std::size_t col = 0; col < 3; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < 3; ++row) {
      if (std::abs(j[row][col]) > std::abs(j[pivot][col])) pivot = row;
    }
    if (std::abs(j[pivot][col]) < 1e-14) return std::nullopt;
    std::swap(j[col], j[pivot]);
    std::swap(b[col], b[pivot]);
    for (std::size_t row = col + 1; row < 3; ++row) {
      const double factor = j[row][col] / j[col][col];
      for (std::size_t c = col; c < 3; ++c) j[row][c] -= factor * j[col][c];
      b[row] -= factor * b[col];
    }
  }
  Vec3 x{};
  for (std::size_t r = 3; r-- > 0;) {
    double acc = b[r];
    for (std::size_t c = r + 1; c < 3; ++c) acc -= j[r][c] * x[c];
    x[r] = acc / j[r][r];
  }
  return x;
}

}  // namespace

Fibration::Fibration(std::shared_ptr<const SphereMap> map) : map_(std::move(map)) {
  if (!map_) throw PreconditionError("Fibration: null map");
  validate_distance_decreasing(*map_, kValidationPairs);
}

Fibration Fibration::hopf() { return Fibration(std::make_shared<ConstantMap>()); }

Fibration Fibration::twisted(double alpha) {
  return Fibration(std::make_shared<HopfTwistMap>(alpha));
}

FiberSolution solve_fiber_through_point(const Fibration& fibration, const ProductPoint& point,
                                        const SolveOptions& options) {
  const SphereMap& f = fibration.map();
  const UnitQuaternion x_inv = inverse(point.first);
  const auto step_map = [&](const UnitQuaternion& p) { return mul(mul(point.second, f(p)), x_inv); };
  const auto body_residual = [&](const UnitQuaternion& p) { return log_body(p, step_map(p)); };

  FiberSolution sol;
  UnitQuaternion p = mul(point.second, x_inv);
  while (sol.iterations < options.max_iterations) {
    const UnitQuaternion next = step_map(p);
    const double step = geodesic_distance(p, next);
    p = next;
    ++sol.iterations;
    if (step < options.step_tolerance) break;

    if (options.newton_interval > 0 && sol.iterations % options.newton_interval == 0) {
      const Vec3 r = body_residual(p);
      constexpr double h = 1e-7;
      std::array<Vec3, 3> jac{};
      for (std::size_t c = 0; c < 3; ++c) {
        Vec3 e{0.0, 0.0, 0.0};
        e[c] = h;
        const Vec3 plus = body_residual(exp_body(p, e));
        e[c] = -h;
        const Vec3 minus = body_residual(exp_body(p, e));
        for (std::size_t row = 0; row < 3; ++row) jac[row][c] = (plus[row] - minus[row]) / (2 * h);
      }
      const auto delta = solve3(jac, {-r[0], -r[1], -r[2]});
      if (!delta) continue;
      const UnitQuaternion candidate = exp_body(p, *delta);
      const double candidate_residual = norm3(body_residual(candidate));
      if (candidate_residual < 0.5 * norm3(r)) {
        p = candidate;
        ++sol.newton_steps;
        if (candidate_residual < options.step_tolerance) break;
      }
    }
  }

  sol.index = p;
  sol.residual = membership_residual(fibration.fiber(p), point);
  if (!(sol.residual <= options.residual_tolerance)) {
    std::ostringstream os;
    os << "solve_fiber_through_point: no convergence after " << sol.iterations
       << " iterations, residual " << sol.residual;
    throw ConvergenceError(os.str(), sol.residual, sol.iterations);
  }
  return sol;
}

PairIsometry homogeneity_action(const UnitQuaternion& q) noexcept {
  return {Rotation4{{}, q}, Rotation4::conjugation(q)};
}

PairIsometry hopf_homogeneity_action(const UnitQuaternion& q) noexcept {
  return {Rotation4::identity(), Rotation4::left_multiplication(q)};
}

double verify_fiberwise_homogeneity(const Fibration& fibration, const UnitQuaternion& q,
                                    const UnitQuaternion& p, std::size_t n_samples,
                                    std::uint64_t seed, const std::optional<PairIsometry>& action) {
  const PairIsometry g = action.value_or(homogeneity_action(q));
  const GreatThreeSphere source = fibration.fiber(p);
  const GreatThreeSphere target = fibration.fiber(mul(q, p));
  SphereSampler sampler(seed);
  double worst = 0.0;
  for (std::size_t n = 0; n < n_samples; ++n) {
    const ProductPoint image = g.apply(source.point(sampler.uniform_point()));
    worst = std::max(worst, point_to_sphere_distance(image, target));
  }
  return worst;
}

PairIsometry mix_match_isometry(const Rotation4& t1, const Rotation4& t2) noexcept {
  return {Rotation4{t1.right, t2.right}, Rotation4{t1.left, t2.left}};
}

double intertwining_defect(const SphereMap& f, const Rotation4& t1, const Rotation4& t2,
                           std::size_t n_samples, std::uint64_t seed) {
  SphereSampler sampler(seed);
  double worst = 0.0;
  for (std::size_t n = 0; n < n_samples; ++n) {
    const UnitQuaternion u = sampler.uniform_point();
    worst = std::max(worst, geodesic_distance(f(t1.apply(u)), t2.apply(f(u))));
  }
  return worst;
}

}  // namespace clifford
