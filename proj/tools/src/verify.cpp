#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <numbers>

#include <json.hpp>

#include "clifford/errors.hpp"
#include "clifford/extremal.hpp"
#include "clifford/fibration.hpp"
#include "clifford/sampling.hpp"
#include "clifford/sphere_map.hpp"
#include "clifford_cli/commands.hpp"
#include "clifford_cli/output.hpp"

namespace clifford::cli {
namespace {

constexpr double kPi = std::numbers::pi;

/// The reference neighbor offset used by the parallelism checks.
constexpr double kReferenceOffset = 0.3;

/// Each check draws from its own stream so that adding or skipping checks never
/// shifts the samples of the others.
std::uint64_t check_seed(std::uint64_t seed, std::uint64_t index) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
}

double max_component_gap(const UnitQuaternion& a, const UnitQuaternion& b) {
  const auto ca = a.components();
  const auto cb = b.components();
  double gap = 0.0;
  for (std::size_t n = 0; n < 4; ++n) gap = std::max(gap, std::abs(ca[n] - cb[n]));
  return gap;
}

struct Context {
  const RunConfig& config;
  std::uint64_t index = 0;

  std::uint64_t next_seed() { return check_seed(config.seed, index++); }
  std::size_t samples() const { return config.n_samples; }
  std::size_t few(std::size_t cap) const { return std::clamp<std::size_t>(config.n_samples / 10, 1, cap); }
};

CheckResult measured(std::string name, std::string module, double residual, double tolerance,
                     std::size_t samples, Bound bound = Bound::at_most, std::string note = {}) {
  CheckResult r;
  r.name = std::move(name);
  r.module = std::move(module);
  r.residual = residual;
  r.tolerance = tolerance;
  r.bound = bound;
  r.samples = samples;
  r.note = std::move(note);
  const bool ok = bound == Bound::at_most ? residual <= tolerance : residual > tolerance;
  r.status = ok ? CheckStatus::pass : CheckStatus::fail;
  return r;
}

CheckResult skipped(std::string name, std::string module, std::string reason) {
  CheckResult r;
  r.name = std::move(name);
  r.module = std::move(module);
  r.status = CheckStatus::skipped;
  r.note = std::move(reason);
  return r;
}

std::string need_grid(std::size_t required) {
  return "grid below " + std::to_string(required) + " points";
}

// quaternion-core

CheckResult unit_norm(Context& ctx) {
  SphereSampler s(ctx.next_seed());
  double worst = 0.0;
  for (std::size_t n = 0; n < ctx.samples(); ++n) {
    UnitQuaternion q = s.uniform_point();
    for (int k = 0; k < 100; ++k) q = q * s.uniform_point();
    worst = std::max(worst, std::abs(std::sqrt(q.dot(q)) - 1.0));
  }
  return measured("unit_norm_after_products", "quaternion-core", worst, kUnitTolerance, ctx.samples());
}

CheckResult bi_invariance(Context& ctx) {
  SphereSampler s(ctx.next_seed());
  double worst = 0.0;
  for (std::size_t n = 0; n < ctx.samples(); ++n) {
    const auto a = s.uniform_point(), b = s.uniform_point(), p = s.uniform_point(), q = s.uniform_point();
    worst = std::max(worst, std::abs(geodesic_distance(a * p * b, a * q * b) - geodesic_distance(p, q)));
  }
  return measured("bi_invariance", "quaternion-core", worst, 1e-10, ctx.samples());
}

CheckResult triangle_inequality(Context& ctx) {
  SphereSampler s(ctx.next_seed());
  double worst = 0.0;
  for (std::size_t n = 0; n < ctx.samples(); ++n) {
    const auto a = s.uniform_point(), b = s.uniform_point(), c = s.uniform_point();
    const double excess = geodesic_distance(a, c) - geodesic_distance(a, b) - geodesic_distance(b, c);
    worst = std::max(worst, excess);
  }
  return measured("triangle_inequality", "quaternion-core", std::max(worst, 0.0), 1e-10, ctx.samples());
}

CheckResult inverse_of_product(Context& ctx) {
  SphereSampler s(ctx.next_seed());
  double worst = 0.0;
  for (std::size_t n = 0; n < ctx.samples(); ++n) {
    const auto a = s.uniform_point(), b = s.uniform_point();
    worst = std::max(worst, max_component_gap(inverse(a * b), inverse(b) * inverse(a)));
  }
  return measured("inverse_of_product", "quaternion-core", worst, 1e-12, ctx.samples());
}

CheckResult one_parameter_subgroup(Context& ctx) {
  SphereSampler s(ctx.next_seed());
  double worst = 0.0;
  for (std::size_t n = 0; n < ctx.samples(); ++n) {
    const auto u = s.uniform_axis();
    const double a = s.uniform_real(-kPi, kPi), b = s.uniform_real(-kPi, kPi);
    worst = std::max(worst, max_component_gap(exp_axis(u, a + b), exp_axis(u, a) * exp_axis(u, b)));
  }
  return measured("one_parameter_subgroup", "quaternion-core", worst, 1e-12, ctx.samples());
}

CheckResult midpoint(Context& ctx) {
  SphereSampler s(ctx.next_seed());
  double worst = 0.0;
  for (std::size_t n = 0; n < ctx.samples(); ++n) {
    const auto a = s.uniform_point(), b = s.uniform_point();
    const auto m = geodesic_midpoint(a, b);
    const double half = 0.5 * geodesic_distance(a, b);
    worst = std::max({worst, max_component_gap(m, geodesic_midpoint(b, a)),
                      std::abs(geodesic_distance(a, m) - half), std::abs(geodesic_distance(m, b) - half)});
  }
  return measured("midpoint_symmetry", "quaternion-core", worst, 1e-12, ctx.samples());
}

CheckResult sampling_mean(Context& ctx) {
  constexpr std::size_t n = 100000;
  const auto points = sample_uniform(ctx.next_seed(), n);
  const auto axis = UnitQuaternion::from_components(0.5, -0.5, 0.5, 0.5);
  double sum = 0.0;
  for (const auto& p : points) sum += p.dot(axis);
  return measured("uniform_sampling_mean", "quaternion-core", std::abs(sum / n), 1e-2, n);
}

// fibration

CheckResult petro_vs_brute_force(Context& ctx) {
  const std::uint64_t seed = ctx.next_seed();
  if (ctx.config.grid_size < 1000) {
    return skipped("petro_vs_brute_force", "fibration", need_grid(1000));
  }
  SphereSampler s(seed);
  std::size_t mismatches = 0, near_ties = 0;
  for (std::size_t n = 0; n < ctx.samples(); ++n) {
    const GreatThreeSphere a(s.uniform_point(), s.uniform_point());
    const GreatThreeSphere b(s.uniform_point(), s.uniform_point());
    if (petro_discrepancy(a, b) < 1e-2) {
      ++near_ties;
      continue;
    }
    const bool oracle = brute_force_min_distance(a, b, ctx.config.grid_size) > 1e-3;
    if (oracle != petro_disjoint(a, b)) ++mismatches;
  }
  return measured("petro_vs_brute_force", "fibration", static_cast<double>(mismatches), 0.0,
                  ctx.samples(), Bound::at_most,
                  std::to_string(near_ties) + " near-ties excluded");
}

CheckResult fibration_disjointness(Context& ctx, const Fibration& fib) {
  SphereSampler s(ctx.next_seed());
  std::size_t failures = 0;
  double smallest = kPi;
  for (std::size_t n = 0; n < ctx.samples(); ++n) {
    const auto p = s.uniform_point(), p2 = s.uniform_point();
    const auto a = fib.fiber(p), b = fib.fiber(p2);
    smallest = std::min(smallest, petro_discrepancy(a, b));
    if (!petro_disjoint(a, b)) ++failures;
  }
  return measured("fibration_disjointness", "fibration", static_cast<double>(failures), 0.0,
                  ctx.samples(), Bound::at_most,
                  "smallest discrepancy " + format_double(smallest));
}

CheckResult coverage(Context& ctx, const Fibration& fib) {
  SphereSampler s(ctx.next_seed());
  double worst = 0.0;
  for (std::size_t n = 0; n < ctx.samples(); ++n) {
    const ProductPoint point{s.uniform_point(), s.uniform_point()};
    try {
      const auto sol = solve_fiber_through_point(fib, point);
      worst = std::max(worst, membership_residual(fib.fiber(sol.index), point));
    } catch (const ConvergenceError& e) {
      worst = std::max(worst, e.last_residual());
    }
  }
  return measured("fiber_through_every_point", "fibration", worst, kMembershipTolerance, ctx.samples());
}

CheckResult fiberwise_homogeneity(Context& ctx, const Fibration& fib) {
  SphereSampler s(ctx.next_seed());
  const std::size_t pairs = std::min<std::size_t>(ctx.samples(), 100);
  double worst = 0.0;
  for (std::size_t n = 0; n < pairs; ++n) {
    const auto q = s.uniform_point(), p = s.uniform_point();
    worst = std::max(worst, verify_fiberwise_homogeneity(fib, q, p, 16, s.engine()()));
  }
  return measured("fiberwise_homogeneity", "fibration", worst, 1e-10, pairs);
}

CheckResult pointwise_homogeneity(Context& ctx) {
  SphereSampler s(ctx.next_seed());
  double worst = 0.0;
  for (std::size_t n = 0; n < ctx.samples(); ++n) {
    worst = std::max(worst, pointwise_homogeneity_check(ctx.config.alpha, s.uniform_point(), s.uniform_point()));
  }
  return measured("pointwise_homogeneity", "fibration", worst, 1e-12, ctx.samples());
}

CheckResult hopf_circle_invariance(Context& ctx) {
  SphereSampler s(ctx.next_seed());
  double worst = 0.0;
  for (std::size_t n = 0; n < ctx.samples(); ++n) {
    const auto p = s.uniform_point();
    const auto moved = p * exp_axis(ImaginaryUnit::i(), s.uniform_real(-kPi, kPi));
    worst = std::max(worst, geodesic_distance(f_alpha(p, ctx.config.alpha), f_alpha(moved, ctx.config.alpha)));
  }
  return measured("constant_on_hopf_circles", "fibration", worst, 1e-12, ctx.samples());
}

CheckResult distance_decreasing(Context& ctx) {
  const std::size_t pairs = std::max<std::size_t>(ctx.samples(), 10000);
  const auto est = lipschitz_estimate(HopfTwistMap(ctx.config.alpha), pairs, ctx.next_seed());
  CheckResult r = measured("distance_decreasing", "fibration", est.max_ratio, 1.0, pairs);
  if (est.max_ratio >= 1.0) r.status = CheckStatus::fail;
  r.note = "max ratio at separation " + format_double(est.separation_at_max);
  return r;
}

CheckResult hopf_parallel(Context& ctx) {
  const Fibration hopf = Fibration::hopf();
  SphereSampler s(ctx.next_seed());
  const std::size_t pairs = ctx.few(32);
  double worst = 0.0;
  for (std::size_t n = 0; n < pairs; ++n) {
    const auto prof = pointwise_distance_profile(hopf.fiber(s.uniform_point()), hopf.fiber(s.uniform_point()),
                                                 std::min<std::size_t>(ctx.samples(), 256), s.engine()());
    worst = std::max(worst, prof.variance);
  }
  return measured("hopf_fibers_parallel", "fibration", worst, 1e-9, pairs);
}

CheckResult twisted_not_parallel(Context& ctx, const Fibration& fib) {
  const std::uint64_t seed = ctx.next_seed();
  if (ctx.config.alpha == 0.0) {
    return skipped("twisted_fibers_not_parallel", "fibration", "alpha = 0 is the Hopf fibration");
  }
  const auto a = fib.fiber(UnitQuaternion::identity());
  const auto b = fib.fiber(exp_axis(ImaginaryUnit::j(), kReferenceOffset));
  const auto prof = pointwise_distance_profile(a, b, std::max<std::size_t>(ctx.samples(), 100), seed);
  return measured("twisted_fibers_not_parallel", "fibration", prof.variance, 1e-4, prof.samples, Bound::above);
}

CheckResult parallel_predicate(Context& ctx, const Fibration& fib) {
  SphereSampler s(ctx.next_seed());
  const std::size_t pairs = ctx.few(50);
  std::size_t disagreements = 0;
  for (std::size_t n = 0; n < pairs; ++n) {
    const auto p = s.uniform_point();
    // Alternate between a point on the same Hopf circle and an unrelated point.
    const auto p2 = n % 2 == 0 ? p * exp_axis(ImaginaryUnit::i(), s.uniform_real(0.1, 3.0)) : s.uniform_point();
    const auto a = fib.fiber(p), b = fib.fiber(p2);
    if (!petro_disjoint(a, b)) continue;
    const bool predicate = geodesic_distance(fib.map()(p), fib.map()(p2)) <= 1e-9;
    if (fibers_parallel(a, b, 256, s.engine()()) != predicate) ++disagreements;
  }
  return measured("parallel_iff_equal_images", "fibration", static_cast<double>(disagreements), 0.0, pairs);
}

// extremal-geometry

OffsetSphereParams random_params(SphereSampler& s) {
  const double theta = s.uniform_real(0.05, kPi - 0.05);
  const double phi = s.uniform_real(0.02, theta - 0.02);
  return {s.uniform_axis(), theta, phi};
}

CheckResult lemma_distance(Context& ctx) {
  const std::uint64_t seed = ctx.next_seed();
  if (ctx.config.grid_size < 10000) return skipped("offset_distance_formula", "extremal-geometry", need_grid(10000));
  SphereSampler s(seed);
  const std::size_t cases = ctx.few(20);
  double worst = 0.0;
  for (std::size_t n = 0; n < cases; ++n) {
    const auto params = random_params(s);
    const auto z = s.uniform_point();
    const auto sphere = params.sphere();
    const ProductPoint zz{z, z};
    const auto ex = extremize_on_sphere(
        [&](const UnitQuaternion& y) { return product_distance(zz, sphere.point(y)); }, ctx.config.grid_size);
    worst = std::max(worst, std::abs(ex.min_value - point_to_diagonal_offset_distance(z, params)));
  }
  return measured("offset_distance_formula", "extremal-geometry", worst, 1e-3, cases);
}

CheckResult conjugation_orbit(Context& ctx) {
  SphereSampler s(ctx.next_seed());
  double worst = 0.0;
  for (std::size_t n = 0; n < ctx.samples(); ++n) {
    const double theta = s.uniform_real(0.0, kPi);
    const auto p = conjugation_orbit_point(s.uniform_point(), theta, s.uniform_axis());
    worst = std::max(worst, std::abs(rotation_angle(p) - theta));
  }
  return measured("conjugation_orbit_radius", "extremal-geometry", worst, 1e-10, ctx.samples());
}

void hot_cold_lemma(Context& ctx, std::vector<CheckResult>& out) {
  const std::uint64_t seed = ctx.next_seed();
  if (ctx.config.grid_size < 10000) {
    out.push_back(skipped("hot_cold_circles", "extremal-geometry", need_grid(10000)));
    out.push_back(skipped("hot_cold_values", "extremal-geometry", need_grid(10000)));
    return;
  }
  SphereSampler s(seed);
  const std::size_t cases = ctx.few(20);
  double spacings = 0.0, values = 0.0;
  for (std::size_t n = 0; n < cases; ++n) {
    const auto params = random_params(s);
    const auto ex = hot_cold_numeric(params, ctx.config.grid_size);
    const auto circles = hot_cold_analytic(params);
    for (const auto& p : ex.argmin) spacings = std::max(spacings, circles.hot.distance_to(p) / ex.spacing);
    for (const auto& p : ex.argmax) spacings = std::max(spacings, circles.cold.distance_to(p) / ex.spacing);
    values = std::max({values, std::abs(ex.min_value - hot_value(params)),
                       std::abs(ex.max_value - cold_value(params))});
  }
  out.push_back(measured("hot_cold_circles", "extremal-geometry", spacings, 2.0, cases, Bound::at_most,
                         "residual in grid spacings"));
  out.push_back(measured("hot_cold_values", "extremal-geometry", values, 1e-3, cases));
}

void conjugate_identities(Context& ctx, std::vector<CheckResult>& out) {
  ctx.next_seed();
  double qp = 0.0, qpp = 0.0;
  std::size_t count = 0;
  for (int a = 0; a < 10; ++a) {
    const double alpha = max_twist_angle() * a / 9.0;
    for (int e = 0; e < 10; ++e) {
      const double eps = 0.5 * e / 9.0;
      for (int t = 0; t < 10; ++t) {
        const double theta = 2.0 * kPi * t / 10.0;
        qp = std::max(qp, max_component_gap(q_prime(alpha, eps, theta), q_prime_corrected_closed_form(alpha, eps, theta)));
        qpp = std::max(qpp, max_component_gap(q_double_prime(alpha, eps, theta), q_double_prime_closed_form(alpha, eps, theta)));
        ++count;
      }
    }
  }
  out.push_back(measured("q_prime_expansion", "extremal-geometry", qp, 1e-12, count, Bound::at_most,
                         "jk-plane phase theta - alpha + pi/2"));
  out.push_back(measured("q_double_prime_expansion", "extremal-geometry", qpp, 1e-12, count));
}

CheckResult first_order(Context& ctx) {
  ctx.next_seed();
  if (ctx.config.alpha == 0.0) return skipped("first_order_scaling", "extremal-geometry", "alpha = 0 has q'' = 1");
  double worst = 0.0;
  std::size_t count = 0;
  for (double theta : {0.0, kPi / 3.0, kPi / 2.0}) {
    double prev = -1.0;
    for (double eps : {0.1, 0.05, 0.025}) {
      const double err = geodesic_distance(q_double_prime(ctx.config.alpha, eps, theta),
                                           q_double_prime_first_order(ctx.config.alpha, eps, theta));
      if (prev > 0.0) {
        worst = std::max(worst, std::abs(err / prev - 0.25));
        ++count;
      }
      prev = err;
    }
  }
  return measured("first_order_scaling", "extremal-geometry", worst, 0.05, count, Bound::at_most,
                  "deviation of the halving ratio from 1/4");
}

void eggbeater(Context& ctx, std::vector<CheckResult>& out) {
  ctx.next_seed();
  const double alpha = ctx.config.alpha;
  if (alpha == 0.0) {
    const std::string why = "alpha = 0 has no hot or cold circles";
    out.push_back(skipped("eggbeater_pivots", "extremal-geometry", why));
    out.push_back(skipped("frame_orthogonality", "extremal-geometry", why));
    out.push_back(skipped("hot_set_finite_offset", "extremal-geometry", why));
    return;
  }
  const auto frames = eggbeater_sweep(alpha, ctx.config.epsilon, ctx.config.n_frames);
  const auto hot = hot_pivot(alpha), cold = cold_pivot(alpha);
  double pivots = 0.0, orth = 0.0;
  for (const auto& f : frames) {
    pivots = std::max({pivots, f.hot.distance_to(hot), f.hot.distance_to(-hot), f.cold.distance_to(cold),
                       f.cold.distance_to(-cold)});
    orth = std::max(orth, f.hot.max_cross_inner_product(f.cold));
  }
  out.push_back(measured("eggbeater_pivots", "extremal-geometry", pivots, 1e-9, frames.size()));
  out.push_back(measured("frame_orthogonality", "extremal-geometry", orth, 1e-9, frames.size()));

  if (ctx.config.grid_size < 10000) {
    out.push_back(skipped("hot_set_finite_offset", "extremal-geometry", need_grid(10000)));
    return;
  }
  constexpr double eps = 1e-3;
  const auto sigma1 = neighbor_fiber(alpha, 0.0, 0.0);
  double worst = 0.0;
  for (std::size_t k = 0; k < ctx.config.n_frames; ++k) {
    const double theta = 2.0 * kPi * static_cast<double>(k) / static_cast<double>(ctx.config.n_frames);
    const auto ex = hot_cold_numeric_between(sigma1, neighbor_fiber(alpha, eps, theta), ctx.config.grid_size);
    const auto limit = hot_cold_on_sigma1(alpha, theta, eps);
    for (const auto& p : ex.argmin) worst = std::max(worst, limit.hot.distance_to(p));
  }
  out.push_back(measured("hot_set_finite_offset", "extremal-geometry", worst, 1e-2, ctx.config.n_frames,
                         Bound::at_most, "epsilon = 0.001"));
}

CheckResult diagonal_reduction(Context& ctx) {
  SphereSampler s(ctx.next_seed());
  const std::size_t cases = ctx.few(100);
  double worst = 0.0;
  std::size_t used = 0;
  for (std::size_t n = 0; n < cases; ++n) {
    const GreatThreeSphere a(s.uniform_point(), s.uniform_point());
    const GreatThreeSphere b(s.uniform_point(), s.uniform_point());
    if (!petro_disjoint(a, b)) continue;
    const auto red = reduce_to_diagonal(a, b);
    ++used;
    for (int k = 0; k < 16; ++k) {
      const auto x = s.uniform_point();
      worst = std::max(worst, membership_residual(GreatThreeSphere::diagonal(), red.isometry.apply(a.point(x))));
      if (red.params) {
        worst = std::max(worst, membership_residual(red.params->sphere(), red.isometry.apply(b.point(x))));
      }
    }
  }
  return measured("reduction_to_diagonal", "extremal-geometry", worst, 1e-10, used);
}

template <typename F>
void timed(std::vector<CheckResult>& out, F&& run) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t before = out.size();
  run();
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const std::size_t added = out.size() - before;
  for (std::size_t k = before; k < out.size(); ++k) out[k].duration_s = elapsed / static_cast<double>(added);
}

}  // namespace

std::string status_name(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "skipped";
}

bool VerificationReport::passed() const noexcept {
  return std::none_of(checks.begin(), checks.end(),
                      [](const CheckResult& c) { return c.status == CheckStatus::fail; });
}

std::vector<std::string> VerificationReport::failing() const {
  std::vector<std::string> names;
  for (const auto& c : checks) {
    if (c.status == CheckStatus::fail) names.push_back(c.name);
  }
  return names;
}

VerificationReport run_verify(const RunConfig& config) {
  validate(config);
  VerificationReport report{config, {}};
  auto& out = report.checks;
  Context ctx{config};
  const Fibration fib = config.alpha == 0.0 ? Fibration::hopf() : Fibration::twisted(config.alpha);

  for (auto* check : {unit_norm, bi_invariance, triangle_inequality, inverse_of_product,
                      one_parameter_subgroup, midpoint, sampling_mean, petro_vs_brute_force}) {
    timed(out, [&] { out.push_back(check(ctx)); });
  }
  for (auto* check : {fibration_disjointness, coverage, fiberwise_homogeneity}) {
    timed(out, [&] { out.push_back(check(ctx, fib)); });
  }
  timed(out, [&] { out.push_back(pointwise_homogeneity(ctx)); });
  timed(out, [&] { out.push_back(hopf_circle_invariance(ctx)); });
  timed(out, [&] { out.push_back(distance_decreasing(ctx)); });
  timed(out, [&] { out.push_back(hopf_parallel(ctx)); });
  timed(out, [&] { out.push_back(twisted_not_parallel(ctx, fib)); });
  timed(out, [&] { out.push_back(parallel_predicate(ctx, fib)); });
  timed(out, [&] { out.push_back(lemma_distance(ctx)); });
  timed(out, [&] { out.push_back(conjugation_orbit(ctx)); });
  timed(out, [&] { hot_cold_lemma(ctx, out); });
  timed(out, [&] { conjugate_identities(ctx, out); });
  timed(out, [&] { out.push_back(first_order(ctx)); });
  timed(out, [&] { eggbeater(ctx, out); });
  timed(out, [&] { out.push_back(diagonal_reduction(ctx)); });
  return report;
}

std::string report_json(const VerificationReport& report, bool timings) {
  using nlohmann::ordered_json;
  const RunConfig& c = report.config;
  ordered_json doc;
  doc["config"] = {{"alpha", c.alpha},   {"epsilon", c.epsilon}, {"frames", c.n_frames},
                   {"grid", c.grid_size}, {"samples", c.n_samples}, {"seed", c.seed}};
  doc["status"] = report.passed() ? "pass" : "fail";
  ordered_json checks = ordered_json::array();
  for (const auto& r : report.checks) {
    ordered_json j{{"name", r.name}, {"module", r.module}, {"status", status_name(r.status)}};
    if (r.status != CheckStatus::skipped) {
      j["residual"] = r.residual;
      j["tolerance"] = r.tolerance;
      j["bound"] = r.bound == Bound::at_most ? "at_most" : "above";
      j["samples"] = r.samples;
    }
    if (!r.note.empty()) j["note"] = r.note;
    if (timings) j["duration_s"] = r.duration_s;
    checks.push_back(std::move(j));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

std::string report_csv(const VerificationReport& report, bool timings) {
  std::string csv = "name,module,status,residual,tolerance,bound,samples,note";
  if (timings) csv += ",duration_s";
  csv += "\n";
  for (const auto& r : report.checks) {
    const bool ran = r.status != CheckStatus::skipped;
    csv += r.name + "," + r.module + "," + status_name(r.status) + ",";
    csv += (ran ? format_double(r.residual) : "") + "," + (ran ? format_double(r.tolerance) : "") + ",";
    csv += std::string(ran ? (r.bound == Bound::at_most ? "at_most" : "above") : "") + ",";
    csv += (ran ? std::to_string(r.samples) : "") + ",\"" + r.note + "\"";
    if (timings) csv += "," + format_double(r.duration_s);
    csv += "\n";
  }
  return csv;
}

}  // namespace clifford::cli
