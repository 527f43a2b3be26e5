#include <algorithm>
#include <numbers>

#include <json.hpp>

#include "clifford/fibration.hpp"
#include "clifford/sampling.hpp"
#include "clifford_cli/commands.hpp"

namespace clifford::cli {
namespace {

constexpr double kParallelTolerance = 1e-9;
constexpr double kDistinctTolerance = 1e-4;

ParallelismSweep parallelism(double alpha, const RunConfig& config) {
  const Fibration fib = alpha == 0.0 ? Fibration::hopf() : Fibration::twisted(alpha);
  ParallelismSweep out;
  out.alpha = alpha;
  // The same seed on both sides, so the two columns compare the same index pairs.
  SphereSampler s(config.seed);
  for (std::size_t n = 0; n < kComparePairs; ++n) {
    const auto p = s.uniform_point(), p2 = s.uniform_point();
    const auto prof = pointwise_distance_profile(fib.fiber(p), fib.fiber(p2), config.n_samples, s.engine()());
    out.pairs.push_back({p, p2, prof.variance});
    out.max_variance = std::max(out.max_variance, prof.variance);
  }
  const auto reference = pointwise_distance_profile(
      fib.fiber(UnitQuaternion::identity()), fib.fiber(exp_axis(ImaginaryUnit::j(), 0.3)), config.n_samples,
      config.seed);
  out.reference_variance = reference.variance;
  out.max_variance = std::max(out.max_variance, reference.variance);
  return out;
}

nlohmann::ordered_json quat_json(const UnitQuaternion& q) {
  const auto c = q.components();
  return nlohmann::ordered_json::array({c[0], c[1], c[2], c[3]});
}

nlohmann::ordered_json sweep_json(const ParallelismSweep& sweep) {
  nlohmann::ordered_json pairs = nlohmann::ordered_json::array();
  for (const auto& p : sweep.pairs) {
    pairs.push_back({{"p", quat_json(p.p)}, {"p_prime", quat_json(p.p_prime)}, {"variance", p.variance}});
  }
  return {{"alpha", sweep.alpha},
          {"max_variance", sweep.max_variance},
          {"reference_variance", sweep.reference_variance},
          {"pairs", std::move(pairs)}};
}

}  // namespace

CompareReport run_compare(const RunConfig& config) {
  validate(config);
  CompareReport report;
  report.config = config;
  report.hopf = parallelism(0.0, config);
  report.twisted = parallelism(config.alpha, config);
  report.hopf_constant = report.hopf.max_variance <= kParallelTolerance;
  if (config.alpha > 0.0) report.twisted_nonconstant = report.twisted.max_variance > kDistinctTolerance;
  return report;
}

std::string compare_json(const CompareReport& report) {
  nlohmann::ordered_json doc;
  doc["config"] = {{"alpha", report.config.alpha},
                   {"samples", report.config.n_samples},
                   {"pairs", kComparePairs},
                   {"seed", report.config.seed}};
  doc["hopf"] = sweep_json(report.hopf);
  doc["twisted"] = sweep_json(report.twisted);
  doc["hopf_constant"] = report.hopf_constant;
  if (report.twisted_nonconstant) {
    doc["twisted_nonconstant"] = *report.twisted_nonconstant;
  } else {
    doc["twisted_nonconstant"] = nullptr;
  }
  doc["status"] = report.passed() ? "pass" : "fail";
  return doc.dump(2) + "\n";
}

}  // namespace clifford::cli
