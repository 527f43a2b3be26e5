#include "clifford_cli/app.hpp"

#include <cstdio>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "clifford/errors.hpp"
#include "clifford_cli/commands.hpp"
#include "clifford_cli/output.hpp"

namespace clifford::cli {
namespace {

void add_format(CLI::App& cmd, std::string& format, std::vector<std::string> allowed) {
  cmd.add_option("--format", format, "Output format")->check(CLI::IsMember(std::move(allowed)));
}

int do_verify(RunConfig config) {
  const VerificationReport report = run_verify(config);
  for (const auto& c : report.checks) {
    std::fprintf(stderr, "%-28s %-8s %s  %.3fs\n", c.name.c_str(), status_name(c.status).c_str(),
                 c.status == CheckStatus::skipped ? c.note.c_str() : format_double(c.residual).c_str(),
                 c.duration_s);
  }
  emit(config.output_path, config.output_format == OutputFormat::csv ? report_csv(report, config.timings)
                                                                     : report_json(report, config.timings));
  if (report.passed()) return kExitOk;
  for (const auto& name : report.failing()) std::cerr << "check failed: " << name << "\n";
  return kExitFailure;
}

int do_sweep(const RunConfig& config) {
  if (config.output_format == OutputFormat::svg && config.writes_stdout()) {
    throw ConfigError("svg output needs --out");
  }
  const auto frames = run_sweep(config);
  switch (config.output_format) {
    case OutputFormat::json: emit(config.output_path, sweep_json(frames)); break;
    case OutputFormat::csv: emit(config.output_path, sweep_csv(frames)); break;
    case OutputFormat::svg:
      write_atomically(config.output_path + ".json", sweep_json(frames));
      write_atomically(config.output_path, sweep_svg(frames, config.alpha));
      break;
  }
  return kExitOk;
}

int do_compare(const RunConfig& config) {
  const CompareReport report = run_compare(config);
  std::fprintf(stderr, "hopf     max variance %s\n", format_double(report.hopf.max_variance).c_str());
  std::fprintf(stderr, "alpha=%s max variance %s\n", format_double(config.alpha).c_str(),
               format_double(report.twisted.max_variance).c_str());
  emit(config.output_path, compare_json(report));
  if (report.passed()) return kExitOk;
  if (!report.hopf_constant) std::cerr << "check failed: hopf_constant\n";
  if (!report.twisted_nonconstant.value_or(true)) std::cerr << "check failed: twisted_nonconstant\n";
  return kExitFailure;
}

}  // namespace

int run_app(int argc, char** argv) {
  CLI::App app{"Fibrations of S^3 x S^3 by great 3-spheres: verification, sweeps, comparisons"};
  app.require_subcommand(1);

  RunConfig config;
  config.alpha = std::numbers::pi / 6.0;
  std::string format = "json";

  auto* verify = app.add_subcommand("verify", "Run the property suites and write a verification report");
  verify->add_option("--alpha", config.alpha, "Twist angle in [0, pi/6]");
  verify->add_option("--seed", config.seed, "Random seed");
  verify->add_option("--samples", config.n_samples, "Random instances per check");
  verify->add_option("--grid", config.grid_size, "Lattice size for the brute-force checks");
  verify->add_option("--epsilon", config.epsilon, "Neighbor offset for the eggbeater checks");
  verify->add_option("--frames", config.n_frames, "Frames for the eggbeater checks");
  verify->add_option("--out", config.output_path, "Report path (default: standard output)");
  verify->add_flag("--timings", config.timings, "Include wall-clock durations in the report");
  add_format(*verify, format, {"json", "csv"});

  auto* sweep = app.add_subcommand("sweep", "Hot and cold circles as the neighboring fiber turns");
  sweep->add_option("--alpha", config.alpha, "Twist angle in (0, pi/6]");
  sweep->add_option("--epsilon", config.epsilon, "Neighbor offset");
  sweep->add_option("--frames", config.n_frames, "Number of frames (>= 4)");
  sweep->add_option("--out", config.output_path, "Output path; svg also writes PATH.json");
  add_format(*sweep, format, {"json", "csv", "svg"});

  auto* compare = app.add_subcommand("compare", "Pointwise distance variance: Hopf against twisted");
  compare->add_option("--alpha", config.alpha, "Twist angle in [0, pi/6]");
  compare->add_option("--seed", config.seed, "Random seed");
  compare->add_option("--samples", config.n_samples, "Points per fiber pair");
  compare->add_option("--out", config.output_path, "Report path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }
  config.output_format = *parse_format(format);

  try {
    validate(config);
    if (*verify) return do_verify(config);
    if (*sweep) return do_sweep(config);
    return do_compare(config);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OutputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}

}  // namespace clifford::cli
