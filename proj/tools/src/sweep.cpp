#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "clifford_cli/commands.hpp"
#include "clifford_cli/output.hpp"

namespace clifford::cli {
namespace {

nlohmann::ordered_json quat_json(const UnitQuaternion& q) {
  const auto c = q.components();
  return nlohmann::ordered_json::array({c[0], c[1], c[2], c[3]});
}

nlohmann::ordered_json circle_json(const GreatCircle& c) {
  return {{"a", quat_json(c.a())}, {"b", quat_json(c.b())}};
}

void append_quat(std::string& row, const UnitQuaternion& q) {
  for (double c : q.components()) row += "," + format_double(c);
}

// Fixed view of the stereographic image: rotate about z, tilt about x, drop depth.
constexpr double kAzimuth = 0.6;
constexpr double kElevation = 0.35;
constexpr double kScale = 110.0;
constexpr double kCanvas = 560.0;
/// Points further than this from the origin in R^3 are clipped.
constexpr double kClipRadius = 4.0;

std::optional<std::array<double, 2>> project(const UnitQuaternion& q) {
  const double denom = 1.0 + q.w();
  if (denom < 1e-6) return std::nullopt;
  const double x = q.x() / denom, y = q.y() / denom, z = q.z() / denom;
  if (x * x + y * y + z * z > kClipRadius * kClipRadius) return std::nullopt;
  const double ca = std::cos(kAzimuth), sa = std::sin(kAzimuth);
  const double x1 = ca * x - sa * y, y1 = sa * x + ca * y;
  const double ce = std::cos(kElevation), se = std::sin(kElevation);
  const double up = ce * z - se * y1;
  return std::array<double, 2>{0.5 * kCanvas + kScale * x1, 0.5 * kCanvas - kScale * up};
}

void polyline(std::ostringstream& svg, const GreatCircle& circle, const char* cls) {
  constexpr int steps = 360;
  std::string points;
  auto flush = [&] {
    if (!points.empty()) svg << "    <polyline class=\"" << cls << "\" points=\"" << points << "\"/>\n";
    points.clear();
  };
  for (int k = 0; k <= steps; ++k) {
    const auto p = project(circle.point_at(2.0 * std::numbers::pi * k / steps));
    if (!p) {
      flush();
      continue;
    }
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%.3f,%.3f", points.empty() ? "" : " ", (*p)[0], (*p)[1]);
    points += buf;
  }
  flush();
}

void marker(std::ostringstream& svg, const UnitQuaternion& q, const char* cls) {
  if (const auto p = project(q)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "  <circle class=\"%s\" cx=\"%.3f\" cy=\"%.3f\" r=\"4\"/>\n", cls, (*p)[0], (*p)[1]);
    svg << buf;
  }
}

}  // namespace

std::vector<HotColdFrame> run_sweep(const RunConfig& config) {
  validate(config);
  if (config.alpha <= 0.0) throw ConfigError("sweep needs alpha in (0, pi/6]");
  return eggbeater_sweep(config.alpha, config.epsilon, config.n_frames);
}

const std::vector<std::string>& sweep_csv_header() {
  static const std::vector<std::string> header = [] {
    std::vector<std::string> h{"theta"};
    for (const char* group : {"hot_a", "hot_b", "cold_a", "cold_b", "q_exact", "q_first_order"}) {
      for (const char* c : {"w", "x", "y", "z"}) h.push_back(std::string(group) + "_" + c);
    }
    h.push_back("approx_error");
    return h;
  }();
  return header;
}

std::string sweep_json(const std::vector<HotColdFrame>& frames) {
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& f : frames) {
    records.push_back({{"theta", f.theta},
                       {"hot", circle_json(f.hot)},
                       {"cold", circle_json(f.cold)},
                       {"q_exact", quat_json(f.q_exact)},
                       {"q_first_order", quat_json(f.q_first_order)},
                       {"approx_error", f.approx_error()}});
  }
  return records.dump(2) + "\n";
}

std::string sweep_csv(const std::vector<HotColdFrame>& frames) {
  std::string csv;
  const auto& header = sweep_csv_header();
  for (std::size_t k = 0; k < header.size(); ++k) csv += (k ? "," : "") + header[k];
  csv += "\n";
  for (const auto& f : frames) {
    std::string row = format_double(f.theta);
    append_quat(row, f.hot.a());
    append_quat(row, f.hot.b());
    append_quat(row, f.cold.a());
    append_quat(row, f.cold.b());
    append_quat(row, f.q_exact);
    append_quat(row, f.q_first_order);
    row += "," + format_double(f.approx_error());
    csv += row + "\n";
  }
  return csv;
}

std::string sweep_svg(const std::vector<HotColdFrame>& frames, double alpha) {
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kCanvas << "\" height=\"" << kCanvas
      << "\" viewBox=\"0 0 " << kCanvas << ' ' << kCanvas << "\">\n";
  svg << "  <style>.hot{fill:none;stroke:#c8372d;stroke-width:1.2}"
         ".cold{fill:none;stroke:#2d62c8;stroke-width:1.2}"
         ".hot-pivot{fill:#c8372d}.cold-pivot{fill:#2d62c8}</style>\n";
  svg << "  <title>hot and cold circles, stereographic projection from -1, alpha = "
      << format_double(alpha) << "</title>\n";
  for (std::size_t k = 0; k < frames.size(); ++k) {
    svg << "  <g id=\"frame-" << k << "\" data-theta=\"" << format_double(frames[k].theta) << "\">\n";
    polyline(svg, frames[k].hot, "hot");
    polyline(svg, frames[k].cold, "cold");
    svg << "  </g>\n";
  }
  for (const auto& q : {hot_pivot(alpha), -hot_pivot(alpha)}) marker(svg, q, "hot-pivot");
  for (const auto& q : {cold_pivot(alpha), -cold_pivot(alpha)}) marker(svg, q, "cold-pivot");
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace clifford::cli
