#include "groupobs/curves.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "groupobs/errors.hpp"
#include "groupobs/exact.hpp"

namespace groupobs {
namespace {

void require_valid_points(const std::vector<CurvePoint>& points) {
  if (points.size() < 2) throw InputError("AUOC needs at least 2 curve points");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i].x > points[i - 1].x)) {
      throw InputError("curve x values must be strictly increasing");
    }
  }
}

// Weights w_i such that auoc = sum_i w_i * value_i.
std::vector<double> auoc_weights(const ObservabilityCurve& curve) {
  const auto& pts = curve.points;
  require_valid_points(pts);
  const std::size_t last = pts.size() - 1;
  std::vector<double> w(pts.size(), 0.0);
  for (std::size_t i = 0; i < last; ++i) {
    const double h = pts[i + 1].x - pts[i].x;
    w[i] += h / 2.0;
    w[i + 1] += h / 2.0;
  }
  const double tail = curve.extent - pts[last].x;
  if (tail > 0.0) {
    // Extend the final segment linearly: v(extent) = v_last + slope * tail,
    // area over the tail = tail * (v_last + v(extent)) / 2.
    const double r = tail / (pts[last].x - pts[last - 1].x);
    w[last] += tail * (2.0 + r) / 2.0;
    w[last - 1] += tail * (-r) / 2.0;
  }
  const double span = std::max(curve.extent, pts[last].x) - pts.front().x;
  for (double& wi : w) wi /= span;
  return w;
}

}  // namespace

std::vector<std::size_t> default_grid(std::size_t n, std::size_t points, Level level) {
  if (points < 2) throw InputError("a curve grid needs at least 2 points");
  if (n < 1) throw InputError("a curve grid needs n >= 1");
  const std::size_t max_nc = level == Level::local ? n - 1 : n;
  std::vector<std::size_t> grid;
  grid.reserve(points);
  for (std::size_t i = 0; i < points; ++i) {
    const double f = static_cast<double>(i) / static_cast<double>(points - 1);
    const auto nc = static_cast<std::size_t>(std::llround(f * static_cast<double>(n)));
    grid.push_back(std::min(nc, max_nc));
  }
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

bool uses_closed_form(const ObservationScope& scope) noexcept {
  return scope.hops() == 1 && scope.target() == Target::edge;
}

ObservabilityCurve build_curve(const Graph& g, const ObservationScope& scope,
                               std::span<const std::size_t> grid, const CurveOptions& options,
                               std::string label) {
  const std::size_t n = g.node_count();
  if (n == 0) throw InputError("cannot build a curve on an empty graph");
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (grid[i] <= grid[i - 1]) throw InputError("curve grid must be strictly ascending");
  }

  ObservabilityCurve curve;
  curve.scope = scope;
  curve.label = std::move(label);
  curve.points.reserve(grid.size());
  const auto nn = static_cast<double>(n);
  for (std::size_t nc : grid) {
    validate_metric_domain(g, scope, nc);
    CurvePoint point;
    point.x = static_cast<double>(nc) / nn;
    if (uses_closed_form(scope)) {
      point.value = scope.is_local() ? exact_local_edge_obs(n, nc) : exact_global_edge_obs(n, nc);
    } else {
      const McEstimate est = mc_estimate(g, scope, nc, options.trials,
                                         mix_seed(options.seed, nc), options.workers);
      point.value = est.mean;
      point.standard_error = est.standard_error;
    }
    curve.points.push_back(point);
  }

  const std::size_t max_nc = scope.is_local() ? n - 1 : n;
  const bool reaches_end = !grid.empty() && grid.back() == max_nc;
  curve.extent = reaches_end ? 1.0 : (curve.points.empty() ? 0.0 : curve.points.back().x);
  return curve;
}

ObservabilityCurve make_curve(std::vector<CurvePoint> points, std::string label) {
  ObservabilityCurve curve;
  curve.extent = points.empty() ? 0.0 : points.back().x;
  curve.points = std::move(points);
  curve.label = std::move(label);
  return curve;
}

double auoc(const ObservabilityCurve& curve) {
  const auto w = auoc_weights(curve);
  double area = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) area += w[i] * curve.points[i].value;
  return area;
}

double auoc_standard_error(const ObservabilityCurve& curve) {
  const auto w = auoc_weights(curve);
  double var = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double s = w[i] * curve.points[i].standard_error;
    var += s * s;
  }
  return std::sqrt(var);
}

std::string format_sig6(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", value);
  return buf;
}

void write_curve_csv(std::ostream& out, const ObservabilityCurve& curve,
                     std::span<const std::string> metadata) {
  for (const auto& line : metadata) out << "# " << line << '\n';
  out << "x,value,stderr\n";
  for (const auto& p : curve.points) {
    out << format_sig6(p.x) << ',' << format_sig6(p.value) << ','
        << format_sig6(p.standard_error) << '\n';
  }
}

nlohmann::json curve_to_json(const ObservabilityCurve& curve) {
  nlohmann::json doc;
  if (curve.scope) {
    doc["scope"] = {{"target", to_string(curve.scope->target())},
                    {"level", to_string(curve.scope->level())},
                    {"hops", curve.scope->hops()}};
  } else {
    doc["scope"] = nullptr;
  }
  doc["label"] = curve.label;
  if (curve.points.size() >= 2) {
    doc["auoc"] = auoc(curve);
    doc["auoc_stderr"] = auoc_standard_error(curve);
  } else {
    doc["auoc"] = nullptr;
    doc["auoc_stderr"] = nullptr;
  }
  auto& pts = doc["points"] = nlohmann::json::array();
  for (const auto& p : curve.points) {
    pts.push_back({{"x", p.x}, {"value", p.value}, {"stderr", p.standard_error}});
  }
  return doc;
}

}  // namespace groupobs
