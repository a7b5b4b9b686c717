#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "groupobs/graph.hpp"
#include "groupobs/montecarlo.hpp"
#include "groupobs/scope.hpp"

namespace groupobs {

struct CurvePoint {
  double x = 0.0;  // compromised fraction nc / n
  double value = 0.0;
  double standard_error = 0.0;
};

// Observability curve: metric value against compromised fraction.
//
// `extent` is the right end of the x-domain the curve summarizes. It equals
// the last point's x unless the curve stops short of x = 1 only because the
// metric is undefined there (local scopes end at (n-1)/n); in that case the
// AUOC closes the gap by extending the final segment linearly.
struct ObservabilityCurve {
  std::vector<CurvePoint> points;
  std::optional<ObservationScope> scope;
  std::string label;
  double extent = 0.0;
};

// Evenly spaced compromised fractions {0, 1/(points-1), ..., 1} mapped to
// integer counts round(f n), clamped to the scope's largest valid count
// (n for global, n-1 for local) and deduplicated.
std::vector<std::size_t> default_grid(std::size_t n, std::size_t points, Level level);

inline constexpr std::size_t kDefaultGridPoints = 21;
inline constexpr std::size_t kDefaultTrials = 500;

struct CurveOptions {
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

// Whether build_curve evaluates `scope` with a closed form (1-hop edge
// metrics) instead of Monte-Carlo.
bool uses_closed_form(const ObservationScope& scope) noexcept;

// One point per grid count (ascending, no duplicates). Monte-Carlo points
// use seed mix_seed(options.seed, nc).
ObservabilityCurve build_curve(const Graph& g, const ObservationScope& scope,
                               std::span<const std::size_t> grid, const CurveOptions& options,
                               std::string label = {});

// Curve from explicit points; extent defaults to the last x.
ObservabilityCurve make_curve(std::vector<CurvePoint> points, std::string label = {});

// Trapezoidal area under the curve over [first x, extent], divided by the
// span. Throws InputError with fewer than 2 points or non-increasing x.
double auoc(const ObservabilityCurve& curve);

// Standard error of auoc() assuming independent point estimates.
double auoc_standard_error(const ObservabilityCurve& curve);

// "x,value,stderr" rows, 6 significant digits. Lines in `metadata` are
// emitted first as "# " comments.
void write_curve_csv(std::ostream& out, const ObservabilityCurve& curve,
                     std::span<const std::string> metadata = {});

// {scope, label, auoc, auoc_stderr, points: [{x, value, stderr}]}
nlohmann::json curve_to_json(const ObservabilityCurve& curve);

// printf("%.6g") formatting used by every CSV writer.
std::string format_sig6(double value);

}  // namespace groupobs
