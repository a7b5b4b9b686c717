#include "groupobs/city.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <random>
#include <sstream>
#include <string>

#include "groupobs/errors.hpp"
#include "groupobs/montecarlo.hpp"
#include "groupobs/parallel.hpp"

namespace groupobs {
namespace {

constexpr std::size_t kSampleChunk = 1 << 16;

void require_fraction(double x) {
  if (!(x >= 0.0 && x <= 1.0)) throw InputError("compromised fraction must lie in [0, 1]");
}

void require_grid(std::span<const double> grid) {
  for (std::size_t i = 0; i < grid.size(); ++i) {
    require_fraction(grid[i]);
    if (i > 0 && grid[i] <= grid[i - 1]) {
      throw InputError("fraction grid must be strictly ascending");
    }
  }
}

}  // namespace

double lno_approx(double m, const LnoFit& fit) {
  if (!(m >= 0.0) || !std::isfinite(m)) {
    throw InputError("compromised device density must be finite and non-negative");
  }
  if (m == 0.0) return 0.0;
  return std::clamp(fit.slope * std::log(m) + fit.intercept, 0.0, 1.0);
}

CityBlocks::CityBlocks(std::vector<double> populations) : populations_(std::move(populations)) {
  if (populations_.empty()) throw InputError("a city needs at least one block");
  for (double b : populations_) {
    if (!(b >= 0.0) || !std::isfinite(b)) {
      throw InputError("block populations must be finite and non-negative");
    }
  }
}

double CityBlocks::total() const noexcept {
  double sum = 0.0;
  for (double b : populations_) sum += b;
  return sum;
}

CityBlocks read_blocks(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string token, extra;
    if (!(fields >> token) || token.front() == '#') continue;
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || (fields >> extra)) {
      throw InputError("blocks line " + std::to_string(line_no) + ": expected one number");
    }
    values.push_back(v);
  }
  return CityBlocks(std::move(values));
}

void CityProfile::validate() const {
  if (!(population > 0.0) || !std::isfinite(population) || !(area_km2 > 0.0) ||
      !std::isfinite(area_km2)) {
    throw InputError("city population and area must be positive");
  }
}

double local_node_obs_city(const CityBlocks& blocks, double fraction, const LnoFit& fit) {
  require_fraction(fraction);
  double pop = 0.0;
  double obs = 0.0;
  for (double b : blocks.populations()) {
    pop += b;
    obs += lno_approx(fraction * b, fit) * b;
  }
  if (pop <= 0.0) throw DomainError("city has zero total population");
  return obs / pop;
}

CityBlocks sample_exponential_blocks(const CityProfile& profile, std::size_t samples,
                                     std::uint64_t seed, unsigned workers) {
  profile.validate();
  if (samples < 1) throw InputError("exponential estimate needs at least one sample");
  std::vector<double> values(samples);
  const std::size_t chunks = (samples + kSampleChunk - 1) / kSampleChunk;
  const double rate = 1.0 / profile.density();
  parallel_for(chunks, workers, [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t c = begin; c < end; ++c) {
      std::mt19937_64 rng(mix_seed(seed, c));
      std::exponential_distribution<double> block(rate);
      const std::size_t lo = c * kSampleChunk;
      const std::size_t hi = std::min(samples, lo + kSampleChunk);
      for (std::size_t i = lo; i < hi; ++i) values[i] = block(rng);
    }
  });
  return CityBlocks(std::move(values));
}

double estimate_city_exponential(const CityProfile& profile, double fraction,
                                 std::size_t samples, std::uint64_t seed, unsigned workers,
                                 const LnoFit& fit) {
  require_fraction(fraction);
  return local_node_obs_city(sample_exponential_blocks(profile, samples, seed, workers), fraction,
                             fit);
}

ObservabilityCurve city_sweep(const CityBlocks& blocks, std::span<const double> grid,
                              const LnoFit& fit) {
  require_grid(grid);
  std::vector<CurvePoint> points;
  points.reserve(grid.size());
  for (double x : grid) points.push_back({x, local_node_obs_city(blocks, x, fit), 0.0});
  return make_curve(std::move(points), "census");
}

ObservabilityCurve city_sweep(const CityProfile& profile, std::span<const double> grid,
                              std::size_t samples, std::uint64_t seed, unsigned workers,
                              const LnoFit& fit) {
  require_grid(grid);
  auto curve = city_sweep(sample_exponential_blocks(profile, samples, seed, workers), grid, fit);
  curve.label = "exponential";
  return curve;
}

}  // namespace groupobs
