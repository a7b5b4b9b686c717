#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "groupobs/curves.hpp"

namespace groupobs {

// Fitted local node-observability as a function of compromised devices
// per km^2: slope * ln(m) + intercept, clamped to [0, 1].
struct LnoFit {
  double slope = 0.13;
  double intercept = -0.05;
};

// 0 at m = 0. Throws InputError for negative or non-finite m.
double lno_approx(double devices_per_km2, const LnoFit& fit = {});

// Persons per 1 km^2 block.
class CityBlocks {
 public:
  // Throws InputError when empty or any entry is negative / non-finite.
  explicit CityBlocks(std::vector<double> populations);

  [[nodiscard]] std::span<const double> populations() const noexcept { return populations_; }
  [[nodiscard]] std::size_t size() const noexcept { return populations_.size(); }
  [[nodiscard]] double total() const noexcept;

 private:
  std::vector<double> populations_;
};

// One non-negative number per line; blank lines and '#' comments ignored.
CityBlocks read_blocks(std::istream& in);

struct CityProfile {
  double population = 0.0;
  double area_km2 = 0.0;

  // Throws InputError unless both are positive and finite.
  void validate() const;
  [[nodiscard]] double density() const { return population / area_km2; }
};

// Population-weighted mean of lno_approx(x * B_i) over the blocks.
// Throws DomainError when the total population is zero.
double local_node_obs_city(const CityBlocks& blocks, double fraction, const LnoFit& fit = {});

inline constexpr std::size_t kDefaultCitySamples = 100'000;

// Draws `samples` block populations from an exponential distribution whose
// mean is the city density. Sampling proceeds in fixed-size chunks, each
// seeded by mix_seed(seed, chunk), so the result is independent of
// `workers`.
CityBlocks sample_exponential_blocks(const CityProfile& profile, std::size_t samples,
                                     std::uint64_t seed, unsigned workers = 1);

double estimate_city_exponential(const CityProfile& profile, double fraction,
                                 std::size_t samples, std::uint64_t seed, unsigned workers = 1,
                                 const LnoFit& fit = {});

// local_node_obs_city over an ascending x grid in [0, 1].
ObservabilityCurve city_sweep(const CityBlocks& blocks, std::span<const double> grid,
                              const LnoFit& fit = {});
// Samples the blocks once and evaluates every grid point on them.
ObservabilityCurve city_sweep(const CityProfile& profile, std::span<const double> grid,
                              std::size_t samples, std::uint64_t seed, unsigned workers = 1,
                              const LnoFit& fit = {});

}  // namespace groupobs
