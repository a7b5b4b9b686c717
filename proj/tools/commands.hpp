#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "groupobs/city.hpp"
#include "groupobs/curves.hpp"
#include "groupobs/scope.hpp"

namespace groupobs::cli {

inline constexpr std::uint64_t kDefaultSeed = 1;

struct ScopeFlags {
  std::string target = "edge";
  std::string level = "global";
  std::uint32_t hops = 1;

  [[nodiscard]] ObservationScope resolve() const;
};

struct OutputFlags {
  std::string out = "-";
  std::string format;  // empty: the command's default
};

struct GenerateOptions {
  std::string family;
  std::size_t n = 0;
  std::optional<double> density;
  std::optional<double> p;
  std::optional<std::size_t> m;
  std::optional<std::size_t> k;
  std::uint64_t seed = kDefaultSeed;
  std::string out;
};

struct ObserveOptions {
  std::string graph;
  ScopeFlags scope;
  std::optional<std::size_t> nc;
  std::optional<double> fraction;
  std::size_t trials = kDefaultTrials;
  bool enumerate = false;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  OutputFlags output;
};

struct CurveOptionsCli {
  std::string graph;
  bool selftest_linear = false;
  ScopeFlags scope;
  std::size_t grid_points = kDefaultGridPoints;
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  OutputFlags output;
};

struct SweepOptionsCli {
  std::string events;
  std::vector<std::string> windows;
  ScopeFlags scope;
  double fraction = 0.01;
  std::size_t trials = kDefaultTrials;
  std::size_t grid_points = kDefaultGridPoints;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  OutputFlags output;
};

struct ColocateOptions {
  std::string sightings;
  ScopeFlags scope;
  double fraction = 0.1;
  std::size_t trials = kDefaultTrials;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  OutputFlags output;
};

struct CityOptions {
  std::string blocks;
  std::optional<double> population;
  std::optional<double> area;
  std::optional<double> fraction;
  std::vector<std::string> grid;
  std::optional<std::size_t> grid_points;
  std::size_t samples = kDefaultCitySamples;
  LnoFit fit;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  OutputFlags output;
};

void run_generate(const GenerateOptions& o);
void run_observe(const ObserveOptions& o);
void run_curve(const CurveOptionsCli& o);
void run_sweep(const SweepOptionsCli& o);
void run_colocate(const ColocateOptions& o);
void run_city(const CityOptions& o);

}  // namespace groupobs::cli
