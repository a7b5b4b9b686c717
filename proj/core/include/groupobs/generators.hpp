#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "groupobs/graph.hpp"

namespace groupobs {

enum class Family { complete, er, ba, ws };

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view text);

inline constexpr double kDefaultRewiring = 0.2;

// Parameters for one synthetic graph. Only the fields relevant to `family`
// are read: er uses p; ba uses m; ws uses k and p (rewiring probability).
struct GeneratorSpec {
  Family family = Family::complete;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t m = 1;
  std::size_t k = 2;
  std::uint64_t seed = 0;
};

Graph gen_complete(std::size_t n);

// G(n, p): each pair independently with probability p (geometric skipping).
Graph gen_er(std::size_t n, double p, std::uint64_t seed);

// Preferential attachment from m isolated seed nodes; |E| = m(n-m).
Graph gen_ba(std::size_t n, std::size_t m, std::uint64_t seed);

// Ring lattice with normalize_ring_degree(k) neighbors, then each lattice
// edge rewired with probability p to a fresh non-duplicate target;
// |E| = n * k_even / 2 for every p.
Graph gen_ws(std::size_t n, std::size_t k, double p, std::uint64_t seed);

// Largest even value <= k.
constexpr std::size_t normalize_ring_degree(std::size_t k) noexcept { return k - (k % 2); }

// Validates `spec` and dispatches to the family generator.
Graph generate(const GeneratorSpec& spec);

// Picks family parameters whose expected density is close to `density`:
// er p = d; ba m = round(d n / 2) (>= 1); ws k = nearest even of d (n-1)
// (>= 2) with the default rewiring probability. Throws InputError when the
// density is out of (0, 1] or unreachable for the family.
GeneratorSpec params_for_density(Family family, std::size_t n, double density,
                                 std::uint64_t seed = 0);

// Expected density of a graph drawn from `spec`.
double expected_density(const GeneratorSpec& spec);

}  // namespace groupobs
