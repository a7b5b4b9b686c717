#include <CLI11.hpp>

#include <iostream>

#include "commands.hpp"
#include "groupobs/errors.hpp"
#include "groupobs/version.hpp"
#include "io.hpp"

namespace {

using namespace groupobs::cli;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInput = 3;
constexpr int kExitResource = 4;

void add_scope(CLI::App* cmd, ScopeFlags& s) {
  cmd->add_option("--target", s.target, "Observed element: edge or node")
      ->check(CLI::IsMember({"edge", "node"}))
      ->capture_default_str();
  cmd->add_option("--level", s.level, "global (whole graph) or local (per-node average)")
      ->check(CLI::IsMember({"global", "local"}))
      ->capture_default_str();
  cmd->add_option("--hops", s.hops, "Observation radius k in hops (>= 1)")
      ->check(CLI::Range(1u, 1'000'000u))
      ->capture_default_str();
}

void add_seed(CLI::App* cmd, std::uint64_t& seed) {
  cmd->add_option("--seed", seed, "Random seed (default from OBS_SEED, else 1)")
      ->envname("OBS_SEED");
}

void add_workers(CLI::App* cmd, unsigned& workers) {
  cmd->add_option("--workers", workers, "Worker threads; results do not depend on it")
      ->check(CLI::Range(1u, 1024u))
      ->capture_default_str();
}

void add_output(CLI::App* cmd, OutputFlags& f, const char* default_format) {
  cmd->add_option("--out", f.out, "Output path, '-' for stdout")->capture_default_str();
  cmd->add_option("--format", f.format, std::string("csv or json (default ") + default_format + ")")
      ->check(CLI::IsMember({"csv", "json"}));
}

void add_trials(CLI::App* cmd, std::size_t& trials) {
  cmd->add_option("--trials", trials, "Monte-Carlo trials per estimate")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

int fail(int code, std::string_view message) {
  std::cerr << "groupobs: error: " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Group observability of contact graphs under compromised nodes"};
  app.set_version_flag("--version", std::string(groupobs::kVersion));
  app.require_subcommand(1);

  GenerateOptions gen;
  auto* generate = app.add_subcommand("generate", "Generate a random graph as an edge list");
  generate->add_option("--family", gen.family, "complete, er, ba or ws")
      ->required()
      ->check(CLI::IsMember({"complete", "er", "ba", "ws"}));
  generate->add_option("--n", gen.n, "Number of nodes")->required();
  generate->add_option("--density", gen.density, "Target edge density in (0, 1]");
  generate->add_option("--p", gen.p, "er: edge probability; ws: rewiring probability");
  generate->add_option("--m", gen.m, "ba: edges attached per new node");
  generate->add_option("--k", gen.k, "ws: ring degree (rounded down to even)");
  add_seed(generate, gen.seed);
  generate->add_option("--out", gen.out, "Edge-list path; parameters go to <out>.json")
      ->required();

  ObserveOptions obs;
  auto* observe = app.add_subcommand("observe", "Estimate one metric at one compromised count");
  observe->add_option("--graph", obs.graph, "Edge-list file")->required();
  add_scope(observe, obs.scope);
  auto* count = observe->add_option_group("compromised", "Exactly one of:");
  count->add_option("--nc", obs.nc, "Number of compromised nodes");
  count->add_option("--fraction", obs.fraction, "Compromised fraction, rounded to a node count")
      ->check(CLI::Range(0.0, 1.0));
  count->require_option(1);
  add_trials(observe, obs.trials);
  observe->add_flag("--enumerate", obs.enumerate,
                    "Exact expectation by enumerating every compromised set (small graphs)");
  add_seed(observe, obs.seed);
  add_workers(observe, obs.workers);
  add_output(observe, obs.output, "json");

  CurveOptionsCli cur;
  auto* curve = app.add_subcommand("curve", "Observability curve and its AUOC");
  curve->add_option("--graph", cur.graph, "Edge-list file");
  curve->add_flag("--selftest-linear", cur.selftest_linear,
                  "Emit the identity curve instead of reading a graph (AUOC 0.5)");
  add_scope(curve, cur.scope);
  curve->add_option("--grid-points", cur.grid_points, "Points on the compromised-fraction grid")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100'000}))
      ->capture_default_str();
  add_trials(curve, cur.trials);
  add_seed(curve, cur.seed);
  add_workers(curve, cur.workers);
  add_output(curve, cur.output, "csv");

  SweepOptionsCli swp;
  auto* sweep = app.add_subcommand("sweep", "Metric and AUOC over growing observation windows");
  sweep->add_option("--events", swp.events, "Event CSV: src,dst,timestamp")->required();
  sweep->add_option("--windows", swp.windows,
                    "Ascending window lengths, e.g. 1d,7d,14d,28d (units s, m, h, d, w)")
      ->required()
      ->delimiter(',');
  add_scope(sweep, swp.scope);
  sweep->add_option("--fraction", swp.fraction, "Compromised fraction")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_trials(sweep, swp.trials);
  sweep->add_option("--grid-points", swp.grid_points, "Points on each window's AUOC grid")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100'000}))
      ->capture_default_str();
  add_seed(sweep, swp.seed);
  add_workers(sweep, swp.workers);
  add_output(sweep, swp.output, "csv");

  ColocateOptions col;
  auto* colocate = app.add_subcommand(
      "colocate", "Metric per (hour, cell) co-location graph built from sightings");
  colocate->add_option("--sightings", col.sightings, "Sighting CSV: a,b,timestamp,cell")
      ->required();
  add_scope(colocate, col.scope);
  colocate->add_option("--fraction", col.fraction, "Compromised fraction per bucket")
      ->check(CLI::Range(0.0, 1.0))
      ->capture_default_str();
  add_trials(colocate, col.trials);
  add_seed(colocate, col.seed);
  add_workers(colocate, col.workers);
  add_output(colocate, col.output, "csv");

  CityOptions cty;
  auto* city = app.add_subcommand("city", "Local node-observability of a city");
  auto* blocks_opt =
      city->add_option("--blocks", cty.blocks, "Census file: persons per 1 km^2 block, one per line");
  auto* pop_opt = city->add_option("--population", cty.population, "City population")
                      ->check(CLI::PositiveNumber);
  auto* area_opt =
      city->add_option("--area", cty.area, "City area in km^2")->check(CLI::PositiveNumber);
  blocks_opt->excludes(pop_opt)->excludes(area_opt);
  auto* x_opt = city->add_option("--fraction", cty.fraction, "Compromised fraction")
                    ->check(CLI::Range(0.0, 1.0));
  auto* grid_opt = city->add_option("--grid", cty.grid, "Ascending fractions, e.g. 0,0.01,0.1,1")
                       ->delimiter(',');
  auto* gp_opt = city->add_option("--grid-points", cty.grid_points, "Evenly spaced grid on [0, 1]")
                     ->check(CLI::Range(std::size_t{2}, std::size_t{100'000}));
  x_opt->excludes(grid_opt)->excludes(gp_opt);
  grid_opt->excludes(gp_opt);
  city->add_option("--samples", cty.samples, "Sampled blocks for the exponential model")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  city->add_option("--slope", cty.fit.slope, "Slope of the density fit")->capture_default_str();
  city->add_option("--intercept", cty.fit.intercept, "Intercept of the density fit")
      ->capture_default_str();
  add_seed(city, cty.seed);
  add_workers(city, cty.workers);
  add_output(city, cty.output, "json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kExitUsage, e.what());
  }

  try {
    if (*generate) run_generate(gen);
    else if (*observe) run_observe(obs);
    else if (*curve) run_curve(cur);
    else if (*sweep) run_sweep(swp);
    else if (*colocate) run_colocate(col);
    else if (*city) run_city(cty);
  } catch (const UsageError& e) {
    return fail(kExitUsage, e.what());
  } catch (const groupobs::ResourceError& e) {
    return fail(kExitResource, e.what());
  } catch (const groupobs::DomainError& e) {
    return fail(kExitInput, e.what());
  } catch (const groupobs::InputError& e) {
    return fail(kExitInput, e.what());
  } catch (const std::exception& e) {
    return fail(kExitInternal, e.what());
  }
  return kExitOk;
}
