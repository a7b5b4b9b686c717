#include "commands.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "groupobs/errors.hpp"
#include "groupobs/exact.hpp"
#include "groupobs/generators.hpp"
#include "groupobs/ingest.hpp"
#include "groupobs/montecarlo.hpp"
#include "groupobs/version.hpp"
#include "io.hpp"

namespace groupobs::cli {

using nlohmann::json;

ObservationScope ScopeFlags::resolve() const {
  return ObservationScope(parse_target(target), parse_level(level), hops);
}

namespace {

json scope_json(const ObservationScope& s) {
  return {{"target", std::string(to_string(s.target()))},
          {"level", std::string(to_string(s.level()))},
          {"hops", s.hops()}};
}

json document(std::string_view command, json config) {
  return {{"version", kVersion}, {"command", std::string(command)}, {"config", std::move(config)}};
}

std::string metadata_line(std::string_view key, const std::string& value) {
  return std::string(key) + "=" + value;
}

bool wants_json(const OutputFlags& f, bool json_default) {
  if (f.format.empty()) return json_default;
  return f.format == "json";
}

void emit_json(const OutputFlags& f, const json& doc) {
  Output out(f.out);
  out.stream() << doc.dump(2) << '\n';
  out.commit();
}

std::size_t count_for_fraction(double fraction, std::size_t n) {
  return static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
}

// Closed form for 1-hop edge scopes; see uses_closed_form().
double closed_form(const ObservationScope& scope, std::size_t n, std::size_t nc) {
  return scope.level() == Level::global ? exact_global_edge_obs(n, nc) : exact_local_edge_obs(n, nc);
}

struct Estimate {
  McEstimate value;
  std::string method;
};

Estimate estimate_metric(const Graph& g, const ObservationScope& scope, std::size_t nc,
                         std::size_t trials, std::uint64_t seed, unsigned workers) {
  validate_metric_domain(g, scope, nc);
  if (uses_closed_form(scope)) {
    return {{closed_form(scope, g.node_count(), nc), 0.0, 0}, "closed-form"};
  }
  return {mc_estimate(g, scope, nc, trials, seed, workers), "monte-carlo"};
}

}  // namespace

void run_generate(const GenerateOptions& o) {
  const Family family = parse_family(o.family);
  GeneratorSpec spec;
  if (o.density) {
    if (o.m || o.k) throw UsageError("--density cannot be combined with --m or --k");
    if (o.p && family != Family::ws) {
      throw UsageError("--p with --density only sets the ws rewiring probability");
    }
    spec = params_for_density(family, o.n, *o.density, o.seed);
    if (o.p) spec.p = *o.p;
  } else {
    spec.family = family;
    spec.n = o.n;
    spec.seed = o.seed;
    switch (family) {
      case Family::complete:
        break;
      case Family::er:
        if (!o.p) throw UsageError("er needs --density or --p");
        spec.p = *o.p;
        break;
      case Family::ba:
        if (!o.m) throw UsageError("ba needs --density or --m");
        spec.m = *o.m;
        break;
      case Family::ws:
        if (!o.k) throw UsageError("ws needs --density or --k");
        spec.k = *o.k;
        spec.p = o.p.value_or(kDefaultRewiring);
        break;
    }
  }

  const Graph g = generate(spec);

  json params = {{"family", std::string(to_string(family))}, {"n", spec.n}, {"seed", spec.seed}};
  switch (family) {
    case Family::complete:
      break;
    case Family::er:
      params["p"] = spec.p;
      break;
    case Family::ba:
      params["m"] = spec.m;
      break;
    case Family::ws:
      params["k"] = normalize_ring_degree(spec.k);
      params["p"] = spec.p;
      break;
  }
  if (o.density) params["requested_density"] = *o.density;

  json sidecar = document("generate", params);
  sidecar["nodes"] = g.node_count();
  sidecar["edges"] = g.edge_count();
  sidecar["realized_density"] = g.node_count() >= 2 ? json(density(g)) : json(nullptr);
  sidecar["expected_density"] = g.node_count() >= 2 ? json(expected_density(spec)) : json(nullptr);

  Output edges(o.out);
  write_edge_list(edges.stream(), g);
  Output side(o.out + ".json");
  side.stream() << sidecar.dump(2) << '\n';
  edges.commit();
  side.commit();
}

void run_observe(const ObserveOptions& o) {
  const ObservationScope scope = o.scope.resolve();
  const Graph g = load_graph(o.graph);
  const std::size_t nc = o.nc ? *o.nc : count_for_fraction(*o.fraction, g.node_count());

  Estimate est;
  if (o.enumerate) {
    validate_metric_domain(g, scope, nc);
    est = {{brute_force_metric(g, scope, nc), 0.0, 0}, "enumeration"};
  } else {
    est = estimate_metric(g, scope, nc, o.trials, o.seed, o.workers);
  }

  json config = {{"graph", o.graph}, {"scope", scope_json(scope)}, {"nc", nc},
                 {"trials", o.trials}, {"seed", o.seed}};
  if (o.fraction) config["fraction"] = *o.fraction;

  if (wants_json(o.output, true)) {
    json doc = document("observe", config);
    doc["nodes"] = g.node_count();
    doc["edges"] = g.edge_count();
    doc["method"] = est.method;
    doc["value"] = est.value.mean;
    doc["mean"] = est.value.mean;
    doc["stderr"] = est.value.standard_error;
    doc["trials"] = est.value.trials;
    emit_json(o.output, doc);
    return;
  }
  Output out(o.output.out);
  auto& s = out.stream();
  s << "# " << metadata_line("version", kVersion) << '\n'
    << "# " << metadata_line("graph", o.graph) << '\n'
    << "# " << metadata_line("scope", scope.describe()) << '\n'
    << "# " << metadata_line("seed", std::to_string(o.seed)) << '\n'
    << "nc,method,value,stderr,trials\n"
    << nc << ',' << est.method << ',' << format_sig6(est.value.mean) << ','
    << format_sig6(est.value.standard_error) << ',' << est.value.trials << '\n';
  out.commit();
}

void run_curve(const CurveOptionsCli& o) {
  json config = {{"grid_points", o.grid_points}};
  ObservabilityCurve curve;
  std::string method;
  if (o.selftest_linear) {
    std::vector<CurvePoint> points;
    for (double x : even_grid(o.grid_points)) points.push_back({x, x, 0.0});
    curve = make_curve(std::move(points), "linear");
    method = "linear";
    config["selftest"] = "linear";
  } else {
    if (o.graph.empty()) throw UsageError("--graph is required unless --selftest-linear is set");
    const ObservationScope scope = o.scope.resolve();
    const Graph g = load_graph(o.graph);
    const auto grid = default_grid(g.node_count(), o.grid_points, scope.level());
    curve = build_curve(g, scope, grid, CurveOptions{o.trials, o.seed, o.workers}, o.graph);
    method = uses_closed_form(scope) ? "closed-form" : "monte-carlo";
    config["graph"] = o.graph;
    config["scope"] = scope_json(scope);
    config["trials"] = o.trials;
    config["seed"] = o.seed;
  }
  const double area = auoc(curve);
  const double area_se = auoc_standard_error(curve);

  if (wants_json(o.output, false)) {
    json doc = document("curve", config);
    doc["method"] = method;
    doc["curve"] = curve_to_json(curve);
    emit_json(o.output, doc);
    return;
  }
  std::vector<std::string> meta{metadata_line("version", kVersion), metadata_line("method", method),
                                metadata_line("grid_points", std::to_string(o.grid_points))};
  if (curve.scope) {
    meta.push_back(metadata_line("graph", o.graph));
    meta.push_back(metadata_line("scope", curve.scope->describe()));
    meta.push_back(metadata_line("trials", std::to_string(o.trials)));
    meta.push_back(metadata_line("seed", std::to_string(o.seed)));
  }
  meta.push_back(metadata_line("auoc", format_sig6(area)));
  meta.push_back(metadata_line("auoc_stderr", format_sig6(area_se)));
  Output out(o.output.out);
  write_curve_csv(out.stream(), curve, meta);
  out.commit();
}

void run_sweep(const SweepOptionsCli& o) {
  const ObservationScope scope = o.scope.resolve();
  std::vector<std::int64_t> durations;
  for (const auto& w : o.windows) durations.push_back(parse_duration(w));

  auto in = open_input(o.events);
  ParseReport report;
  const EdgeTimeline timeline = EdgeTimeline::from_stream(in, &report);
  report_rejections(o.events, report);
  if (timeline.node_count() == 0) throw InputError(o.events + ": no valid events");

  const SweepOptions opts{o.trials, o.grid_points, o.seed, o.workers};
  const auto rows = temporal_sweep(timeline, durations, scope, o.fraction, opts);

  json config = {{"events", o.events},           {"scope", scope_json(scope)},
                 {"fraction", o.fraction},       {"windows_seconds", durations},
                 {"trials", o.trials},           {"grid_points", o.grid_points},
                 {"seed", o.seed}};
  if (wants_json(o.output, false)) {
    json doc = document("sweep", config);
    doc["nodes"] = timeline.node_count();
    json out_rows = json::array();
    for (const auto& r : rows) {
      out_rows.push_back({{"duration_seconds", r.duration},
                          {"metric_mean", r.estimate.mean},
                          {"metric_stderr", r.estimate.standard_error},
                          {"auoc", r.auoc}});
    }
    doc["rows"] = std::move(out_rows);
    emit_json(o.output, doc);
    return;
  }
  const std::vector<std::string> meta{
      metadata_line("version", kVersion),
      metadata_line("events", o.events),
      metadata_line("scope", scope.describe()),
      metadata_line("fraction", format_sig6(o.fraction)),
      metadata_line("nodes", std::to_string(timeline.node_count())),
      metadata_line("trials", std::to_string(o.trials)),
      metadata_line("grid_points", std::to_string(o.grid_points)),
      metadata_line("seed", std::to_string(o.seed))};
  Output out(o.output.out);
  write_sweep_csv(out.stream(), rows, meta);
  out.commit();
}

void run_colocate(const ColocateOptions& o) {
  const ObservationScope scope = o.scope.resolve();
  auto in = open_input(o.sightings);
  const auto parsed = parse_sightings(in);
  report_rejections(o.sightings, parsed.report);
  const auto graphs = colocation_graphs(parsed.records);

  struct Row {
    const CoLocationGraph* bucket;
    Estimate est;
  };
  std::vector<Row> rows;
  std::uint64_t index = 0;
  for (const auto& [key, bucket] : graphs) {
    const std::size_t n = bucket.graph.node_count();
    std::size_t nc = count_for_fraction(o.fraction, n);
    if (scope.level() == Level::local && nc >= n) nc = n - 1;
    rows.push_back({&bucket, estimate_metric(bucket.graph, scope, nc, o.trials,
                                             mix_seed(o.seed, index++), o.workers)});
  }

  json config = {{"sightings", o.sightings}, {"scope", scope_json(scope)},
                 {"fraction", o.fraction},   {"trials", o.trials},
                 {"seed", o.seed}};
  if (wants_json(o.output, false)) {
    json doc = document("colocate", config);
    json out_rows = json::array();
    for (const auto& r : rows) {
      out_rows.push_back({{"hour", r.bucket->hour},
                          {"cell", r.bucket->cell},
                          {"nodes", r.bucket->graph.node_count()},
                          {"edges", r.bucket->graph.edge_count()},
                          {"method", r.est.method},
                          {"metric_mean", r.est.value.mean},
                          {"metric_stderr", r.est.value.standard_error}});
    }
    doc["rows"] = std::move(out_rows);
    emit_json(o.output, doc);
    return;
  }
  Output out(o.output.out);
  auto& s = out.stream();
  s << "# " << metadata_line("version", kVersion) << '\n'
    << "# " << metadata_line("sightings", o.sightings) << '\n'
    << "# " << metadata_line("scope", scope.describe()) << '\n'
    << "# " << metadata_line("fraction", format_sig6(o.fraction)) << '\n'
    << "# " << metadata_line("trials", std::to_string(o.trials)) << '\n'
    << "# " << metadata_line("seed", std::to_string(o.seed)) << '\n'
    << "hour,cell,nodes,edges,metric_mean,metric_stderr\n";
  for (const auto& r : rows) {
    s << r.bucket->hour << ',' << r.bucket->cell << ',' << r.bucket->graph.node_count() << ','
      << r.bucket->graph.edge_count() << ',' << format_sig6(r.est.value.mean) << ','
      << format_sig6(r.est.value.standard_error) << '\n';
  }
  out.commit();
}

void run_city(const CityOptions& o) {
  const bool census = !o.blocks.empty();
  if (census == (o.population || o.area)) {
    throw UsageError("give either --blocks or --population with --area");
  }
  if (!census && !(o.population && o.area)) {
    throw UsageError("--population and --area must be given together");
  }
  const int x_sources = int(o.fraction.has_value()) + int(!o.grid.empty()) +
                        int(o.grid_points.has_value());
  if (x_sources != 1) throw UsageError("give exactly one of --fraction, --grid, --grid-points");

  json config = {{"fit", {{"slope", o.fit.slope}, {"intercept", o.fit.intercept}}}};
  std::optional<CityBlocks> blocks;
  CityProfile profile;
  if (census) {
    auto in = open_input(o.blocks);
    blocks = read_blocks(in);
    config["blocks"] = o.blocks;
  } else {
    profile = {*o.population, *o.area};
    profile.validate();
    config["population"] = profile.population;
    config["area_km2"] = profile.area_km2;
    config["samples"] = o.samples;
    config["seed"] = o.seed;
  }
  const std::string method = census ? "census" : "exponential";

  if (o.fraction) {
    const double x = *o.fraction;
    const double value =
        census ? local_node_obs_city(*blocks, x, o.fit)
               : estimate_city_exponential(profile, x, o.samples, o.seed, o.workers, o.fit);
    if (wants_json(o.output, true)) {
      json doc = document("city", config);
      doc["x"] = x;
      doc["estimate"] = value;
      doc["method"] = method;
      emit_json(o.output, doc);
      return;
    }
    Output out(o.output.out);
    out.stream() << "# " << metadata_line("version", kVersion) << '\n'
                 << "# " << metadata_line("method", method) << '\n'
                 << "x,estimate\n"
                 << format_sig6(x) << ',' << format_sig6(value) << '\n';
    out.commit();
    return;
  }

  const std::vector<double> grid = o.grid.empty() ? even_grid(*o.grid_points) : parse_grid(o.grid);
  const ObservabilityCurve curve =
      census ? city_sweep(*blocks, grid, o.fit)
             : city_sweep(profile, grid, o.samples, o.seed, o.workers, o.fit);
  const double area = auoc(curve);
  if (wants_json(o.output, true)) {
    json doc = document("city", config);
    doc["method"] = method;
    doc["auoc"] = area;
    json points = json::array();
    for (const auto& p : curve.points) points.push_back({{"x", p.x}, {"estimate", p.value}});
    doc["points"] = std::move(points);
    emit_json(o.output, doc);
    return;
  }
  Output out(o.output.out);
  auto& s = out.stream();
  s << "# " << metadata_line("version", kVersion) << '\n'
    << "# " << metadata_line("method", method) << '\n'
    << "# " << metadata_line("auoc", format_sig6(area)) << '\n'
    << "x,estimate\n";
  for (const auto& p : curve.points) s << format_sig6(p.x) << ',' << format_sig6(p.value) << '\n';
  out.commit();
}

}  // namespace groupobs::cli
