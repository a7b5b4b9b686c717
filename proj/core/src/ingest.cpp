#include "groupobs/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>

#include "groupobs/errors.hpp"

namespace groupobs {
namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    out.push_back(trim(line.substr(pos, comma == std::string_view::npos ? comma : comma - pos)));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::optional<std::int64_t> parse_seconds(std::string_view text) {
  std::int64_t value = 0;
  const auto* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), last, value);
  if (ec != std::errc{} || ptr != last || text.empty()) return std::nullopt;
  return value;
}

// Shared line loop for both CSV record kinds. `fields_expected` includes the
// timestamp at index 2.
template <typename Build>
ParseReport read_csv(std::istream& in, std::size_t fields_expected, Build&& build) {
  ParseReport report;
  std::string line;
  std::size_t line_no = 0;
  bool first_data_line = true;
  auto reject = [&](const std::string& why) {
    ++report.rejected;
    report.diagnostics.push_back("line " + std::to_string(line_no) + ": " + why);
  };

  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto fields = split_fields(text);
    const bool was_first = first_data_line;
    first_data_line = false;

    if (fields.size() != fields_expected) {
      reject("expected " + std::to_string(fields_expected) + " comma-separated fields, found " +
             std::to_string(fields.size()));
      continue;
    }
    const auto ts = parse_seconds(fields[2]);
    if (!ts) {
      if (was_first) continue;  // header row
      reject("timestamp '" + std::string(fields[2]) + "' is not an integer");
      continue;
    }
    if (*ts < 0) {
      reject("negative timestamp");
      continue;
    }
    if (fields[0].empty() || fields[1].empty()) {
      reject("empty id");
      continue;
    }
    if (fields[0] == fields[1]) {
      reject("self-contact '" + std::string(fields[0]) + "'");
      continue;
    }
    build(fields, *ts);
    ++report.accepted;
  }
  return report;
}

std::uint64_t pair_key(NodeId a, NodeId b) {
  const Edge e = make_edge(a, b);
  return (static_cast<std::uint64_t>(e.u) << 32) | e.v;
}

}  // namespace

ParseReport for_each_event(std::istream& in, const std::function<void(EventRecord&&)>& sink) {
  return read_csv(in, 3, [&](const std::vector<std::string_view>& f, std::int64_t ts) {
    sink(EventRecord{std::string(f[0]), std::string(f[1]), ts});
  });
}

Parsed<EventRecord> parse_events(std::istream& in) {
  Parsed<EventRecord> out;
  out.report = for_each_event(in, [&](EventRecord&& r) { out.records.push_back(std::move(r)); });
  return out;
}

ParseReport for_each_sighting(std::istream& in,
                              const std::function<void(SightingRecord&&)>& sink) {
  return read_csv(in, 4, [&](const std::vector<std::string_view>& f, std::int64_t ts) {
    sink(SightingRecord{std::string(f[0]), std::string(f[1]), ts, std::string(f[3])});
  });
}

Parsed<SightingRecord> parse_sightings(std::istream& in) {
  Parsed<SightingRecord> out;
  out.report =
      for_each_sighting(in, [&](SightingRecord&& r) { out.records.push_back(std::move(r)); });
  return out;
}

NodeId IdMap::intern(std::string_view external) {
  if (auto it = ids_.find(external); it != ids_.end()) return it->second;
  if (externals_.size() >= static_cast<std::size_t>(kUnreached)) {
    throw ResourceError("id map exceeds the 32-bit node id range");
  }
  const auto id = static_cast<NodeId>(externals_.size());
  externals_.emplace_back(external);
  ids_.emplace(externals_.back(), id);
  return id;
}

std::optional<NodeId> IdMap::find(std::string_view external) const {
  if (auto it = ids_.find(external); it != ids_.end()) return it->second;
  return std::nullopt;
}

IdMap IdMap::from_events(std::span<const EventRecord> records) {
  IdMap ids;
  for (const auto& r : records) {
    ids.intern(r.src);
    ids.intern(r.dst);
  }
  return ids;
}

Graph window_graph(std::span<const EventRecord> records, std::int64_t t0, std::int64_t duration,
                   const IdMap& ids) {
  if (duration <= 0) throw InputError("window duration must be positive");
  std::vector<Edge> edges;
  for (const auto& r : records) {
    const auto a = ids.find(r.src);
    const auto b = ids.find(r.dst);
    if (!a || !b) throw InputError("record references an id missing from the id map");
    if (r.timestamp < t0) continue;
    // Unsigned difference avoids overflow of t0 + duration.
    const auto offset = static_cast<std::uint64_t>(r.timestamp) - static_cast<std::uint64_t>(t0);
    if (offset >= static_cast<std::uint64_t>(duration)) continue;
    edges.push_back(make_edge(*a, *b));
  }
  return Graph::from_edges(ids.size(), edges);
}

void EdgeTimeline::add(std::string_view a, std::string_view b, std::int64_t timestamp) {
  const NodeId u = ids_.intern(a);
  const NodeId v = ids_.intern(b);
  if (u == v) throw InputError("self-contact '" + std::string(a) + "'");
  auto [it, inserted] = first_contact_.try_emplace(pair_key(u, v), timestamp);
  if (!inserted) it->second = std::min(it->second, timestamp);
  start_ = start_ ? std::min(*start_, timestamp) : timestamp;
}

EdgeTimeline EdgeTimeline::from_records(std::span<const EventRecord> records) {
  EdgeTimeline timeline;
  for (const auto& r : records) timeline.add(r.src, r.dst, r.timestamp);
  return timeline;
}

EdgeTimeline EdgeTimeline::from_stream(std::istream& in, ParseReport* report) {
  EdgeTimeline timeline;
  auto r = for_each_event(in, [&](EventRecord&& e) { timeline.add(e.src, e.dst, e.timestamp); });
  if (report) *report = std::move(r);
  return timeline;
}

Graph EdgeTimeline::window(std::int64_t duration) const {
  if (duration <= 0) throw InputError("window duration must be positive");
  std::vector<Edge> edges;
  if (start_) {
    for (const auto& [key, first] : first_contact_) {
      const auto offset = static_cast<std::uint64_t>(first) - static_cast<std::uint64_t>(*start_);
      if (offset < static_cast<std::uint64_t>(duration)) {
        edges.push_back(Edge{static_cast<NodeId>(key >> 32), static_cast<NodeId>(key)});
      }
    }
  }
  return Graph::from_edges(ids_.size(), edges);
}

std::vector<SweepRow> temporal_sweep(const EdgeTimeline& timeline,
                                     std::span<const std::int64_t> durations,
                                     const ObservationScope& scope, double fraction,
                                     const SweepOptions& options) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) {
    throw InputError("compromised fraction must lie in [0, 1]");
  }
  for (std::size_t i = 0; i < durations.size(); ++i) {
    if (durations[i] <= 0) throw InputError("window durations must be positive");
    if (i > 0 && durations[i] <= durations[i - 1]) {
      throw InputError("window durations must be strictly ascending");
    }
  }
  const std::size_t n = timeline.node_count();
  if (n == 0) throw InputError("no events to sweep");
  const auto nc = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(n)));
  const auto grid = default_grid(n, options.grid_points, scope.level());

  std::vector<SweepRow> rows;
  rows.reserve(durations.size());
  for (const std::int64_t d : durations) {
    const Graph g = timeline.window(d);
    SweepRow row;
    row.duration = d;
    row.estimate = mc_estimate(g, scope, nc, options.trials, options.seed, options.workers);
    const CurveOptions copts{options.trials, options.seed, options.workers};
    row.auoc = auoc(build_curve(g, scope, grid, copts));
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> temporal_sweep(std::span<const EventRecord> records,
                                     std::span<const std::int64_t> durations,
                                     const ObservationScope& scope, double fraction,
                                     const SweepOptions& options) {
  return temporal_sweep(EdgeTimeline::from_records(records), durations, scope, fraction, options);
}

void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows,
                     std::span<const std::string> metadata) {
  for (const auto& line : metadata) out << "# " << line << '\n';
  out << "duration_seconds,metric_mean,metric_stderr,auoc\n";
  for (const auto& r : rows) {
    out << r.duration << ',' << format_sig6(r.estimate.mean) << ','
        << format_sig6(r.estimate.standard_error) << ',' << format_sig6(r.auoc) << '\n';
  }
}

}  // namespace groupobs
