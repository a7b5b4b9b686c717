#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "groupobs/curves.hpp"
#include "groupobs/graph.hpp"
#include "groupobs/montecarlo.hpp"
#include "groupobs/scope.hpp"

namespace groupobs {

// One call or text between two parties; direction is not retained when
// building graphs.
struct EventRecord {
  std::string src;
  std::string dst;
  std::int64_t timestamp = 0;  // seconds since epoch

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

// Two devices sensing each other inside a grid cell.
struct SightingRecord {
  std::string a;
  std::string b;
  std::int64_t timestamp = 0;
  std::string cell;

  friend bool operator==(const SightingRecord&, const SightingRecord&) = default;
};

struct ParseReport {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::vector<std::string> diagnostics;  // "line N: reason"
};

template <typename Record>
struct Parsed {
  std::vector<Record> records;
  ParseReport report;
};

// Streams `src,dst,timestamp` lines. A first line whose timestamp field is
// not an integer is treated as a header. Blank lines and '#' comments are
// skipped; malformed lines, self-contacts and negative timestamps are
// rejected and reported, never fatal.
ParseReport for_each_event(std::istream& in, const std::function<void(EventRecord&&)>& sink);
Parsed<EventRecord> parse_events(std::istream& in);

// Same conventions for `a,b,timestamp,cell` lines.
ParseReport for_each_sighting(std::istream& in,
                              const std::function<void(SightingRecord&&)>& sink);
Parsed<SightingRecord> parse_sightings(std::istream& in);

// Bijection between external ids and dense node ids 0..size-1, assigned in
// first-seen order.
class IdMap {
 public:
  NodeId intern(std::string_view external);
  [[nodiscard]] std::optional<NodeId> find(std::string_view external) const;
  [[nodiscard]] const std::string& external(NodeId id) const { return externals_.at(id); }
  [[nodiscard]] std::size_t size() const noexcept { return externals_.size(); }

  static IdMap from_events(std::span<const EventRecord> records);

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_map<std::string, NodeId, Hash, std::equal_to<>> ids_;
  std::vector<std::string> externals_;
};

inline constexpr std::int64_t kUnboundedWindow = std::numeric_limits<std::int64_t>::max();

// Graph over every id in `ids` with an edge {u, v} iff some record between
// them has t0 <= timestamp < t0 + duration. Throws InputError when duration
// <= 0 or a record references an id missing from `ids`.
Graph window_graph(std::span<const EventRecord> records, std::int64_t t0, std::int64_t duration,
                   const IdMap& ids);

// Compressed event history: for every distinct contact pair, the earliest
// timestamp. Memory grows with distinct ids and pairs, not record count.
// Windows are anchored at the earliest timestamp in the data.
class EdgeTimeline {
 public:
  void add(std::string_view a, std::string_view b, std::int64_t timestamp);

  static EdgeTimeline from_records(std::span<const EventRecord> records);
  // Single pass over an event CSV stream.
  static EdgeTimeline from_stream(std::istream& in, ParseReport* report = nullptr);

  [[nodiscard]] const IdMap& ids() const noexcept { return ids_; }
  [[nodiscard]] std::size_t node_count() const noexcept { return ids_.size(); }
  [[nodiscard]] std::size_t pair_count() const noexcept { return first_contact_.size(); }
  [[nodiscard]] std::optional<std::int64_t> start() const noexcept { return start_; }

  // Graph of pairs first seen before start + duration.
  [[nodiscard]] Graph window(std::int64_t duration) const;

 private:
  IdMap ids_;
  std::unordered_map<std::uint64_t, std::int64_t> first_contact_;
  std::optional<std::int64_t> start_;
};

struct SweepRow {
  std::int64_t duration = 0;
  McEstimate estimate;
  double auoc = 0.0;
};

struct SweepOptions {
  std::size_t trials = kDefaultTrials;
  std::size_t grid_points = kDefaultGridPoints;
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

// For each window length: build the window graph on the fixed id universe,
// estimate the metric at nc = round(fraction * n), and compute the AUOC of
// the metric's curve on the default grid. Durations must be positive and
// ascending.
std::vector<SweepRow> temporal_sweep(const EdgeTimeline& timeline,
                                     std::span<const std::int64_t> durations,
                                     const ObservationScope& scope, double fraction,
                                     const SweepOptions& options);
std::vector<SweepRow> temporal_sweep(std::span<const EventRecord> records,
                                     std::span<const std::int64_t> durations,
                                     const ObservationScope& scope, double fraction,
                                     const SweepOptions& options);

// "duration_seconds,metric_mean,metric_stderr,auoc" rows, 6 significant digits.
void write_sweep_csv(std::ostream& out, std::span<const SweepRow> rows,
                     std::span<const std::string> metadata = {});

// Co-location graph of one (hour bucket, cell) pair. `devices[i]` is the
// external id of node i.
struct CoLocationGraph {
  std::int64_t hour = 0;  // floor(timestamp / 3600)
  std::string cell;
  std::vector<std::string> devices;
  Graph graph;
};

using CoLocationKey = std::pair<std::int64_t, std::string>;

// Partitions sightings by (epoch hour, cell) and links co-sighted devices.
std::map<CoLocationKey, CoLocationGraph> colocation_graphs(
    std::span<const SightingRecord> sightings);

}  // namespace groupobs
