#include <set>

#include "groupobs/ingest.hpp"

namespace groupobs {
namespace {

std::int64_t hour_bucket(std::int64_t timestamp) {
  constexpr std::int64_t kHour = 3600;
  std::int64_t q = timestamp / kHour;
  if (timestamp % kHour != 0 && timestamp < 0) --q;
  return q;
}

struct Bucket {
  IdMap ids;
  std::set<Edge> edges;
};

}  // namespace

std::map<CoLocationKey, CoLocationGraph> colocation_graphs(
    std::span<const SightingRecord> sightings) {
  std::map<CoLocationKey, Bucket> buckets;
  for (const auto& s : sightings) {
    if (s.a == s.b) continue;
    Bucket& bucket = buckets[CoLocationKey{hour_bucket(s.timestamp), s.cell}];
    const NodeId a = bucket.ids.intern(s.a);
    const NodeId b = bucket.ids.intern(s.b);
    bucket.edges.insert(make_edge(a, b));
  }

  std::map<CoLocationKey, CoLocationGraph> out;
  for (auto& [key, bucket] : buckets) {
    CoLocationGraph cg;
    cg.hour = key.first;
    cg.cell = key.second;
    cg.devices.reserve(bucket.ids.size());
    for (NodeId i = 0; i < bucket.ids.size(); ++i) cg.devices.push_back(bucket.ids.external(i));
    const std::vector<Edge> edges(bucket.edges.begin(), bucket.edges.end());
    cg.graph = Graph::from_edges(bucket.ids.size(), edges);
    out.emplace(key, std::move(cg));
  }
  return out;
}

}  // namespace groupobs
