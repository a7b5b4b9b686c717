#pragma once

#include <cstdint>
#include <string>

#include "groupobs/errors.hpp"
#include "groupobs/graph.hpp"

namespace groupobs::detail {

inline void require_subset(const Graph& g, const NodeSet& nodes) {
  if (!nodes.empty() && nodes.members().back() >= g.node_count()) {
    throw InputError("node id " + std::to_string(nodes.members().back()) +
                     " is not in a graph with " + std::to_string(g.node_count()) + " nodes");
  }
}

}  // namespace groupobs::detail
