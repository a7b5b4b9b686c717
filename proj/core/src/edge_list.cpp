#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>

#include "groupobs/errors.hpp"
#include "groupobs/graph.hpp"

namespace groupobs {
namespace {

bool parse_id(std::string_view token, std::uint64_t& out) {
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::vector<Edge> edges;
  std::size_t declared_nodes = 0;
  bool has_declared = false;
  std::uint64_t max_id = 0;
  bool any_edge = false;

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a)) continue;
    if (a.front() == '#') {
      std::istringstream comment(line.substr(line.find('#') + 1));
      std::string key;
      std::uint64_t value = 0;
      if (comment >> key >> value && key == "nodes") {
        declared_nodes = value;
        has_declared = true;
      }
      continue;
    }
    std::uint64_t u = 0, v = 0;
    if (!(fields >> b) || (fields >> extra) || !parse_id(a, u) || !parse_id(b, v)) {
      throw InputError("edge list line " + std::to_string(line_no) +
                       ": expected two non-negative integer ids");
    }
    if (u > kUnreached - 1 || v > kUnreached - 1) {
      throw InputError("edge list line " + std::to_string(line_no) + ": id out of range");
    }
    if (u == v) {
      throw InputError("edge list line " + std::to_string(line_no) + ": self-loop on node " + a);
    }
    edges.push_back(Edge{static_cast<NodeId>(u), static_cast<NodeId>(v)});
    max_id = std::max({max_id, u, v});
    any_edge = true;
  }
  const std::size_t inferred = any_edge ? static_cast<std::size_t>(max_id) + 1 : 0;
  if (has_declared && declared_nodes < inferred) {
    throw InputError("edge list declares " + std::to_string(declared_nodes) +
                     " nodes but references id " + std::to_string(max_id));
  }
  return Graph::from_edges(has_declared ? declared_nodes : inferred, edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "# nodes " << g.node_count() << '\n';
  out << "# edges " << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace groupobs
