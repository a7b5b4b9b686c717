#include "groupobs/scope.hpp"

#include "groupobs/errors.hpp"

namespace groupobs {

ObservationScope::ObservationScope(Target target, Level level, std::uint32_t hops)
    : target_(target), level_(level), hops_(hops) {
  if (hops < 1) throw InputError("hop count must be at least 1");
}

std::string ObservationScope::describe() const {
  return std::string(to_string(level_)) + "-" + std::string(to_string(target_)) +
         " k=" + std::to_string(hops_);
}

std::string_view to_string(Target t) noexcept {
  return t == Target::edge ? "edge" : "node";
}

std::string_view to_string(Level l) noexcept {
  return l == Level::global ? "global" : "local";
}

Target parse_target(std::string_view text) {
  if (text == "edge") return Target::edge;
  if (text == "node") return Target::node;
  throw InputError("unknown target '" + std::string(text) + "' (expected edge|node)");
}

Level parse_level(std::string_view text) {
  if (text == "global") return Level::global;
  if (text == "local") return Level::local;
  throw InputError("unknown level '" + std::string(text) + "' (expected global|local)");
}

}  // namespace groupobs
