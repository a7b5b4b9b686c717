#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace groupobs {

enum class Target { edge, node };
enum class Level { global, local };

// Which observability metric to evaluate, and at how many hops.
class ObservationScope {
 public:
  // Throws InputError when hops < 1.
  ObservationScope(Target target, Level level, std::uint32_t hops);

  [[nodiscard]] Target target() const noexcept { return target_; }
  [[nodiscard]] Level level() const noexcept { return level_; }
  [[nodiscard]] std::uint32_t hops() const noexcept { return hops_; }
  [[nodiscard]] bool is_local() const noexcept { return level_ == Level::local; }

  // e.g. "global-edge k=2"
  [[nodiscard]] std::string describe() const;

  friend bool operator==(const ObservationScope&, const ObservationScope&) = default;

 private:
  Target target_;
  Level level_;
  std::uint32_t hops_;
};

std::string_view to_string(Target t) noexcept;
std::string_view to_string(Level l) noexcept;
Target parse_target(std::string_view text);
Level parse_level(std::string_view text);

}  // namespace groupobs
