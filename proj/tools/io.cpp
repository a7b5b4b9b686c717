#include "io.hpp"

#include <charconv>
#include <iostream>

#include "groupobs/errors.hpp"

namespace groupobs::cli {

void Output::commit() {
  if (path_.empty() || path_ == "-") {
    std::cout << buffer_.str() << std::flush;
    return;
  }
  std::ofstream out(path_, std::ios::binary | std::ios::trunc);
  if (!out) throw InputError("cannot open output file '" + path_ + "'");
  out << buffer_.str();
  if (!out.flush()) throw InputError("failed writing '" + path_ + "'");
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  try {
    return read_edge_list(in);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::int64_t parse_duration(std::string_view text) {
  std::int64_t value = 0;
  const auto* first = text.data();
  const auto* last = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first) {
    throw UsageError("invalid duration '" + std::string(text) + "'");
  }
  const std::string_view unit(ptr, static_cast<std::size_t>(last - ptr));
  std::int64_t scale = 0;
  if (unit.empty() || unit == "s") scale = 1;
  else if (unit == "m") scale = 60;
  else if (unit == "h") scale = 3600;
  else if (unit == "d") scale = 86'400;
  else if (unit == "w") scale = 7 * 86'400;
  else throw UsageError("unknown duration unit in '" + std::string(text) + "'");
  if (value <= 0) throw UsageError("duration must be positive: '" + std::string(text) + "'");
  return value * scale;
}

void log_warning(std::string_view message) {
  std::cerr << "groupobs: warning: " << message << '\n';
}

void report_rejections(std::string_view source, const ParseReport& report) {
  if (report.rejected == 0) return;
  std::string msg = std::string(source) + ": skipped " + std::to_string(report.rejected) +
                    " malformed line(s)";
  if (!report.diagnostics.empty()) msg += ", first at " + report.diagnostics.front();
  log_warning(msg);
}

std::vector<double> parse_grid(const std::vector<std::string>& items) {
  std::vector<double> grid;
  for (const auto& item : items) {
    try {
      std::size_t used = 0;
      const double x = std::stod(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      grid.push_back(x);
    } catch (const std::logic_error&) {
      throw UsageError("invalid grid value '" + item + "'");
    }
  }
  return grid;
}

std::vector<double> even_grid(std::size_t points) {
  if (points < 2) throw UsageError("--grid-points must be at least 2");
  std::vector<double> grid(points);
  for (std::size_t i = 0; i < points; ++i) {
    grid[i] = static_cast<double>(i) / static_cast<double>(points - 1);
  }
  return grid;
}

}  // namespace groupobs::cli
