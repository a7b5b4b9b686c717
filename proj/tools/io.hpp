#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "groupobs/graph.hpp"
#include "groupobs/ingest.hpp"

namespace groupobs::cli {

// Bad flag combinations that the option parser cannot express; exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Buffers everything and writes the destination only on commit(), so a
// failing run never leaves a truncated file behind. "-" is stdout.
class Output {
 public:
  explicit Output(std::string path) : path_(std::move(path)) {}
  std::ostream& stream() { return buffer_; }
  void commit();

 private:
  std::string path_;
  std::ostringstream buffer_;
};

std::ifstream open_input(const std::string& path);
Graph load_graph(const std::string& path);

// "90", "90s", "15m", "6h", "7d", "2w" -> seconds.
std::int64_t parse_duration(std::string_view text);

// Single diagnostic line on stderr.
void log_warning(std::string_view message);
void report_rejections(std::string_view source, const ParseReport& report);

std::vector<double> parse_grid(const std::vector<std::string>& items);
std::vector<double> even_grid(std::size_t points);

}  // namespace groupobs::cli
