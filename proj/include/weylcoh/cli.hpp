#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylcoh/derham.hpp"

namespace weylcoh {

enum class OutputFormat { Text, Tabular };

struct JobSpec {
  std::string command;
  std::size_t n = 1;
  std::vector<int> shifts;
  std::vector<std::string> relations;
  Window window;
  std::size_t margin = 3;
  std::optional<std::size_t> length;
  OutputFormat format = OutputFormat::Text;
  std::vector<UserBound> bounds;
  std::size_t threads = 1;
  bool timings = false;

  /// Parses n, shifts and relations; defaults F_0 to rank-many zero shifts.
  PresentedModule presentation() const;
  std::size_t resolution_length() const { return length.value_or(n + 1); }
};

/// Reads `key = value` lines (n, shift0, rel, window, margin, length, format,
/// bound, bound-source, command). `#` starts a comment line.
JobSpec parse_job(std::string_view text);

/// Runs one command and writes its report. Returns the exit code: 0 on
/// success, 1 on input errors, 2 on invariant violations or failed cases.
int run_job(const JobSpec& job, std::ostream& out, std::ostream& err);

/// Command-line entry point.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weylcoh
