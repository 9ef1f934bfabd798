#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace synreg {

struct CliConfig {
  enum class Command { Check, Positions, Forbidden, Fundamental, Deadlocks, Normalize, Render };
  enum class Format { Text, Json };

  Command command = Command::Check;
  std::string input = "-";  // "-" reads standard input
  Format format = Format::Text;
  std::optional<std::uint64_t> max_iterations;
  std::optional<std::string> region_file;
  std::optional<std::string> output_file;
  std::optional<std::vector<std::int64_t>> grid;
};

// Exit codes: 0 success, 1 analysis refused, 2 usage or input error.
// Reports go to `out` (or --output), diagnostics to `err`; nothing is written
// to `out` when the run fails.
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace synreg
