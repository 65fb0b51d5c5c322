#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace spancat::cli {

/// Bad flags, unknown names or unreadable input; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string instance = "finab";  // finab | pinj | groupoid:<file>
  std::int64_t max_order = 8;
  std::size_t max_size = 4;
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  std::string out;  // empty: standard output
  std::string format = "json";
};

/// Suite names accepted by `suite`.
const std::vector<std::string>& suite_names();

/// Runs the command line `args` (without the program name). Returns 0 when
/// every property held, 1 on a property failure, 2 on configuration or
/// parse errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spancat::cli
