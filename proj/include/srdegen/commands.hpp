#ifndef SRDEGEN_COMMANDS_HPP
#define SRDEGEN_COMMANDS_HPP

#include "srdegen/parse.hpp"
#include "srdegen/report.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace srdegen {

/// Command-line overrides of the job file parameters.
struct CommandOverrides {
  std::optional<std::size_t> workers;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> budget;
  std::optional<OrderFamily> family;
  std::vector<std::uint32_t> primes;
  bool squarefree_only = false;
  PairStrategy strategy = PairStrategy::normal;
};

/// analyze, scan-orders, complex, lift-search, point-count.
const std::vector<std::string>& command_names();

/// Runs one subcommand on a parsed job and returns its report document.
Json run_command(std::string_view command, const JobSpec& job, const CommandOverrides& overrides = {});

}  // namespace srdegen

#endif
