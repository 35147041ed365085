#pragma once

#include <cstdint>
#include <string>

#include "ppring/ffq.hpp"
#include "ppring/grp.hpp"

namespace ppring {

struct RunConfig {
  std::string command;
  std::string group = "C2";
  int p = 2;
  std::string format = "json";  ///< json | csv | pretty
  std::size_t max_order = kDefaultOrderCap;
  int oracle_n_cap = kDefaultOracleConductorCap;
  std::size_t oracle_dim_cap = kDefaultOracleDimensionCap;
  std::size_t samples = 50;
  std::uint64_t seed = 1;
};

struct RunResult {
  int exit_code = 0;  ///< 0 all checks pass, 1 verification failure, 2 usage or configuration error
  std::string report;
};

/// A JSON object {"name": ...} or {"degree": d, "generators": [[cycle, ...], ...]},
/// or a bare name. Throws ParseError, UnknownName, OrderCapExceeded.
GroupPtr parse_group_spec(const std::string& text, std::size_t cap = kDefaultOrderCap);

/// Commands: pairs, lattice, burnside, species-table, idempotents, verify, oracle-check.
/// Library errors are reported with exit code 2 and the message as the report.
RunResult run(const RunConfig& config);

}  // namespace ppring
