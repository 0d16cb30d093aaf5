#pragma once

// Command-line front end: argument parsing and the subcommand dispatcher.
// run() never throws; failures become exit codes and a message on err.

#include "sdalg/exactnum.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sdalg::cli {

inline constexpr std::uint64_t default_seed = 20240611;

enum ExitCode : int { pass = 0, check_failed = 1, input_error = 2, incomplete = 3 };

struct RunConfig {
  std::string command;
  std::vector<std::string> inputs;  // positional arguments after the subcommand
  std::optional<RingDescriptor> ring;
  std::vector<std::string> axioms;  // empty means every applicable axiom
  std::optional<std::string> output;
  std::uint64_t seed = default_seed;
  bool json = false;  // machine-readable report on stdout

  std::size_t samples = 0;  // check-bialg: random element triples
  std::optional<std::string> barstar;
  bool dump = false;
  bool force = false;
  int type = 0;
  std::optional<std::string> a;
  bool emit_candidates = false;
  std::size_t n = 0;
  std::string vec_a, vec_b;
  std::string matrix;
};

struct RunResult {
  int exit_code = pass;
  std::string out;
  std::string err;
};

RunResult run(const RunConfig& config);

/// Parses argv (argv[0] is the program name). Help requests and usage errors
/// are returned as a finished RunResult instead of a config.
struct Parsed {
  std::optional<RunConfig> config;
  RunResult early;
};
Parsed parse_args(int argc, const char* const* argv);

}  // namespace sdalg::cli
