// Command front end shared by the binary and the tests: a validated run
// configuration, one `run` entry point, and deterministic text/csv/json
// rendering.  Exit status 0 means every check in scope passed, 1 means a
// check failed or a numerical routine did not converge, 2 means the
// configuration was invalid.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "u1kepler/suites.hpp"

namespace u1kepler::cli {

enum class Command {
  spectrum,
  ktypes,
  verify,
  radial,
  oscillator,
  micz_check,
  geometry_check,
};

enum class OutputFormat { text, csv, json };

struct RunConfig {
  Command command = Command::spectrum;
  int n = 2;
  long long sigma_bar = 0;
  long long levels = 8;     // spectrum/ktypes row count
  long long i_max = 10;     // verify level bound
  long long k_max = 30;     // verify shell bound
  long long k = 1;          // profile quantum numbers
  long long l = 0;
  int sample_points = 200;  // profile sampling
  double sample_min = -1.0;  // negative = use the profile default window
  double sample_max = -1.0;
  int samples = 1000;  // geometry sample count
  std::uint64_t seed = 20240517;
  std::string suite = "all";
  OutputFormat format = OutputFormat::text;
  std::string output_path;  // empty = write to the provided stream
  suites::Tolerances tol;
};

// Parses names like "csv"; throws std::invalid_argument on unknown input.
OutputFormat parse_format(const std::string& name);

int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace u1kepler::cli
