// u1kepler command-line front end: spectrum and K-type tables, the exact
// and numerical verification suites, and radial/oscillator profile export.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "u1kepler/cli.hpp"
#include "u1kepler/exact.hpp"

namespace {

using u1kepler::cli::Command;
using u1kepler::cli::RunConfig;

void add_params(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--n", config.n, "dimension parameter (>= 2)");
  cmd->add_option("--sigma", config.sigma_bar, "magnetic-charge character");
}

void add_output(CLI::App* cmd, RunConfig& config, std::string& format) {
  cmd->add_option("--format", format, "text, csv, or json")
      ->check(CLI::IsMember({"text", "csv", "json"}));
  cmd->add_option("--output", config.output_path, "write to a file instead of stdout");
}

void add_tolerances(CLI::App* cmd, RunConfig& config) {
  cmd->add_option("--tol-radial", config.tol.radial_residual,
                  "radial eigen-equation residual bound")
      ->envname("U1KEPLER_TOL_RADIAL");
  cmd->add_option("--tol-oscillator", config.tol.oscillator_residual,
                  "oscillator eigen-equation residual bound")
      ->envname("U1KEPLER_TOL_OSCILLATOR");
  cmd->add_option("--tol-gram", config.tol.gram_deviation,
                  "Gram-matrix deviation bound")
      ->envname("U1KEPLER_TOL_GRAM");
  cmd->add_option("--tol-micz", config.tol.micz_residual,
                  "MICZ conjugation residual bound")
      ->envname("U1KEPLER_TOL_MICZ");
  cmd->add_option("--tol-metric", config.tol.metric_residual,
                  "metric decomposition residual bound")
      ->envname("U1KEPLER_TOL_METRIC");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact and numerical verification of the U(1)-Kepler bound-state structure"};
  app.set_version_flag("--version", u1kepler::kVersion);
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "text";

  auto* spectrum = app.add_subcommand("spectrum", "bound-state levels, energies, degeneracies");
  add_params(spectrum, config);
  spectrum->add_option("--levels", config.levels, "number of levels to emit");
  add_output(spectrum, config, format);

  auto* ktypes = app.add_subcommand("ktypes", "K-type pairs and dimension factorization");
  add_params(ktypes, config);
  ktypes->add_option("--levels", config.levels, "number of levels to emit");
  add_output(ktypes, config, format);

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  add_params(verify, config);
  verify->add_option("--suite", config.suite,
                     "all, spectrum-spot-values, dimension-equality, "
                     "generating-function, ktype-dimensions, casimir-consistency, "
                     "radial-residuals, orthonormality, oscillator-correspondence, "
                     "micz-equivalence, metric-decomposition, hydrogen-regression");
  verify->add_option("--kmax", config.k_max, "shell/order bound");
  verify->add_option("--imax", config.i_max, "level bound");
  verify->add_option("--samples", config.samples, "random sample count");
  verify->add_option("--seed", config.seed, "seed for randomized suites");
  add_tolerances(verify, config);
  add_output(verify, config, format);

  auto* radial = app.add_subcommand("radial", "sample a radial profile as CSV (rho,value)");
  add_params(radial, config);
  radial->add_option("--k", config.k, "radial quantum number (>= 1)");
  radial->add_option("--l", config.l, "angular index (>= 0)");
  radial->add_option("--points", config.sample_points, "sample count");
  radial->add_option("--rho-min", config.sample_min, "window start");
  radial->add_option("--rho-max", config.sample_max, "window end");
  add_output(radial, config, format);

  auto* osc = app.add_subcommand("oscillator", "sample a twisted oscillator profile (r,value)");
  add_params(osc, config);
  osc->add_option("--k", config.k, "radial quantum number (>= 1)");
  osc->add_option("--l", config.l, "angular index (>= 0)");
  osc->add_option("--points", config.sample_points, "sample count");
  osc->add_option("--r-min", config.sample_min, "window start");
  osc->add_option("--r-max", config.sample_max, "window end");
  add_output(osc, config, format);

  auto* micz = app.add_subcommand("micz-check", "n=2 MICZ equivalence checks");
  micz->add_option("--imax", config.i_max, "level bound");
  micz->add_option("--tol-micz", config.tol.micz_residual, "conjugation residual bound")
      ->envname("U1KEPLER_TOL_MICZ");
  add_output(micz, config, format);

  auto* geom = app.add_subcommand("geometry-check", "metric decomposition checks");
  geom->add_option("--n", config.n, "complex dimension (>= 2)");
  geom->add_option("--samples", config.samples, "random sample count");
  geom->add_option("--seed", config.seed, "sample seed");
  geom->add_option("--tol-metric", config.tol.metric_residual, "residual bound")
      ->envname("U1KEPLER_TOL_METRIC");
  add_output(geom, config, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& help) {
    return app.exit(help);
  } catch (const CLI::CallForVersion& version) {
    return app.exit(version);
  } catch (const CLI::ParseError& error) {
    app.exit(error);
    return 2;  // invalid configuration
  }

  if (spectrum->parsed()) config.command = Command::spectrum;
  if (ktypes->parsed()) config.command = Command::ktypes;
  if (verify->parsed()) config.command = Command::verify;
  if (radial->parsed()) config.command = Command::radial;
  if (osc->parsed()) config.command = Command::oscillator;
  if (micz->parsed()) config.command = Command::micz_check;
  if (geom->parsed()) config.command = Command::geometry_check;

  try {
    config.format = u1kepler::cli::parse_format(format);
  } catch (const std::invalid_argument& error) {
    std::cerr << "invalid configuration: " << error.what() << "\n";
    return 2;
  }

  return u1kepler::cli::run(config, std::cout, std::cerr);
}
