#include "u1kepler/cli.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

#include "u1kepler/format.hpp"
#include "u1kepler/geometry.hpp"
#include "u1kepler/micz.hpp"
#include "u1kepler/oscillator.hpp"
#include "u1kepler/radial.hpp"
#include "u1kepler/spectra.hpp"

namespace u1kepler::cli {

namespace {

using nlohmann::json;
using repcore::ProblemParams;

json params_json(const RunConfig& config) {
  return json{{"n", config.n},
              {"sigma_bar", config.sigma_bar},
              {"seed", config.seed}};
}

void emit(const RunConfig& config, std::ostream& fallback,
          const std::function<void(std::ostream&)>& writer) {
  if (config.output_path.empty()) {
    writer(fallback);
    return;
  }
  std::ofstream file(config.output_path, std::ios::binary);
  if (!file)
    throw std::invalid_argument("cannot open output path: " + config.output_path);
  writer(file);
}

// ---------------------------------------------------------------- spectrum

struct SpectrumRow {
  long long I;
  Rat energy;
  Int degeneracy;
  std::string left, right;
};

std::vector<SpectrumRow> spectrum_rows(const RunConfig& config) {
  const ProblemParams params(config.n, config.sigma_bar);
  const auto table = spectra::build_table(params, config.levels);
  std::vector<SpectrumRow> rows;
  rows.reserve(table.levels.size());
  for (const auto& level : table.levels)
    rows.push_back({level.I, level.energy, level.degeneracy,
                    level.left_ktype.str(), level.right_ktype.str()});
  return rows;
}

int run_spectrum(const RunConfig& config, std::ostream& out) {
  const auto rows = spectrum_rows(config);
  const auto label = spectra::hw_label(ProblemParams(config.n, config.sigma_bar));
  std::string label_str = "[";
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) label_str += ' ';
    label_str += label[i].str();
  }
  label_str += ']';

  emit(config, out, [&](std::ostream& os) {
    switch (config.format) {
      case OutputFormat::csv: {
        os << "I,energy_exact,energy_float,degeneracy,left_ktype,right_ktype\n";
        for (const auto& row : rows)
          os << row.I << ',' << to_string(row.energy) << ','
             << format_double(to_double(row.energy)) << ',' << row.degeneracy.str()
             << ',' << row.left << ',' << row.right
             << '\n';
        break;
      }
      case OutputFormat::json: {
        json doc;
        doc["params"] = params_json(config);
        doc["version"] = kVersion;
        doc["failures"] = json::array();
        json results = json::array();
        for (const auto& row : rows) {
          results.push_back({{"I", row.I},
                             {"energy", to_string(row.energy)},
                             {"energy_float", to_double(row.energy)},
                             {"degeneracy", row.degeneracy.str()},
                             {"degeneracy_float", to_double(row.degeneracy)},
                             {"left_ktype", row.left},
                             {"right_ktype", row.right}});
        }
        doc["results"] = std::move(results);
        doc["hw_label"] = label_str;
        os << doc.dump(2) << '\n';
        break;
      }
      case OutputFormat::text: {
        os << "bound-state spectrum, n=" << config.n
           << " sigma_bar=" << config.sigma_bar << "\n";
        os << "module highest weight: " << label_str << "\n";
        for (const auto& row : rows)
          os << "  I=" << row.I << "  E=" << to_string(row.energy) << " ("
             << format_double(to_double(row.energy))
             << ")  deg=" << row.degeneracy.str() << "  " << row.left << " (x) "
             << row.right << "\n";
        break;
      }
    }
  });
  return 0;
}

int run_ktypes(const RunConfig& config, std::ostream& out) {
  const ProblemParams params(config.n, config.sigma_bar);
  struct Row {
    long long I;
    std::string left, right;
    Int left_dim, right_dim, product, degeneracy;
    bool match;
  };
  std::vector<Row> rows;
  for (long long I = 0; I < config.levels; ++I) {
    const auto [left, right] = spectra::ktype_pair(I, params);
    Row row{I,
            left.str(),
            right.str(),
            repcore::dim_highest_weight(left),
            repcore::dim_highest_weight(right),
            0,
            spectra::level_degeneracy(I, params),
            false};
    row.product = row.left_dim * row.right_dim;
    row.match = row.product == row.degeneracy;
    rows.push_back(std::move(row));
  }
  bool all_match = true;
  for (const auto& row : rows) all_match = all_match && row.match;

  emit(config, out, [&](std::ostream& os) {
    switch (config.format) {
      case OutputFormat::csv: {
        os << "I,left_ktype,left_dim,right_ktype,right_dim,product,degeneracy,"
              "match\n";
        for (const auto& row : rows)
          os << row.I << ',' << row.left << ',' << row.left_dim.str() << ','
             << row.right << ',' << row.right_dim.str() << ','
             << row.product.str() << ',' << row.degeneracy.str() << ','
             << (row.match ? "true" : "false") << '\n';
        break;
      }
      case OutputFormat::json: {
        json doc;
        doc["params"] = params_json(config);
        doc["version"] = kVersion;
        json results = json::array();
        json failures = json::array();
        for (const auto& row : rows) {
          results.push_back({{"I", row.I},
                             {"left_ktype", row.left},
                             {"left_dim", row.left_dim.str()},
                             {"right_ktype", row.right},
                             {"right_dim", row.right_dim.str()},
                             {"product", row.product.str()},
                             {"degeneracy", row.degeneracy.str()},
                             {"match", row.match}});
          if (!row.match)
            failures.push_back({{"label", "I=" + std::to_string(row.I)},
                                {"lhs", row.product.str()},
                                {"rhs", row.degeneracy.str()}});
        }
        doc["results"] = std::move(results);
        doc["failures"] = std::move(failures);
        os << doc.dump(2) << '\n';
        break;
      }
      case OutputFormat::text: {
        os << "K-type pairs, n=" << config.n << " sigma_bar=" << config.sigma_bar
           << "\n";
        for (const auto& row : rows)
          os << "  I=" << row.I << "  " << row.left << " (x) " << row.right
             << "  dims " << row.left_dim.str() << "*" << row.right_dim.str()
             << " = " << row.product.str() << (row.match ? " == " : " != ")
             << row.degeneracy.str() << "\n";
        break;
      }
    }
  });
  return all_match ? 0 : 1;
}

// ------------------------------------------------------------------ verify

void render_reports(const RunConfig& config, std::ostream& out,
                    const std::vector<suites::SuiteResult>& results) {
  emit(config, out, [&](std::ostream& os) {
    switch (config.format) {
      case OutputFormat::csv: {
        os << "suite,label,lhs,rhs,pass\n";
        for (const auto& result : results)
          for (const auto& line : result.report.lines)
            os << result.name << ',' << line.label << ',' << line.lhs << ','
               << line.rhs << ',' << (line.pass ? "true" : "false") << '\n';
        break;
      }
      case OutputFormat::json: {
        json doc;
        doc["params"] = params_json(config);
        doc["version"] = kVersion;
        json summaries = json::array();
        json failures = json::array();
        for (const auto& result : results) {
          summaries.push_back({{"suite", result.name},
                               {"checks", result.report.lines.size()},
                               {"failures", result.report.failures()},
                               {"pass", result.report.all_pass()}});
          for (const auto& line : result.report.lines)
            if (!line.pass)
              failures.push_back({{"suite", result.name},
                                  {"label", line.label},
                                  {"lhs", line.lhs},
                                  {"rhs", line.rhs}});
        }
        doc["results"] = std::move(summaries);
        doc["failures"] = std::move(failures);
        os << doc.dump(2) << '\n';
        break;
      }
      case OutputFormat::text: {
        for (const auto& result : results) {
          os << (result.report.all_pass() ? "PASS" : "FAIL") << "  "
             << result.name << "  (" << result.report.lines.size() << " checks, "
             << result.report.failures() << " failures)\n";
          for (const auto& line : result.report.lines)
            if (!line.pass)
              os << "    FAIL " << line.label << ": " << line.lhs
                 << " expected " << line.rhs << "\n";
        }
        break;
      }
    }
  });
}

int run_verify(const RunConfig& config, std::ostream& out) {
  std::vector<suites::SuiteResult> results;
  const auto single = [&results](const std::string& name, CheckReport report) {
    results.push_back({name, std::move(report), 0.0});
  };
  const std::string& suite = config.suite;
  if (suite == "all") {
    results = suites::run_all(config.tol);
  } else if (suite == "spectrum-spot-values") {
    single(suite, suites::spectrum_spot_values());
  } else if (suite == "dimension-equality") {
    single(suite, repcore::verify_dimension_equality(config.n, config.k_max));
  } else if (suite == "generating-function") {
    single(suite, repcore::verify_generating_function(config.n, config.k_max));
  } else if (suite == "ktype-dimensions") {
    single(suite, spectra::verify_ktype_dimensions(
                      ProblemParams(config.n, config.sigma_bar), config.i_max));
  } else if (suite == "casimir-consistency") {
    single(suite, suites::casimir_consistency());
  } else if (suite == "radial-residuals") {
    single(suite, suites::radial_residuals(4, 4, 4, 3, config.tol.radial_residual));
  } else if (suite == "orthonormality") {
    single(suite, suites::orthonormality(6, config.tol.gram_deviation));
  } else if (suite == "oscillator-correspondence") {
    single(suite,
           suites::oscillator_correspondence(config.tol.oscillator_residual));
  } else if (suite == "micz-equivalence") {
    single(suite,
           suites::micz_equivalence(8, config.i_max, config.tol.micz_residual));
  } else if (suite == "metric-decomposition") {
    single(suite, suites::metric_decomposition(config.samples,
                                               config.tol.metric_residual,
                                               config.seed));
  } else if (suite == "hydrogen-regression") {
    single(suite, suites::hydrogen_regression());
  } else {
    throw std::invalid_argument("unknown verify suite: " + suite);
  }

  render_reports(config, out, results);
  for (const auto& result : results)
    if (!result.report.all_pass()) return 1;
  return 0;
}

// ---------------------------------------------------------------- profiles

int run_profile_sample(const RunConfig& config, std::ostream& out,
                       bool oscillator_side) {
  const ProblemParams params(config.n, config.sigma_bar);
  const radial::RadialEigenfunction f(config.k, config.l, params);
  if (config.sample_points < 2)
    throw std::invalid_argument("sampling needs at least two points");

  double lo = config.sample_min;
  double hi = config.sample_max;
  if (oscillator_side) {
    if (lo < 0.0) lo = 0.0;
    if (hi <= lo) hi = 3.0 * std::sqrt(2.0);
  } else {
    const double root = std::sqrt(f.principal_scale_value());
    if (lo < 0.0) lo = 0.3 * root;
    if (hi <= lo) hi = 3.0 * root;
  }

  std::function<double(double)> sampler;
  if (oscillator_side) {
    sampler = [profile = oscillator::twist(f)](double r) { return profile(r); };
  } else {
    sampler = [f](double rho) { return f(rho); };
  }

  emit(config, out, [&](std::ostream& os) {
    const char* abscissa = oscillator_side ? "r" : "rho";
    if (config.format == OutputFormat::json) {
      json doc;
      doc["params"] = params_json(config);
      doc["version"] = kVersion;
      doc["failures"] = json::array();
      json rows = json::array();
      for (int i = 0; i < config.sample_points; ++i) {
        const double x = lo + (hi - lo) * double(i) / (config.sample_points - 1);
        rows.push_back({{abscissa, x}, {"value", sampler(x)}});
      }
      doc["results"] = std::move(rows);
      os << doc.dump(2) << '\n';
      return;
    }
    // text and csv share the two-column rendering
    os << abscissa << ",value\n";
    for (int i = 0; i < config.sample_points; ++i) {
      const double x = lo + (hi - lo) * double(i) / (config.sample_points - 1);
      os << format_double(x) << ',' << format_double(sampler(x)) << '\n';
    }
  });
  return 0;
}

int run_micz_check(const RunConfig& config, std::ostream& out) {
  std::vector<suites::SuiteResult> results;
  results.push_back({"micz-equivalence",
                     suites::micz_equivalence(8, config.i_max,
                                              config.tol.micz_residual),
                     0.0});
  render_reports(config, out, results);
  return results.front().report.all_pass() ? 0 : 1;
}

int run_geometry_check(const RunConfig& config, std::ostream& out) {
  std::vector<suites::SuiteResult> results;
  results.push_back(
      {"metric-decomposition",
       geometry::metric_decomposition_check(config.n, config.samples,
                                            config.seed,
                                            config.tol.metric_residual),
       0.0});
  render_reports(config, out, results);
  return results.front().report.all_pass() ? 0 : 1;
}

}  // namespace

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  throw std::invalid_argument("unknown format: " + name);
}

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
  try {
    switch (config.command) {
      case Command::spectrum:
        return run_spectrum(config, out);
      case Command::ktypes:
        return run_ktypes(config, out);
      case Command::verify:
        return run_verify(config, out);
      case Command::radial:
        return run_profile_sample(config, out, false);
      case Command::oscillator:
        return run_profile_sample(config, out, true);
      case Command::micz_check:
        return run_micz_check(config, out);
      case Command::geometry_check:
        return run_geometry_check(config, out);
    }
    throw std::invalid_argument("unknown command");
  } catch (const std::invalid_argument& error) {
    diag << "invalid configuration: " << error.what() << "\n";
    return 2;
  } catch (const std::exception& error) {
    diag << "error: " << error.what() << "\n";
    return 1;
  }
}

}  // namespace u1kepler::cli
