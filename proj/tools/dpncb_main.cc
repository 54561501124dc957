// Copyright 2026 The dpncb Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dpncb command line: run experiments, audit mechanisms, render plots.
//
//   dpncb run --preset fig_b --runs 10 --out results
//   dpncb run --config my.json --threads 4 --plot
//   dpncb audit --preset gdp_sequence --out results
//   dpncb plot --csv results/fig_b.csv --log-log

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "dpncb/audit.h"
#include "dpncb/errors.h"
#include "dpncb/experiment.h"
#include "dpncb/plot.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;

struct RunArgs {
  std::string config_path;
  std::string preset;
  std::optional<std::uint64_t> seed;
  std::optional<std::int64_t> runs;
  std::optional<std::string> out;
  std::optional<int> threads;
  bool plot = false;
  bool log_log = false;
};

struct AuditArgs {
  std::string preset = "gdp_sequence";
  double epsilon = 0.0;  // 0 selects the preset's target
  std::optional<std::int64_t> trials;
  std::uint64_t seed = 1;
  int threads = 1;
  std::string out = ".";
};

struct PlotArgs {
  std::string csv;
  std::string out;
  bool log_log = false;
};

int do_run(const RunArgs& args) {
  if (args.config_path.empty() == args.preset.empty()) {
    throw dpncb::ConfigError("give exactly one of --config or --preset");
  }
  dpncb::ExperimentConfig config = args.preset.empty()
                                       ? dpncb::load_config(args.config_path)
                                       : dpncb::figure_preset(args.preset);
  if (args.seed) config.seed = *args.seed;
  if (args.runs) config.runs = *args.runs;
  if (args.out) config.output_dir = *args.out;
  if (args.threads) config.threads = *args.threads;
  config.validate();

  const dpncb::ExperimentResult result = dpncb::run_experiment(config);
  std::cout << result.csv;
  std::cerr << "wrote " << result.csv_path << '\n';
  if (args.plot) {
    dpncb::PlotSpec spec;
    spec.log_log = args.log_log;
    spec.title = config.name + " Nash regret";
    const std::string svg_path = config.output_dir + "/" + config.name + ".svg";
    const auto plot = dpncb::emit_plot(result.csv_path, svg_path, spec);
    for (const auto& w : plot.warnings) std::cerr << "warning: " << w << '\n';
    std::cerr << "wrote " << svg_path << '\n';
  }
  return 0;
}

int do_audit(const AuditArgs& args) {
  dpncb::AuditReport report;
  if (args.preset == "scalar_laplace" || args.preset == "scalar_broken") {
    dpncb::AuditConfig config = dpncb::AuditConfig::scalar_default();
    if (args.trials) config.trials = *args.trials;
    config.seed = args.seed;
    config.threads = args.threads;
    const double eps = args.epsilon > 0.0 ? args.epsilon : 1.0;
    const double mech_eps = args.preset == "scalar_broken" ? 2.0 * eps : eps;
    report = dpncb::audit_scalar_mechanism(dpncb::laplace_mechanism(mech_eps),
                                           0.0, 1.0, eps, config);
    report.mechanism = args.preset;
  } else if (args.preset == "gdp_sequence" || args.preset == "ncb_sequence" ||
             args.preset == "ucb1_sequence") {
    dpncb::AuditConfig config = dpncb::AuditConfig::sequence_default();
    if (args.trials) config.trials = *args.trials;
    config.seed = args.seed;
    config.threads = args.threads;
    dpncb::PolicyParams params;
    params.k = 2;
    params.horizon = 6;
    params.epsilon = args.epsilon > 0.0 ? args.epsilon : 2.0;
    const dpncb::ReplayTape tape({1, 0, 1, 1, 0, 1});
    const dpncb::ReplayTape tape_prime({0, 0, 1, 1, 0, 1});
    const std::string policy =
        args.preset.substr(0, args.preset.find('_')) == "gdp"
            ? "gdp_ncb"
            : args.preset.substr(0, args.preset.find('_'));
    report =
        dpncb::audit_bandit_global(policy, params, tape, tape_prime, config);
  } else {
    throw dpncb::ConfigError("unknown audit preset '" + args.preset + "'");
  }
  const std::string json = dpncb::audit_report_json(report);
  std::cout << json << '\n';
  const std::string path = args.out + "/audit_" + args.preset + ".json";
  dpncb::write_text_file(path, json + "\n");
  std::cerr << "wrote " << path << '\n';
  return 0;
}

int do_plot(const PlotArgs& args) {
  dpncb::PlotSpec spec;
  spec.log_log = args.log_log;
  std::string out = args.out;
  if (out.empty()) {
    const auto dot = args.csv.rfind('.');
    out = (dot == std::string::npos ? args.csv : args.csv.substr(0, dot)) +
          ".svg";
  }
  const auto plot = dpncb::emit_plot(args.csv, out, spec);
  for (const auto& w : plot.warnings) std::cerr << "warning: " << w << '\n';
  std::cerr << "wrote " << out << " (" << plot.series << " series)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private Nash-regret bandit simulator"};
  app.require_subcommand(1);

  RunArgs run_args;
  CLI::App* run = app.add_subcommand("run", "Run an experiment grid");
  run->add_option("--config", run_args.config_path, "JSON config file");
  run->add_option("--preset", run_args.preset, "Figure preset (fig_a..fig_f)");
  run->add_option("--seed", run_args.seed, "Master seed");
  run->add_option("--runs", run_args.runs, "Runs per cell");
  run->add_option("--out", run_args.out, "Output directory");
  run->add_option("--threads", run_args.threads, "Worker threads (0 = all)");
  run->add_flag("--plot", run_args.plot, "Also write an SVG plot");
  run->add_flag("--log-log", run_args.log_log, "Log-log plot axes");

  AuditArgs audit_args;
  CLI::App* audit = app.add_subcommand("audit", "Empirical privacy audit");
  audit
      ->add_option("--preset", audit_args.preset,
                   "scalar_laplace, scalar_broken, gdp_sequence, "
                   "ncb_sequence or ucb1_sequence")
      ->capture_default_str();
  audit->add_option("--epsilon", audit_args.epsilon, "Target epsilon");
  audit->add_option("--trials", audit_args.trials, "Trials per input");
  audit->add_option("--seed", audit_args.seed, "Seed")->capture_default_str();
  audit->add_option("--threads", audit_args.threads, "Worker threads");
  audit->add_option("--out", audit_args.out, "Report directory")
      ->capture_default_str();

  PlotArgs plot_args;
  CLI::App* plot = app.add_subcommand("plot", "Render a regret CSV as SVG");
  plot->add_option("--csv", plot_args.csv, "Regret CSV")->required();
  plot->add_option("--out", plot_args.out, "SVG path");
  plot->add_flag("--log-log", plot_args.log_log, "Log-log axes");

  CLI::App* presets = app.add_subcommand("presets", "List figure presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return do_run(run_args);
    if (*audit) return do_audit(audit_args);
    if (*plot) return do_plot(plot_args);
    if (*presets) {
      for (auto name : dpncb::figure_preset_names()) {
        std::cout << name << '\n'
                  << dpncb::figure_preset(name).to_json() << '\n';
      }
      return 0;
    }
  } catch (const dpncb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const dpncb::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
