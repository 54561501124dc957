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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "dpncb/audit.h"
#include "dpncb/environment.h"
#include "dpncb/errors.h"
#include "dpncb/experiment.h"
#include "dpncb/laplace.h"
#include "dpncb/metrics.h"
#include "dpncb/ncb_index.h"
#include "dpncb/policy.h"

namespace py = pybind11;

namespace {

dpncb::PolicyParams make_params(std::size_t k, std::int64_t horizon,
                                double epsilon, double c, double alpha) {
  dpncb::PolicyParams params;
  params.k = k;
  params.horizon = horizon;
  params.epsilon = epsilon;
  params.c = c;
  params.alpha = alpha;
  params.validate();
  return params;
}

py::dict report_dict(const dpncb::AuditReport& r) {
  py::dict d;
  d["epsilon_hat"] = r.epsilon_hat;
  d["ci_low"] = r.ci_low;
  d["ci_high"] = r.ci_high;
  d["epsilon_target"] = r.epsilon_target;
  d["verdict"] = std::string(dpncb::verdict_name(r.verdict));
  d["trials"] = r.trials;
  d["bins_used"] = r.bins_used;
  return d;
}

// Arms pulled in one run of `policy` on a stochastic instance.
std::vector<std::size_t> play(const std::string& policy_name,
                              const std::vector<double>& means,
                              std::int64_t horizon, double epsilon, double c,
                              double alpha, std::uint64_t seed) {
  std::vector<dpncb::ArmSpec> arms;
  for (double m : means) arms.push_back(dpncb::ArmSpec::bernoulli(m));
  const dpncb::BanditInstance instance(std::move(arms));
  const auto params =
      make_params(instance.num_arms(), horizon, epsilon, c, alpha);
  const dpncb::RngStream root = dpncb::derive_stream(seed, 0);
  auto policy = dpncb::make_policy(policy_name, params, root.fork(2));
  dpncb::StochasticEnvironment env(instance, root.fork(1));
  dpncb::RngStream privatizer = root.fork(3);
  const auto outcome =
      dpncb::simulate_run(*policy, env, instance, horizon, epsilon, privatizer);
  return {outcome.trace.arms.begin(), outcome.trace.arms.end()};
}

}  // namespace

PYBIND11_MODULE(_dpncb, m) {
  m.doc() = "Differentially private Nash-regret bandits";

  py::register_exception<dpncb::DomainError>(m, "DomainError",
                                             PyExc_ValueError);
  py::register_exception<dpncb::ConfigError>(m, "ConfigError",
                                             PyExc_ValueError);
  py::register_exception<dpncb::AuditError>(m, "AuditError",
                                            PyExc_RuntimeError);
  py::register_exception<dpncb::ParseError>(m, "ParseError", PyExc_ValueError);

  m.def(
      "laplace_quantile",
      [](double b, double u) {
        return dpncb::laplace_quantile(dpncb::LaplaceScale(b), u);
      },
      py::arg("b"), py::arg("u"));
  m.def(
      "laplace_cdf",
      [](double b, double x) {
        return dpncb::laplace_cdf(dpncb::LaplaceScale(b), x);
      },
      py::arg("b"), py::arg("x"));
  m.def(
      "sample_laplace",
      [](double b, std::size_t n, std::uint64_t seed) {
        dpncb::RngStream stream = dpncb::derive_stream(seed, 0);
        const dpncb::LaplaceScale scale(b);
        std::vector<double> out(n);
        for (double& x : out) x = dpncb::sample_laplace(stream, scale);
        return out;
      },
      py::arg("b"), py::arg("n"), py::arg("seed") = 1);

  m.def("ncb_nonprivate", &dpncb::ncb_nonprivate, py::arg("mu_hat"),
        py::arg("n"), py::arg("horizon"));
  m.def(
      "ncb_gdp",
      [](double mu, double n, std::int64_t horizon, double eps, double c,
         double alpha) {
        return dpncb::ncb_gdp(mu, n, make_params(2, horizon, eps, c, alpha));
      },
      py::arg("mu_tilde"), py::arg("n"), py::arg("horizon"), py::arg("epsilon"),
      py::arg("c") = 3.0, py::arg("alpha") = 3.1);
  m.def(
      "ncb_ldp",
      [](double mu, double n, std::int64_t horizon, double eps, double c,
         double alpha) {
        return dpncb::ncb_ldp(mu, n, make_params(2, horizon, eps, c, alpha));
      },
      py::arg("mu_tilde"), py::arg("n"), py::arg("horizon"), py::arg("epsilon"),
      py::arg("c") = 3.0, py::arg("alpha") = 3.1);
  m.def(
      "gdp_phase1_threshold",
      [](std::int64_t horizon, double eps, double c) {
        return dpncb::gdp_phase1_threshold(
            make_params(2, horizon, eps, c, 3.1));
      },
      py::arg("horizon"), py::arg("epsilon"), py::arg("c") = 3.0);
  m.def(
      "ldp_phase1_sides",
      [](double pulls, double mu, std::int64_t horizon, double eps, double c,
         double alpha) {
        const auto s = dpncb::ldp_phase1_sides(
            pulls, mu, make_params(2, horizon, eps, c, alpha));
        return py::make_tuple(s.lhs, s.rhs);
      },
      py::arg("pulls"), py::arg("mu_tilde"), py::arg("horizon"),
      py::arg("epsilon"), py::arg("c") = 3.0, py::arg("alpha") = 3.1);
  m.def(
      "exploration_budget",
      [](double mu_star, std::int64_t horizon, double eps,
         const std::string& model, double c) {
        if (model != "global" && model != "local") {
          throw dpncb::ConfigError("model must be 'global' or 'local'");
        }
        return dpncb::exploration_budget_S(mu_star, horizon, eps,
                                           model == "global"
                                               ? dpncb::PrivacyModel::kGlobal
                                               : dpncb::PrivacyModel::kLocal,
                                           c);
      },
      py::arg("mu_star"), py::arg("horizon"), py::arg("epsilon"),
      py::arg("model"), py::arg("c") = 3.0);

  m.def(
      "adversarial_log_means",
      [](std::int64_t horizon) {
        return dpncb::adversarial_instance(horizon).log_means();
      },
      py::arg("horizon"));
  m.def(
      "beta_mean",
      [](double a, double b) {
        return dpncb::true_mean(dpncb::ArmSpec::beta(a, b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "nash_regret",
      [](const std::vector<double>& log_means, double mu) {
        return dpncb::run_nash_regret(log_means, mu);
      },
      py::arg("log_means"), py::arg("mu_star"));
  m.def(
      "average_regret",
      [](const std::vector<double>& log_means, double mu) {
        return dpncb::run_average_regret(log_means, mu);
      },
      py::arg("log_means"), py::arg("mu_star"));

  m.def("policy_names", [] {
    std::vector<std::string> out;
    for (auto n : dpncb::policy_names()) out.emplace_back(n);
    return out;
  });
  m.def("play", &play, py::arg("policy"), py::arg("means"), py::arg("horizon"),
        py::arg("epsilon") = 1.0, py::arg("c") = 3.0, py::arg("alpha") = 3.1,
        py::arg("seed") = 1);

  m.def(
      "figure_preset",
      [](const std::string& name) {
        return dpncb::figure_preset(name).to_json();
      },
      py::arg("name"));
  m.def(
      "run_experiment_json",
      [](const std::string& config_json) {
        const auto config = dpncb::ExperimentConfig::from_json(config_json);
        py::gil_scoped_release release;
        return dpncb::run_experiment(config, /*write_files=*/false).csv;
      },
      py::arg("config_json"),
      "Runs every cell of a JSON config and returns the regret CSV text.");

  m.def(
      "audit_laplace",
      [](double epsilon, double target, std::int64_t trials,
         std::uint64_t seed) {
        dpncb::AuditConfig config = dpncb::AuditConfig::scalar_default();
        config.trials = trials;
        config.seed = seed;
        dpncb::AuditReport r;
        {
          py::gil_scoped_release release;
          r = dpncb::audit_scalar_mechanism(dpncb::laplace_mechanism(epsilon),
                                            0.0, 1.0, target, config);
        }
        return report_dict(r);
      },
      py::arg("epsilon"), py::arg("target"), py::arg("trials") = 1'000'000,
      py::arg("seed") = 1);
  m.def(
      "audit_sequence",
      [](const std::string& policy, const std::vector<double>& tape,
         const std::vector<double>& tape_prime, double epsilon, double c,
         std::int64_t trials, std::uint64_t seed) {
        dpncb::AuditConfig config = dpncb::AuditConfig::sequence_default();
        config.trials = trials;
        config.seed = seed;
        const auto params = make_params(
            2, static_cast<std::int64_t>(tape.size()), epsilon, c, 3.1);
        dpncb::AuditReport r;
        {
          py::gil_scoped_release release;
          r = dpncb::audit_bandit_global(policy, params,
                                         dpncb::ReplayTape(tape),
                                         dpncb::ReplayTape(tape_prime), config);
        }
        return report_dict(r);
      },
      py::arg("policy"), py::arg("tape"), py::arg("tape_prime"),
      py::arg("epsilon"), py::arg("c") = 3.0, py::arg("trials") = 200'000,
      py::arg("seed") = 1);
}
