// Copyright 2026 The lowdeg Authors
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

// lowdeg: run planted-versus-null experiments and the audit battery.
//
// Exit codes: 0 success, 1 audit or metric failure (or runtime error),
// 2 invalid configuration.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lowdeg/harness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitConfig = 2;

template <typename T>
void set_if(const CLI::Option* opt, std::optional<T>& target, const T& value) {
  if (opt->count() > 0) target = value;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Planted-versus-null distinguishing experiments over Reed-Solomon "
               "and BCH codes"};
  app.set_version_flag("--version", "lowdeg " LOWDEG_VERSION);

  lowdeg::ExperimentConfig config;
  std::size_t n = 0;
  unsigned m = 0;
  std::size_t t = 0;
  double delta = 0.0;
  std::string adversarial;
  std::string out_path;
  double min_metric = -1.0;

  const std::vector<std::string> experiments{
      "thm1", "thm2", "noise-sweep", "audits", "dump", "code-info", "export-code"};

  app.add_option("--experiment", config.experiment, "Experiment to run")
      ->check(CLI::IsMember(experiments))
      ->envname("LOWDEG_EXPERIMENT")
      ->capture_default_str();
  auto* n_opt = app.add_option("--n", n, "Code length")->envname("LOWDEG_N");
  auto* m_opt = app.add_option("--m", m, "Field degree: n = 2^m (thm1) or 2^m - 1 (thm2)")
                    ->envname("LOWDEG_M");
  auto* t_opt = app.add_option("--t", t, "BCH designed error radius (thm2)")
                    ->envname("LOWDEG_T");
  app.add_option("--alpha", config.alpha, "Rate: k = ceil(alpha n) (thm1)")
      ->envname("LOWDEG_ALPHA")
      ->capture_default_str();
  auto* delta_opt =
      app.add_option("--delta", delta, "Noise rate")->envname("LOWDEG_DELTA");
  app.add_option("--beta-grid", config.beta_grid, "Wraparound amplitudes (noise-sweep)")
      ->delimiter(',')
      ->envname("LOWDEG_BETA_GRID")
      ->capture_default_str();
  app.add_option("--trials", config.trials, "Trials per hypothesis")
      ->envname("LOWDEG_TRIALS")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "Master seed")
      ->envname("LOWDEG_SEED")
      ->capture_default_str();
  auto* adv_opt = app.add_option("--adversarial", adversarial,
                                 "Replace resampling noise with a named adversary")
                      ->envname("LOWDEG_ADVERSARIAL");
  app.add_option("--out", out_path, "Output path (default: stdout)")
      ->envname("LOWDEG_OUT");
  app.add_option("--format", config.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->envname("LOWDEG_FORMAT")
      ->capture_default_str();
  app.add_option("--only", config.only, "Run only the named audits")
      ->delimiter(',')
      ->envname("LOWDEG_ONLY");
  app.add_option("--threads", config.threads, "Worker threads (0 = all cores)")
      ->envname("LOWDEG_THREADS")
      ->capture_default_str();
  app.add_flag("--diagnostics", config.diagnostics, "Emit per-trial verdicts")
      ->envname("LOWDEG_DIAGNOSTICS");
  app.add_option("--min-metric", min_metric,
                 "Exit 1 if the combined metric falls below this value")
      ->envname("LOWDEG_MIN_METRIC");
  app.add_option("--model", config.model, "dump / export-code: thm1 or thm2")
      ->check(CLI::IsMember({"thm1", "thm2"}))
      ->envname("LOWDEG_MODEL")
      ->capture_default_str();
  app.add_option("--hypothesis", config.hypothesis, "dump: null or planted")
      ->check(CLI::IsMember({"null", "planted"}))
      ->envname("LOWDEG_HYPOTHESIS")
      ->capture_default_str();
  app.add_option("--code", config.code_path, "code-info: path to a code file")
      ->envname("LOWDEG_CODE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  set_if(n_opt, config.n, n);
  set_if(m_opt, config.m, m);
  set_if(t_opt, config.t, t);
  set_if(delta_opt, config.delta, delta);
  set_if(adv_opt, config.adversarial, adversarial);

  std::ostringstream buffer;
  int status = kExitOk;
  try {
    const std::string& e = config.experiment;
    if (e == "audits") {
      const auto reports = lowdeg::run_audits(config);
      lowdeg::write_audits(buffer, reports, config.format);
      if (!lowdeg::all_pass(reports)) status = kExitFailure;
    } else if (e == "dump") {
      lowdeg::run_dump(config, buffer);
    } else if (e == "code-info") {
      lowdeg::run_code_info(config, buffer);
    } else if (e == "export-code") {
      lowdeg::run_export_code(config, buffer);
    } else {
      const lowdeg::ResultTable table =
          e == "thm1"   ? lowdeg::run_thm1(config)
          : e == "thm2" ? lowdeg::run_thm2(config)
                        : lowdeg::run_noise_sweep(config);
      lowdeg::write_table(buffer, table, config.format);
      if (min_metric >= 0.0) {
        const auto metric = table.combined_metric();
        if (metric && *metric < min_metric) {
          std::cerr << "combined metric " << *metric << " below " << min_metric
                    << '\n';
          status = kExitFailure;
        }
      }
    }
  } catch (const lowdeg::ConfigError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitFailure;
  }

  if (out_path.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return kExitFailure;
    }
    file << buffer.str();
  }
  return status;
}
