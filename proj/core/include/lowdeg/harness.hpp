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

// Experiment drivers behind the command-line tool. Every trial draws from
// Rng::stream(seed, tag, trial), so tables are identical for identical
// configurations whatever the thread count.

#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lowdeg/audit.hpp"
#include "lowdeg/bch.hpp"

namespace lowdeg {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct ExperimentConfig {
  // thm1 | thm2 | noise-sweep | audits | dump | code-info | export-code
  std::string experiment = "thm1";
  // Unset values take per-experiment defaults (see resolve_*).
  std::optional<std::size_t> n;
  std::optional<unsigned> m;
  std::optional<std::size_t> t;
  double alpha = 0.05;
  std::optional<double> delta;
  std::vector<double> beta_grid{0.0, 0.5, 1.0};
  std::uint64_t trials = 200;
  std::uint64_t seed = 1;
  std::optional<std::string> adversarial;
  std::string format = "csv";  // csv | json
  std::vector<std::string> only;
  unsigned threads = 0;  // 0 = hardware concurrency
  bool diagnostics = false;
  std::string model = "thm1";       // dump / export-code: thm1 | thm2
  std::string hypothesis = "null";  // dump: null | planted
  std::string code_path;            // code-info
};

struct Thm1Params {
  unsigned m = 0;
  std::size_t n = 0;
  std::size_t k = 0;
  double delta = 0.0;
};

struct Thm2Params {
  unsigned m = 0;
  std::size_t n = 0;
  std::size_t t = 0;
  double delta = 0.0;
  bool strict_regime = false;
};

/// Defaults n = 1024, delta = 0.0035; k = ceil(alpha n). Throws ConfigError
/// if n is not a power of two in [2, 2^16] or the parameters are infeasible.
Thm1Params resolve_thm1(const ExperimentConfig& config);

/// Defaults n = 255, t = 6, delta = t / (4n) rounded to 4 decimals
/// (0.0059 at the defaults). n must be 2^m - 1.
Thm2Params resolve_thm2(const ExperimentConfig& config);

struct ResultRow {
  std::string experiment;
  std::size_t n = 0;
  std::size_t k_or_t = 0;
  double delta = 0.0;
  std::string hypothesis;  // null | planted | adversarial:<name> | combined
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double metric = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t seed = 0;
  std::optional<double> beta;
};

struct TrialRecord {
  std::string hypothesis;
  std::uint64_t trial = 0;
  std::string decision;
  std::string status;
  std::size_t distance = 0;
  std::size_t erasures = 0;
  std::size_t threshold = 0;
  std::optional<double> beta;
};

struct ResultTable {
  std::string experiment;
  bool has_beta = false;
  std::vector<ResultRow> rows;
  std::vector<TrialRecord> trials;  // filled when diagnostics are requested

  /// Metric of the last "combined" row, if any.
  std::optional<double> combined_metric() const;
};

ResultTable run_thm1(const ExperimentConfig& config);
ResultTable run_thm2(const ExperimentConfig& config);
/// Thm1 with wraparound noise at each beta applied to both hypotheses after
/// the usual resampling. Sample streams match run_thm1, so beta = 0
/// reproduces its metric.
ResultTable run_noise_sweep(const ExperimentConfig& config);

std::vector<std::string> audit_names();
/// Runs the battery (or the --only subset). Throws ConfigError for an
/// unknown audit name.
std::vector<AuditReport> run_audits(const ExperimentConfig& config);
bool all_pass(const std::vector<AuditReport>& reports);

void write_table(std::ostream& out, const ResultTable& table,
                 const std::string& format);
void write_audits(std::ostream& out, const std::vector<AuditReport>& reports,
                  const std::string& format);

/// One sample of the chosen model and hypothesis in the dump format.
void run_dump(const ExperimentConfig& config, std::ostream& out);
/// JSON summary of the code stored at config.code_path.
void run_code_info(const ExperimentConfig& config, std::ostream& out);
/// Writes the generator of the configured RS or BCH code in the text
/// code format.
void run_export_code(const ExperimentConfig& config, std::ostream& out);

}  // namespace lowdeg
