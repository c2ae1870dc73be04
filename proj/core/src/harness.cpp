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

#include "lowdeg/harness.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lowdeg/code_io.hpp"
#include "lowdeg/distinguishers.hpp"
#include "lowdeg/noise.hpp"
#include "lowdeg/parallel.hpp"
#include "lowdeg/planted.hpp"
#include "lowdeg/reed_solomon.hpp"
#include "lowdeg/stats.hpp"

namespace lowdeg {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_number(double x) {
  std::ostringstream s;
  s.precision(10);
  s << x;
  return s.str();
}

void require_unit(double x, const char* what) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw ConfigError(std::string(what) + " must lie in [0, 1]");
  }
}

struct TrialOutcome {
  bool success = false;
  Verdict verdict;
};

// Counts, rows and diagnostics for one hypothesis.
struct Side {
  std::string label;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
};

void add_rows(ResultTable& table, const ExperimentConfig& config,
              std::size_t n, std::size_t k_or_t, double delta,
              const Side& null_side, const Side& planted_side,
              std::optional<double> beta) {
  auto row = [&](const std::string& hyp, std::uint64_t trials,
                 std::uint64_t successes, double metric, Interval ci) {
    table.rows.push_back({table.experiment, n, k_or_t, delta, hyp, trials,
                          successes, metric, ci.low, ci.high, config.seed, beta});
  };
  auto rate = [](std::uint64_t s, std::uint64_t t) {
    return t ? static_cast<double>(s) / static_cast<double>(t) : 0.0;
  };
  row(null_side.label, null_side.trials, null_side.successes,
      rate(null_side.successes, null_side.trials),
      wilson_interval(null_side.successes, null_side.trials));
  row(planted_side.label, planted_side.trials, planted_side.successes,
      rate(planted_side.successes, planted_side.trials),
      wilson_interval(planted_side.successes, planted_side.trials));
  const ConjectureMetric c =
      conjecture_metric(null_side.successes, null_side.trials,
                        planted_side.successes, planted_side.trials);
  row("combined", null_side.trials + planted_side.trials,
      null_side.successes + planted_side.successes, c.value, c.interval);
}

template <typename Trial>
Side run_side(const ExperimentConfig& config, ResultTable& table,
              const std::string& label, std::optional<double> beta,
              Trial&& trial) {
  std::vector<TrialOutcome> outcomes(config.trials);
  parallel_for(config.trials, config.threads,
               [&](std::uint64_t i) { outcomes[i] = trial(i); });
  Side side{label, config.trials, 0};
  for (std::uint64_t i = 0; i < config.trials; ++i) {
    side.successes += outcomes[i].success ? 1 : 0;
    if (config.diagnostics) {
      const Verdict& v = outcomes[i].verdict;
      table.trials.push_back({label, i, std::string(to_string(v.decision)),
                              std::string(to_string(v.status)), v.distance,
                              v.erasures, v.threshold, beta});
    }
  }
  return side;
}

std::string planted_label(const ExperimentConfig& config) {
  return config.adversarial ? "adversarial:" + *config.adversarial : "planted";
}

unsigned log2_exact(std::size_t x) {
  return static_cast<unsigned>(std::countr_zero(x));
}

// Thm1 trial generators shared by run_thm1 and run_noise_sweep.
struct Thm1Context {
  Thm1Params params;
  TupleLayout layout;
  ReedSolomon rs;
  std::optional<Thm1Strategy> strategy;

  explicit Thm1Context(const ExperimentConfig& config)
      : params(resolve_thm1(config)),
        layout(params.m),
        rs(Field::make(2, params.m), params.n, params.k) {
    if (config.adversarial) {
      try {
        strategy = thm1_strategy(*config.adversarial);
      } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
      }
    }
  }

  std::vector<RealSymbol> null_sample(std::uint64_t seed, std::uint64_t i) const {
    Rng rng = Rng::stream(seed, "thm1/null", i);
    return sample_null_symbols(params.n, rng);
  }

  std::vector<RealSymbol> planted_sample(std::uint64_t seed, std::uint64_t i) const {
    Rng rng = Rng::stream(seed, "thm1/planted", i);
    PlantedSampleThm1 s = sample_planted_thm1(layout, rs, rng);
    if (strategy) return adversarial_corrupt(s, layout, params.delta, *strategy);
    Rng noise = Rng::stream(seed, "thm1/tdelta", i);
    return t_delta(s.symbols, params.delta, noise).sample;
  }
};

}  // namespace

std::optional<double> ResultTable::combined_metric() const {
  for (auto it = rows.rbegin(); it != rows.rend(); ++it) {
    if (it->hypothesis == "combined") return it->metric;
  }
  return std::nullopt;
}

Thm1Params resolve_thm1(const ExperimentConfig& config) {
  Thm1Params p;
  if (config.m) {
    p.m = *config.m;
    if (p.m < 1 || p.m > 16) throw ConfigError("m must lie in [1, 16]");
    p.n = std::size_t{1} << p.m;
    if (config.n && *config.n != p.n) {
      throw ConfigError("n must equal 2^m");
    }
  } else {
    p.n = config.n.value_or(1024);
    if (p.n < 2 || p.n > (std::size_t{1} << 16) || !std::has_single_bit(p.n)) {
      throw ConfigError("n must be a power of two in [2, 65536]");
    }
    p.m = log2_exact(p.n);
  }
  require_unit(config.alpha, "alpha");
  p.delta = config.delta.value_or(0.0035);
  require_unit(p.delta, "delta");
  // The slack keeps alpha n from rounding up past an exact integer.
  p.k = static_cast<std::size_t>(
      std::ceil(config.alpha * static_cast<double>(p.n) - 1e-9));
  if (p.k >= p.n) throw ConfigError("alpha too large: need k < n");
  const Thm1Feasibility f = thm1_feasible(p.n, p.k, p.delta);
  if (!f.feasible) throw ConfigError("infeasible parameters: " + f.violation);
  return p;
}

Thm2Params resolve_thm2(const ExperimentConfig& config) {
  Thm2Params p;
  if (config.m) {
    p.m = *config.m;
    if (p.m < 2 || p.m > 16) throw ConfigError("m must lie in [2, 16]");
    p.n = (std::size_t{1} << p.m) - 1;
    if (config.n && *config.n != p.n) throw ConfigError("n must equal 2^m - 1");
  } else {
    p.n = config.n.value_or(255);
    if (p.n < 3 || p.n > 65535 || !std::has_single_bit(p.n + 1)) {
      throw ConfigError("n must be 2^m - 1 with m in [2, 16]");
    }
    p.m = log2_exact(p.n + 1);
  }
  p.t = config.t.value_or(6);
  if (p.t == 0 || 2 * p.t >= p.n) throw ConfigError("t must satisfy 1 <= t < n/2");
  p.delta = config.delta.value_or(
      std::round(static_cast<double>(p.t) / (4.0 * static_cast<double>(p.n)) * 1e4) /
      1e4);
  require_unit(p.delta, "delta");
  return p;
}

ResultTable run_thm1(const ExperimentConfig& config) {
  const Thm1Context ctx(config);
  ResultTable table;
  table.experiment = "thm1";
  if (config.trials == 0) return table;
  const auto& p = ctx.params;
  const Side null_side =
      run_side(config, table, "null", std::nullopt, [&](std::uint64_t i) {
        const auto x = ctx.null_sample(config.seed, i);
        Verdict v = thm1_test(x, ctx.layout, ctx.rs, p.delta);
        return TrialOutcome{v.decision == Decision::Null, std::move(v)};
      });
  const Side planted_side = run_side(
      config, table, planted_label(config), std::nullopt, [&](std::uint64_t i) {
        const auto x = ctx.planted_sample(config.seed, i);
        Verdict v = thm1_test(x, ctx.layout, ctx.rs, p.delta);
        return TrialOutcome{v.decision == Decision::Planted, std::move(v)};
      });
  add_rows(table, config, p.n, p.k, p.delta, null_side, planted_side, std::nullopt);
  return table;
}

ResultTable run_thm2(const ExperimentConfig& config) {
  const Thm2Params p = resolve_thm2(config);
  BinaryCodeInstance inst = [&] {
    try {
      return bch_make(p.m, p.t);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }();
  const Thm2Feasibility f = thm2_feasible(inst, p.delta);
  if (!f.feasible) throw ConfigError("infeasible parameters: " + f.violation);
  std::optional<Thm2Strategy> strategy;
  if (config.adversarial) {
    try {
      strategy = thm2_strategy(*config.adversarial);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }

  ResultTable table;
  table.experiment = "thm2";
  if (config.trials == 0) return table;
  const Side null_side =
      run_side(config, table, "null", std::nullopt, [&](std::uint64_t i) {
        Rng rng = Rng::stream(config.seed, "thm2/null", i);
        const Word x = sample_null_bits(p.n, rng);
        Verdict v = thm2_test(x, inst, p.delta);
        return TrialOutcome{v.decision == Decision::Null, std::move(v)};
      });
  const Side planted_side = run_side(
      config, table, planted_label(config), std::nullopt, [&](std::uint64_t i) {
        Rng rng = Rng::stream(config.seed, "thm2/planted", i);
        const Word c = sample_planted_thm2(inst, rng);
        Word x;
        if (strategy) {
          x = adversarial_corrupt(c, p.delta, *strategy);
        } else {
          Rng noise = Rng::stream(config.seed, "thm2/tdelta", i);
          x = t_delta_bits(c, p.delta, noise).sample;
        }
        Verdict v = thm2_test(x, inst, p.delta);
        return TrialOutcome{v.decision == Decision::Planted, std::move(v)};
      });
  add_rows(table, config, p.n, p.t, p.delta, null_side, planted_side, std::nullopt);
  return table;
}

ResultTable run_noise_sweep(const ExperimentConfig& config) {
  const Thm1Context ctx(config);
  for (double beta : config.beta_grid) require_unit(beta, "beta");
  ResultTable table;
  table.experiment = "noise-sweep";
  table.has_beta = true;
  if (config.trials == 0) return table;
  const auto& p = ctx.params;
  for (std::size_t g = 0; g < config.beta_grid.size(); ++g) {
    const double beta = config.beta_grid[g];
    const std::string null_tag = "sweep/wrap/null/" + std::to_string(g);
    const std::string planted_tag = "sweep/wrap/planted/" + std::to_string(g);
    const Side null_side =
        run_side(config, table, "null", beta, [&](std::uint64_t i) {
          Rng wrap = Rng::stream(config.seed, null_tag, i);
          const auto x = wraparound_noise(ctx.null_sample(config.seed, i), beta, wrap);
          Verdict v = thm1_test(x, ctx.layout, ctx.rs, p.delta);
          return TrialOutcome{v.decision == Decision::Null, std::move(v)};
        });
    const Side planted_side = run_side(
        config, table, planted_label(config), beta, [&](std::uint64_t i) {
          Rng wrap = Rng::stream(config.seed, planted_tag, i);
          const auto x =
              wraparound_noise(ctx.planted_sample(config.seed, i), beta, wrap);
          Verdict v = thm1_test(x, ctx.layout, ctx.rs, p.delta);
          return TrialOutcome{v.decision == Decision::Planted, std::move(v)};
        });
    add_rows(table, config, p.n, p.k, p.delta, null_side, planted_side, beta);
  }
  return table;
}

std::vector<std::string> audit_names() {
  return {"unique-index", "erasure-fraction", "ball-size",   "rand-far",
          "kwise",        "sn-invariance",    "tuple-kwise", "dual-distance"};
}

std::vector<AuditReport> run_audits(const ExperimentConfig& config) {
  const auto names = audit_names();
  for (const auto& o : config.only) {
    if (std::find(names.begin(), names.end(), o) == names.end()) {
      throw ConfigError("unknown audit '" + o + "'");
    }
  }
  auto wanted = [&](const std::string& name) {
    return config.only.empty() ||
           std::find(config.only.begin(), config.only.end(), name) !=
               config.only.end();
  };
  const std::uint64_t seed = config.seed;
  const unsigned threads = config.threads;
  std::vector<AuditReport> out;

  const Field gf8 = Field::make(2, 3);
  const ReedSolomon rs82(gf8, 8, 2);
  std::optional<BinaryCodeInstance> bch63;
  auto bch = [&]() -> const BinaryCodeInstance& {
    if (!bch63) bch63 = bch_make(6, 3);
    return *bch63;
  };

  if (wanted("unique-index")) {
    out.push_back(unique_count_montecarlo(100000, 100, 1.0 / 3.0, seed, threads));
  }
  if (wanted("erasure-fraction")) {
    out.push_back(erasure_fraction_audit(1024, 1000, seed, threads));
  }
  if (wanted("ball-size")) out.push_back(ball_size_audit(1000, seed));
  if (wanted("rand-far")) {
    // Four erasures keep the hit probability (1/8) large enough for the
    // 3-sigma band to be meaningful at this trial count.
    RandFarSetup rs_setup;
    rs_setup.code = &rs82.code();
    rs_setup.erasures = {4, 5, 6, 7};
    rs_setup.radius = 0;
    rs_setup.min_distance = 8 - 2;
    rs_setup.trials = 10000;
    rs_setup.seed = seed;
    rs_setup.decoder = [&](const ReceivedWord& w) { return rs82.decode(w); };
    rs_setup.cross_check = true;
    rs_setup.threads = threads;
    out.push_back(rand_far_audit(rs_setup));

    const BinaryCodeInstance& b = bch();
    RandFarSetup bch_setup;
    bch_setup.code = &b.code;
    bch_setup.radius = 1;
    bch_setup.min_distance = 2 * b.t + 1;
    bch_setup.trials = 100000;
    bch_setup.seed = seed;
    bch_setup.decoder = [&](const ReceivedWord& w) -> std::optional<Word> {
      Word full(w.size());
      for (std::size_t i = 0; i < w.size(); ++i) full[i] = w.value(i);
      return bch_decode(b, full);
    };
    bch_setup.threads = threads;
    out.push_back(rand_far_audit(bch_setup));
  }
  if (wanted("kwise")) {
    out.push_back(kwise_audit(rs82.code(), 3, KwiseMode::exhaustive));
    const BinaryCodeInstance& b = bch();
    out.push_back(kwise_audit(b.code, b.dual_lb - 1, KwiseMode::sampled, 10000, seed));
  }
  if (wanted("sn-invariance")) out.push_back(sn_invariance_exact(2, 1));
  if (wanted("tuple-kwise")) {
    out.push_back(tuple_kwise_exact(1, 2, 1));
    out.push_back(tuple_kwise_exact(2, 2, 1));
    out.push_back(tuple_kwise_exact(3, 2, 1));
  }
  if (wanted("dual-distance")) {
    out.push_back(rs_dual_distance_audit(rs82));
    out.push_back(rs_dual_distance_audit(ReedSolomon(gf8, 8, 4)));
    out.push_back(bch_dual_distance_audit(bch()));
  }
  return out;
}

bool all_pass(const std::vector<AuditReport>& reports) {
  return std::none_of(reports.begin(), reports.end(), [](const AuditReport& r) {
    return r.pass.has_value() && !*r.pass;
  });
}

void write_table(std::ostream& out, const ResultTable& table,
                 const std::string& format) {
  if (format == "json") {
    ordered_json doc;
    doc["experiment"] = table.experiment;
    doc["rows"] = ordered_json::array();
    for (const auto& r : table.rows) {
      ordered_json j;
      j["experiment"] = r.experiment;
      j["n"] = r.n;
      j["k_or_t"] = r.k_or_t;
      j["delta"] = r.delta;
      j["hypothesis"] = r.hypothesis;
      j["trials"] = r.trials;
      j["successes"] = r.successes;
      j["metric"] = r.metric;
      j["ci_low"] = r.ci_low;
      j["ci_high"] = r.ci_high;
      j["seed"] = r.seed;
      if (r.beta) j["beta"] = *r.beta;
      doc["rows"].push_back(std::move(j));
    }
    if (!table.trials.empty()) {
      doc["trials"] = ordered_json::array();
      for (const auto& t : table.trials) {
        ordered_json j;
        j["hypothesis"] = t.hypothesis;
        j["trial"] = t.trial;
        j["decision"] = t.decision;
        j["status"] = t.status;
        j["distance"] = t.distance;
        j["erasures"] = t.erasures;
        j["threshold"] = t.threshold;
        if (t.beta) j["beta"] = *t.beta;
        doc["trials"].push_back(std::move(j));
      }
    }
    out << doc.dump(2) << '\n';
    return;
  }
  if (format != "csv") throw ConfigError("unknown format '" + format + "'");
  out << "experiment,n,k_or_t,delta,hypothesis,trials,successes,metric,ci_low,"
         "ci_high,seed";
  if (table.has_beta) out << ",beta";
  out << '\n';
  for (const auto& r : table.rows) {
    out << r.experiment << ',' << r.n << ',' << r.k_or_t << ','
        << format_number(r.delta) << ',' << r.hypothesis << ',' << r.trials
        << ',' << r.successes << ',' << format_number(r.metric) << ','
        << format_number(r.ci_low) << ',' << format_number(r.ci_high) << ','
        << r.seed;
    if (table.has_beta) out << ',' << format_number(r.beta.value_or(0.0));
    out << '\n';
  }
  if (!table.trials.empty()) {
    out << "\nhypothesis,trial,decision,status,distance,erasures,threshold";
    if (table.has_beta) out << ",beta";
    out << '\n';
    for (const auto& t : table.trials) {
      out << t.hypothesis << ',' << t.trial << ',' << t.decision << ','
          << t.status << ',' << t.distance << ',' << t.erasures << ','
          << t.threshold;
      if (table.has_beta) out << ',' << format_number(t.beta.value_or(0.0));
      out << '\n';
    }
  }
}

void write_audits(std::ostream& out, const std::vector<AuditReport>& reports,
                  const std::string& format) {
  if (format == "json") {
    ordered_json doc = ordered_json::array();
    for (const auto& r : reports) doc.push_back(to_json(r));
    out << doc.dump(2) << '\n';
    return;
  }
  if (format != "csv") throw ConfigError("unknown format '" + format + "'");
  out << "name,observed,expected,tolerance,pass,parameters\n";
  for (const auto& r : reports) {
    std::string params = r.parameters.dump();
    std::string quoted;
    for (char c : params) {
      if (c == '"') quoted += '"';
      quoted += c;
    }
    out << r.name << ',' << format_number(r.observed) << ','
        << format_number(r.expected) << ',' << format_number(r.tolerance) << ','
        << (r.pass ? (*r.pass ? "true" : "false") : "n/a") << ",\"" << quoted
        << "\"\n";
  }
}

void run_dump(const ExperimentConfig& config, std::ostream& out) {
  if (config.hypothesis != "null" && config.hypothesis != "planted") {
    throw ConfigError("hypothesis must be null or planted");
  }
  const bool planted = config.hypothesis == "planted";
  if (config.model == "thm1") {
    const Thm1Context ctx(config);
    const auto x = planted ? ctx.planted_sample(config.seed, 0)
                           : ctx.null_sample(config.seed, 0);
    write_dump(out, std::span<const RealSymbol>(x));
  } else if (config.model == "thm2") {
    const Thm2Params p = resolve_thm2(config);
    const BinaryCodeInstance inst = bch_make(p.m, p.t);
    Word x;
    if (planted) {
      Rng rng = Rng::stream(config.seed, "thm2/planted", 0);
      Rng noise = Rng::stream(config.seed, "thm2/tdelta", 0);
      x = t_delta_bits(sample_planted_thm2(inst, rng), p.delta, noise).sample;
    } else {
      Rng rng = Rng::stream(config.seed, "thm2/null", 0);
      x = sample_null_bits(p.n, rng);
    }
    write_dump(out, std::span<const FieldElement>(x));
  } else {
    throw ConfigError("model must be thm1 or thm2");
  }
}

void run_code_info(const ExperimentConfig& config, std::ostream& out) {
  if (config.code_path.empty()) throw ConfigError("code-info needs --code");
  const LinearCode code = load_code(config.code_path);
  ordered_json j;
  j["q"] = code.field().order();
  j["n"] = code.length();
  j["dimension"] = code.dimension();
  auto distance = [](const LinearCode& c) -> ordered_json {
    try {
      return min_weight_bruteforce(c);
    } catch (const BudgetExceeded&) {
      return nullptr;
    }
  };
  j["min_distance"] = distance(code);
  j["dual_distance"] = distance(dual_code(code));
  out << j.dump(2) << '\n';
}

void run_export_code(const ExperimentConfig& config, std::ostream& out) {
  if (config.model == "thm1") {
    ExperimentConfig relaxed = config;
    relaxed.delta = 0.0;
    const Thm1Params p = resolve_thm1(relaxed);
    write_code(out, ReedSolomon(Field::make(2, p.m), p.n, p.k).code());
  } else if (config.model == "thm2") {
    const Thm2Params p = resolve_thm2(config);
    write_code(out, bch_make(p.m, p.t).code);
  } else {
    throw ConfigError("model must be thm1 or thm2");
  }
}

}  // namespace lowdeg
