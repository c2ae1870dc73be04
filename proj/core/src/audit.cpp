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

#include "lowdeg/audit.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

#include "lowdeg/distinguishers.hpp"
#include "lowdeg/parallel.hpp"
#include "lowdeg/rng.hpp"

namespace lowdeg {

namespace {

using boost::multiprecision::cpp_int;

// Tiny absolute slack so that exact agreement survives rounding in the
// analytic expressions.
constexpr double kSlack = 1e-12;

bool within(double observed, double expected, double tolerance) {
  return std::abs(observed - expected) <= tolerance + kSlack;
}

// Calls visit(subset) for every subset of [n] of size `size`, in
// lexicographic order. Stops early when visit returns false.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t size, Visit&& visit) {
  if (size > n) return true;
  std::vector<std::size_t> idx(size);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    if (!visit(std::span<const std::size_t>(idx))) return false;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::uint64_t binomial_u64(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  cpp_int r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  if (r > std::numeric_limits<std::uint64_t>::max()) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

std::uint64_t ipow(std::uint64_t base, std::size_t exp) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) r *= base;
  return r;
}

std::size_t unique_count(std::size_t n, Rng& rng, std::vector<std::uint8_t>& occ) {
  occ.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    auto& o = occ[rng.below(n)];
    if (o < 2) ++o;
  }
  return static_cast<std::size_t>(std::count(occ.begin(), occ.end(), 1));
}

nlohmann::ordered_json subset_json(std::span<const std::size_t> subset) {
  auto arr = nlohmann::ordered_json::array();
  for (std::size_t s : subset) arr.push_back(s);
  return arr;
}

}  // namespace

nlohmann::ordered_json to_json(const AuditReport& report) {
  nlohmann::ordered_json j;
  j["name"] = report.name;
  j["parameters"] = report.parameters;
  j["observed"] = report.observed;
  j["expected"] = report.expected;
  j["tolerance"] = report.tolerance;
  if (report.pass) {
    j["pass"] = *report.pass;
  } else {
    j["pass"] = nullptr;
  }
  return j;
}

double unique_mean_analytic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("unique_mean_analytic: n must be >= 1");
  const double nd = static_cast<double>(n);
  return nd * std::pow(1.0 - 1.0 / nd, nd - 1.0);
}

double unique_variance_analytic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("unique_variance_analytic: n must be >= 1");
  const double nd = static_cast<double>(n);
  const double mean = unique_mean_analytic(n);
  const double pair =
      n < 2 ? 0.0 : (nd - 1.0) / nd * std::pow(1.0 - 2.0 / nd, nd - 2.0);
  // E[X^2] = E[X] + sum over ordered pairs of values a != b.
  const double second = mean + nd * (nd - 1.0) * pair;
  return std::max(0.0, second - mean * mean);
}

AuditReport unique_count_montecarlo(std::size_t n, std::uint64_t trials,
                                    double min_fraction, std::uint64_t seed,
                                    unsigned threads) {
  AuditReport r;
  r.name = "unique-index";
  r.parameters["n"] = n;
  r.parameters["trials"] = trials;
  r.parameters["min_fraction"] = min_fraction;
  r.parameters["seed"] = seed;
  if (n == 0 || trials == 0) {
    r.parameters["note"] = "no trials";
    return r;
  }
  std::vector<double> fraction(trials);
  parallel_for(trials, threads, [&](std::uint64_t t) {
    Rng rng = Rng::stream(seed, "audit/unique", t);
    std::vector<std::uint8_t> occ;
    fraction[t] = static_cast<double>(unique_count(n, rng, occ)) /
                  static_cast<double>(n);
  });
  double sum = 0.0;
  for (double f : fraction) sum += f;
  const double mean = sum / static_cast<double>(trials);
  const double minimum = *std::min_element(fraction.begin(), fraction.end());
  const double nd = static_cast<double>(n);
  const double sigma = std::sqrt(unique_variance_analytic(n)) / nd /
                       std::sqrt(static_cast<double>(trials));
  r.observed = mean;
  r.expected = unique_mean_analytic(n) / nd;
  r.tolerance = 3.0 * sigma;
  r.parameters["observed_min"] = minimum;
  r.parameters["sigma_of_mean"] = sigma;
  r.pass = within(r.observed, r.expected, r.tolerance) && minimum >= min_fraction;
  return r;
}

double erasure_fraction_rate_analytic(std::size_t n) {
  if (n == 0) throw std::invalid_argument("erasure_fraction_rate_analytic: n must be >= 1");
  // Erasures <= 2n/3 iff unique >= ceil(n/3). Normal approximation with a
  // continuity correction.
  const double mean = unique_mean_analytic(n);
  const double sd = std::sqrt(unique_variance_analytic(n));
  const double cut = std::ceil(static_cast<double>(n) / 3.0 - 1e-9) - 0.5;
  if (sd == 0.0) return mean >= cut ? 1.0 : 0.0;
  return 0.5 * std::erfc((cut - mean) / (sd * std::numbers::sqrt2));
}

AuditReport erasure_fraction_audit(std::size_t n, std::uint64_t trials,
                                   std::uint64_t seed, unsigned threads) {
  AuditReport r;
  r.name = "erasure-fraction";
  r.parameters["n"] = n;
  r.parameters["trials"] = trials;
  r.parameters["max_erasure_fraction"] = 2.0 / 3.0;
  r.parameters["seed"] = seed;
  if (n == 0 || trials == 0) {
    r.parameters["note"] = "no trials";
    return r;
  }
  std::vector<double> erased(trials);
  parallel_for(trials, threads, [&](std::uint64_t t) {
    Rng rng = Rng::stream(seed, "audit/erasure", t);
    std::vector<std::uint8_t> occ;
    erased[t] = 1.0 - static_cast<double>(unique_count(n, rng, occ)) /
                          static_cast<double>(n);
  });
  std::uint64_t ok = 0;
  double sum = 0.0;
  for (double e : erased) {
    ok += e <= 2.0 / 3.0 ? 1 : 0;
    sum += e;
  }
  const double p = erasure_fraction_rate_analytic(n);
  r.observed = static_cast<double>(ok) / static_cast<double>(trials);
  r.expected = p;
  r.tolerance = 3.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
  r.parameters["bound"] = "one-sided, observed >= expected - tolerance";
  r.parameters["mean_erasure_fraction"] = sum / static_cast<double>(trials);
  r.parameters["limit_erasure_fraction"] = 1.0 - 1.0 / std::numbers::e;
  r.pass = r.observed >= r.expected - r.tolerance - kSlack;
  return r;
}

BallSize ball_size(std::size_t n, std::size_t s, std::size_t r, std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("ball_size: q must be >= 2");
  if (s > n || r > n - s) {
    throw std::invalid_argument("ball_size: need r <= n - s");
  }
  const std::size_t big_n = n - s;
  cpp_int binom = 1;
  cpp_int power = 1;
  cpp_int exact = 1;  // i = 0 term
  for (std::size_t i = 0; i < r; ++i) {
    binom = binom * (big_n - i) / (i + 1);
    power *= (q - 1);
    exact += binom * power;
  }
  const cpp_int lower = binom * power;
  const cpp_int upper = lower * (r + 1);
  BallSize out;
  out.exact = exact.str();
  out.lower = lower.str();
  out.upper = upper.str();
  out.within = lower <= exact && exact <= upper;
  out.monotone_regime =
      cpp_int(r) * q <= cpp_int(big_n + 1) * (q - 1);
  return out;
}

AuditReport ball_size_audit(std::uint64_t samples, std::uint64_t seed) {
  AuditReport r;
  r.name = "ball-size";
  r.parameters["samples"] = samples;
  r.parameters["seed"] = seed;
  r.parameters["n_max"] = 512;
  r.parameters["q_max"] = 1024;
  r.parameters["regime"] = "r <= (n-s+1)(q-1)/q";
  Rng rng = Rng::stream(seed, "audit/ball", 0);
  std::uint64_t ok = 0;
  auto first_failure = nlohmann::ordered_json();
  for (std::uint64_t i = 0; i < samples; ++i) {
    const std::uint64_t q = 2 + rng.below(1023);
    const std::size_t n = 1 + rng.below(512);
    const std::size_t s = rng.below(n);
    const std::size_t big_n = n - s;
    const std::size_t rmax =
        std::min<std::size_t>(big_n, (big_n + 1) * (q - 1) / q);
    const std::size_t radius = rng.below(rmax + 1);
    const BallSize b = ball_size(n, s, radius, q);
    if (b.within && b.monotone_regime) {
      ++ok;
    } else if (first_failure.is_null()) {
      first_failure = {{"n", n}, {"s", s}, {"r", radius}, {"q", q},
                       {"exact", b.exact}, {"lower", b.lower}, {"upper", b.upper}};
    }
  }
  r.observed = static_cast<double>(ok);
  r.expected = static_cast<double>(samples);
  r.tolerance = 0.0;
  if (!first_failure.is_null()) r.parameters["first_failure"] = first_failure;
  r.pass = ok == samples;
  return r;
}

AuditReport rand_far_audit(const RandFarSetup& setup) {
  if (setup.code == nullptr) throw std::invalid_argument("rand_far_audit: no code");
  const LinearCode& code = *setup.code;
  const std::size_t n = code.length();
  const std::uint64_t q = code.field().order();
  const std::size_t s = setup.erasures.size();
  const std::size_t radius = setup.radius;

  AuditReport r;
  r.name = "rand-far";
  r.parameters["n"] = n;
  r.parameters["q"] = q;
  r.parameters["dimension"] = code.dimension();
  r.parameters["erasures"] = s;
  r.parameters["r"] = radius;
  r.parameters["trials"] = setup.trials;
  r.parameters["seed"] = setup.seed;
  const double generic_bound =
      static_cast<double>(radius + 1) * std::ldexp(1.0, -static_cast<int>(radius));
  r.parameters["generic_bound"] = generic_bound;

  std::vector<bool> erased(n, false);
  for (std::size_t i : setup.erasures) {
    if (i >= n) throw std::out_of_range("rand_far_audit: erasure outside word");
    erased[i] = true;
  }

  std::string not_applicable;
  if (setup.trials == 0) {
    not_applicable = "no trials";
  } else if (4 * radius + s >= setup.min_distance) {
    not_applicable = "code not decodable from 2r errors and |S| erasures";
  } else if (static_cast<double>(radius) >
             static_cast<double>(n - s) / (8.0 * std::numbers::e)) {
    not_applicable = "r > (n - |S|)/(8e)";
  }
  if (!not_applicable.empty()) {
    r.parameters["note"] = not_applicable;
    return r;
  }

  // Balls of radius r around the restricted codewords are disjoint, so the
  // hit probability is |C| |B_r| / q^(n-s).
  const BallSize ball = ball_size(n, s, radius, q);
  const double closed =
      static_cast<double>(cpp_int(ball.exact)) *
      std::pow(static_cast<double>(q),
               static_cast<double>(code.dimension()) - static_cast<double>(n - s));

  std::vector<Word> codebook;
  const bool exhaustive = !setup.decoder || setup.cross_check;
  if (exhaustive) {
    for_each_codeword(code, [&](std::span<const FieldElement> c) {
      codebook.emplace_back(c.begin(), c.end());
    });
  }
  auto near_exhaustive = [&](const ReceivedWord& rw) {
    for (const Word& c : codebook) {
      if (restricted_hamming(rw, c) <= radius) return true;
    }
    return false;
  };
  auto near_decoder = [&](const ReceivedWord& rw) {
    const auto c = setup.decoder(rw);
    return c && code.contains(*c) && restricted_hamming(rw, *c) <= radius;
  };

  std::vector<std::uint8_t> hit(setup.trials, 0);
  std::vector<std::uint8_t> mismatch(setup.trials, 0);
  parallel_for(setup.trials, setup.threads, [&](std::uint64_t t) {
    Rng rng = Rng::stream(setup.seed, "audit/rand-far", t);
    ReceivedWord rw(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (!erased[i]) rw.set(i, FieldElement{static_cast<std::uint32_t>(rng.below(q))});
    }
    const bool h = setup.decoder ? near_decoder(rw) : near_exhaustive(rw);
    hit[t] = h;
    if (setup.decoder && setup.cross_check) mismatch[t] = h != near_exhaustive(rw);
  });
  const auto hits = std::accumulate(hit.begin(), hit.end(), std::uint64_t{0});
  const auto mismatches =
      std::accumulate(mismatch.begin(), mismatch.end(), std::uint64_t{0});

  const double trials = static_cast<double>(setup.trials);
  const double sigma = std::sqrt(closed * (1.0 - closed) / trials);
  r.observed = static_cast<double>(hits) / trials;
  r.expected = closed;
  r.tolerance = 3.0 * sigma;
  r.parameters["hits"] = hits;
  r.parameters["method"] = setup.decoder ? "decoder" : "exhaustive";
  if (setup.decoder && setup.cross_check) r.parameters["mismatches"] = mismatches;
  r.pass = within(r.observed, r.expected, r.tolerance) &&
           r.observed <= generic_bound + r.tolerance && mismatches == 0;
  return r;
}

AuditReport kwise_audit(const LinearCode& code, std::size_t max_subset,
                        KwiseMode mode, std::uint64_t samples,
                        std::uint64_t seed, std::uint64_t budget) {
  const std::size_t n = code.length();
  const std::uint64_t q = code.field().order();
  const std::size_t d = std::min(max_subset, n);
  AuditReport r;
  r.name = "kwise";
  r.parameters["n"] = n;
  r.parameters["q"] = q;
  r.parameters["dimension"] = code.dimension();
  r.parameters["D"] = max_subset;
  r.parameters["mode"] = mode == KwiseMode::exhaustive ? "exhaustive" : "sampled";
  r.tolerance = 0.0;
  if (d == 0) {
    r.parameters["note"] = "vacuous";
    r.pass = true;
    return r;
  }

  std::uint64_t checked = 0;
  std::uint64_t passed = 0;
  nlohmann::ordered_json first_failure;

  if (mode == KwiseMode::exhaustive) {
    std::uint64_t subsets = 0;
    for (std::size_t s = 1; s <= d; ++s) subsets += binomial_u64(n, s);
    const std::uint64_t size = codebook_size(code);
    if (size > budget || subsets > budget / std::max<std::uint64_t>(size, 1)) {
      throw BudgetExceeded("kwise_audit: enumeration exceeds budget");
    }
    std::vector<Word> codebook;
    codebook.reserve(size);
    for_each_codeword(code, [&](std::span<const FieldElement> c) {
      codebook.emplace_back(c.begin(), c.end());
    });
    std::vector<std::uint64_t> counts;
    for (std::size_t s = 1; s <= d; ++s) {
      for_each_subset(n, s, [&](std::span<const std::size_t> subset) {
        ++checked;
        bool ok = subset_rank_uniform(code, subset);
        // A uniform marginal needs q^|S| to divide |C|.
        const double patterns = std::pow(static_cast<double>(q), static_cast<double>(s));
        if (patterns > static_cast<double>(size)) {
          ok = false;
        } else {
          const std::uint64_t p = ipow(q, s);
          counts.assign(p, 0);
          for (const Word& c : codebook) {
            std::uint64_t key = 0;
            for (std::size_t i : subset) key = key * q + c[i].index;
            ++counts[key];
          }
          const bool exact =
              size % p == 0 &&
              std::all_of(counts.begin(), counts.end(),
                          [&](std::uint64_t v) { return v == size / p; });
          if (exact != ok) {
            // The rank criterion and the enumeration must agree.
            r.parameters["criterion_disagreement"] = subset_json(subset);
          }
          ok = ok && exact;
        }
        if (ok) {
          ++passed;
        } else if (first_failure.is_null()) {
          first_failure = subset_json(subset);
        }
        return true;
      });
    }
  } else {
    Rng rng = Rng::stream(seed, "audit/kwise", 0);
    r.parameters["samples"] = samples;
    r.parameters["seed"] = seed;
    std::vector<std::size_t> pool(n);
    for (std::uint64_t t = 0; t < samples; ++t) {
      const std::size_t s = 1 + rng.below(d);
      std::iota(pool.begin(), pool.end(), std::size_t{0});
      for (std::size_t i = 0; i < s; ++i) {
        std::swap(pool[i], pool[i + rng.below(n - i)]);
      }
      std::vector<std::size_t> subset(pool.begin(), pool.begin() + s);
      std::sort(subset.begin(), subset.end());
      ++checked;
      if (subset_rank_uniform(code, subset)) {
        ++passed;
      } else if (first_failure.is_null()) {
        first_failure = subset_json(subset);
      }
    }
  }
  r.parameters["subsets"] = checked;
  if (!first_failure.is_null()) r.parameters["first_failure"] = first_failure;
  r.observed = static_cast<double>(passed);
  r.expected = static_cast<double>(checked);
  r.pass = passed == checked && !r.parameters.contains("criterion_disagreement");
  return r;
}

ExactPlantedPmf planted_pmf_exact(unsigned m, std::size_t k) {
  if (m < 1 || m > 2) {
    throw std::invalid_argument("planted_pmf_exact: m must be 1 or 2");
  }
  const std::size_t n = std::size_t{1} << m;
  const std::uint64_t q = n;
  const Field f = Field::make(2, m);
  const ReedSolomon rs(f, n, k);

  ExactPlantedPmf pmf;
  pmf.n = n;
  pmf.symbols_per_coordinate = n * q;
  pmf.denominator = ipow(q, k + 1) * ipow(n, n) * ipow(q, n);
  pmf.mass.assign(ipow(pmf.symbols_per_coordinate, n), 0);

  std::vector<std::uint32_t> j(n);
  std::vector<std::uint32_t> occ(n + 1);
  std::vector<std::size_t> free_positions;
  std::vector<std::uint64_t> symbol(n);
  for_each_codeword(rs.code(), [&](std::span<const FieldElement> c) {
    const std::uint64_t vectors = ipow(n, n);
    for (std::uint64_t v = 0; v < vectors; ++v) {
      std::uint64_t rest = v;
      for (std::size_t i = n; i-- > 0;) {
        j[i] = static_cast<std::uint32_t>(rest % n) + 1;
        rest /= n;
      }
      std::fill(occ.begin(), occ.end(), 0);
      for (std::uint32_t x : j) ++occ[x];
      free_positions.clear();
      for (std::size_t i = 0; i < n; ++i) {
        if (occ[j[i]] == 1) {
          symbol[i] = (j[i] - 1) * q + c[j[i] - 1].index;
        } else {
          free_positions.push_back(i);
        }
      }
      const std::uint64_t weight = ipow(q, n - free_positions.size());
      const std::uint64_t branches = ipow(q, free_positions.size());
      for (std::uint64_t b = 0; b < branches; ++b) {
        std::uint64_t yb = b;
        for (std::size_t i : free_positions) {
          symbol[i] = (j[i] - 1) * q + yb % q;
          yb /= q;
        }
        std::uint64_t index = 0;
        for (std::size_t i = 0; i < n; ++i) {
          index = index * pmf.symbols_per_coordinate + symbol[i];
        }
        pmf.mass[index] += weight;
      }
    }
  });
  return pmf;
}

AuditReport sn_invariance_exact(unsigned m, std::size_t k) {
  const ExactPlantedPmf pmf = planted_pmf_exact(m, k);
  const std::size_t n = pmf.n;
  const std::uint64_t base = pmf.symbols_per_coordinate;
  const std::uint64_t total =
      std::accumulate(pmf.mass.begin(), pmf.mass.end(), std::uint64_t{0});

  AuditReport r;
  r.name = "sn-invariance";
  r.parameters["n"] = n;
  r.parameters["q"] = n;
  r.parameters["k"] = k;
  r.parameters["outcomes"] = pmf.mass.size();
  r.parameters["denominator"] = pmf.denominator;
  r.parameters["mass_total"] = total;

  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<std::uint64_t> digits(n);
  std::uint64_t permutations = 0;
  std::uint64_t invariant = 0;
  nlohmann::ordered_json first_failure;
  do {
    ++permutations;
    bool ok = true;
    for (std::uint64_t x = 0; x < pmf.mass.size() && ok; ++x) {
      std::uint64_t rest = x;
      for (std::size_t i = n; i-- > 0;) {
        digits[i] = rest % base;
        rest /= base;
      }
      // (pi x)_i = x_{pi(i)}
      std::uint64_t y = 0;
      for (std::size_t i = 0; i < n; ++i) y = y * base + digits[perm[i]];
      ok = pmf.mass[x] == pmf.mass[y];
    }
    if (ok) {
      ++invariant;
    } else if (first_failure.is_null()) {
      first_failure = subset_json(perm);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));

  r.parameters["permutations"] = permutations;
  if (!first_failure.is_null()) r.parameters["first_failure"] = first_failure;
  r.observed = static_cast<double>(invariant);
  r.expected = static_cast<double>(permutations);
  r.tolerance = 0.0;
  r.pass = invariant == permutations && total == pmf.denominator;
  return r;
}

AuditReport tuple_kwise_exact(std::size_t max_subset, unsigned m, std::size_t k) {
  const ExactPlantedPmf pmf = planted_pmf_exact(m, k);
  const std::size_t n = pmf.n;
  const std::uint64_t base = pmf.symbols_per_coordinate;
  // Dual distance of RS(n, k) is k + 2.
  const std::size_t guaranteed = k + 1;

  AuditReport r;
  r.name = "tuple-kwise";
  r.parameters["n"] = n;
  r.parameters["q"] = n;
  r.parameters["k"] = k;
  r.parameters["D"] = max_subset;
  r.parameters["guaranteed_up_to"] = guaranteed;
  r.tolerance = 0.0;

  std::uint64_t checked = 0;
  std::uint64_t uniform = 0;
  nlohmann::ordered_json first_failure;
  std::vector<std::uint64_t> digits(n);
  std::vector<std::uint64_t> marginal;
  for (std::size_t s = 1; s <= std::min(max_subset, n); ++s) {
    const std::uint64_t outcomes = ipow(base, s);
    for_each_subset(n, s, [&](std::span<const std::size_t> subset) {
      ++checked;
      marginal.assign(outcomes, 0);
      for (std::uint64_t x = 0; x < pmf.mass.size(); ++x) {
        if (pmf.mass[x] == 0) continue;
        std::uint64_t rest = x;
        for (std::size_t i = n; i-- > 0;) {
          digits[i] = rest % base;
          rest /= base;
        }
        std::uint64_t key = 0;
        for (std::size_t i : subset) key = key * base + digits[i];
        marginal[key] += pmf.mass[x];
      }
      const bool ok =
          pmf.denominator % outcomes == 0 &&
          std::all_of(marginal.begin(), marginal.end(), [&](std::uint64_t v) {
            return v == pmf.denominator / outcomes;
          });
      if (ok) {
        ++uniform;
      } else if (first_failure.is_null()) {
        first_failure = subset_json(subset);
      }
      return true;
    });
  }
  r.parameters["subsets"] = checked;
  r.observed = static_cast<double>(uniform);
  r.expected = static_cast<double>(checked);
  if (max_subset <= guaranteed) {
    if (!first_failure.is_null()) r.parameters["first_failure"] = first_failure;
    r.pass = uniform == checked;
  } else {
    r.parameters["note"] = "informational: D exceeds dual distance - 1";
    r.parameters["first_failure"] =
        first_failure.is_null() ? nlohmann::ordered_json("none") : first_failure;
  }
  return r;
}

AuditReport rs_dual_distance_audit(const ReedSolomon& rs) {
  AuditReport r;
  r.name = "dual-distance";
  r.parameters["code"] = "reed-solomon";
  r.parameters["n"] = rs.params().n;
  r.parameters["q"] = rs.params().field.order();
  r.parameters["k"] = rs.params().k;
  r.observed = static_cast<double>(min_weight_bruteforce(dual_code(rs.code())));
  r.expected = static_cast<double>(rs.params().k + 2);
  r.tolerance = 0.0;
  r.pass = r.observed == r.expected;
  return r;
}

AuditReport bch_dual_distance_audit(const BinaryCodeInstance& instance) {
  AuditReport r;
  r.name = "dual-distance";
  r.parameters["code"] = "bch";
  r.parameters["n"] = instance.length();
  r.parameters["t"] = instance.t;
  r.parameters["dimension"] = instance.code.dimension();
  r.parameters["bound"] = "analytic, one-sided";
  r.observed = static_cast<double>(min_weight_bruteforce(dual_code(instance.code)));
  r.expected = bch_dual_analytic_bound(instance.m, instance.t);
  r.tolerance = 0.0;
  r.pass = r.observed >= r.expected;
  return r;
}

}  // namespace lowdeg
