// Copyright 2026 The fpbudget Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "reference/reference.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "fpbudget/one_sided_bidder.h"
#include "fpbudget/random.h"

namespace fpbudget::reference {

namespace {

std::vector<double> GridPoints(int size, double upper) {
  std::vector<double> points(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) {
    points[i] = static_cast<double>(i) * upper / static_cast<double>(size);
  }
  return points;
}

double Width(int64_t count, const ExperimentConfig& c) {
  const double t = static_cast<double>(c.horizon);
  return c.value_bound *
         std::sqrt(4.0 * std::log(t) *
                   std::log(static_cast<double>(c.bid_grid) * t /
                            c.failure_prob) /
                   static_cast<double>(count));
}

struct LoggedRound {
  std::size_t bid_index;
  bool won;
  double competing;  // Only read for lost rounds.
};

template <typename... Args>
std::string Format(const Args&... args) {
  std::ostringstream out;
  (out << ... << args);
  return out.str();
}

}  // namespace

std::vector<Draw> DrawStream(const ExperimentConfig& config, uint64_t seed) {
  Rng rng(seed);
  std::vector<Draw> draws;
  draws.reserve(static_cast<std::size_t>(config.horizon));
  for (int64_t t = 0; t < config.horizon; ++t) {
    const double v = SampleValue(config.value_dist, config.value_bound, rng);
    const double d = SampleCompetingBid(config.competing_dist, rng);
    draws.push_back({v, d});
  }
  return draws;
}

std::vector<NaiveRound> NaiveFullFeedback(const ExperimentConfig& config,
                                          const std::vector<Draw>& draws) {
  const std::vector<double> bids = GridPoints(config.bid_grid, config.value_bound);
  const double rho = config.budget / static_cast<double>(config.horizon);
  double lambda = 0.0;
  double budget = config.budget;
  std::vector<double> seen;
  std::vector<NaiveRound> out;

  for (int64_t t = 1; t <= config.horizon; ++t) {
    const auto [v, d] = draws[t - 1];
    NaiveRound round;
    round.t = t;
    round.lambda = lambda;
    if (t > 1) {
      std::size_t best = 0;
      double best_objective = 0.0;
      double best_cost = 0.0;
      for (std::size_t k = 0; k < bids.size(); ++k) {
        int64_t below = 0;
        for (double ds : seen) below += bids[k] >= ds ? 1 : 0;
        const double g = static_cast<double>(below) / static_cast<double>(t - 1);
        const double r = g * (v - bids[k]);
        const double c = g * bids[k];
        const double objective = r - lambda * c;
        if (k == 0 || objective > best_objective) {
          best = k;
          best_objective = objective;
          best_cost = c;
        }
      }
      round.bid_index = best;
      if (config.budget_control) {
        lambda = std::max(0.0, lambda - config.step_size * (rho - best_cost));
      }
    }
    const double b = bids[round.bid_index];
    round.won = b >= d;
    out.push_back(round);
    seen.push_back(d);
    budget -= round.won ? b : 0.0;
    if (budget < config.value_bound) break;
  }
  return out;
}

std::vector<NaiveRound> NaiveOneSided(const ExperimentConfig& config,
                                      const std::vector<Draw>& draws) {
  const std::size_t K = static_cast<std::size_t>(config.bid_grid);
  const std::size_t M = static_cast<std::size_t>(config.value_grid);
  const std::vector<double> bids = GridPoints(config.bid_grid, config.value_bound);
  const std::vector<double> values =
      GridPoints(config.value_grid, config.value_bound);
  const double rho = config.budget / static_cast<double>(config.horizon);

  std::vector<std::vector<bool>> sets(M, std::vector<bool>(K, true));
  std::vector<LoggedRound> log;
  double lambda = 0.0;
  double budget = config.budget;
  std::vector<NaiveRound> out;

  for (int64_t t = 1; t <= config.horizon; ++t) {
    const auto [v, d] = draws[t - 1];
    NaiveRound round;
    round.t = t;
    round.lambda = lambda;
    if (t > 1) {
      // Counts and resolved wins straight from the log.
      std::vector<int64_t> n(K, 0);
      std::vector<int64_t> wins(K, 0);
      for (std::size_t k = 0; k < K; ++k) {
        for (const LoggedRound& s : log) {
          if (bids[s.bid_index] <= bids[k]) {
            ++n[k];
            const bool resolved = s.won ? true : bids[k] >= s.competing;
            if (resolved) ++wins[k];
          }
        }
      }
      auto reward = [&](std::size_t m, std::size_t k) {
        return (static_cast<double>(wins[k]) / static_cast<double>(n[k])) *
               (values[m] - bids[k]);
      };

      std::vector<std::size_t> inf(M, K);
      std::vector<int64_t> counts(M, 0);
      for (std::size_t m = 0; m < M; ++m) {
        std::size_t lower = 0;
        for (std::size_t s = 0; s < m; ++s) lower = std::max(lower, inf[s]);
        std::vector<std::size_t> survivors;
        for (std::size_t k = 0; k < K; ++k) {
          if (sets[m][k] && k >= lower) survivors.push_back(k);
        }
        if (survivors.empty()) {
          std::size_t best = K;
          for (std::size_t k = 0; k < K; ++k) {
            if (sets[m][k] && (best == K || reward(m, k) > reward(m, best))) {
              best = k;
            }
          }
          sets[m].assign(K, false);
          sets[m][best] = true;
          counts[m] = n[best];
          inf[m] = best;
          continue;
        }
        int64_t count = n[survivors.front()];
        for (std::size_t k : survivors) count = std::min(count, n[k]);
        counts[m] = count;
        const double w = Width(count, config);
        double top = reward(m, survivors.front());
        for (std::size_t k : survivors) top = std::max(top, reward(m, k));
        sets[m].assign(K, false);
        for (std::size_t k : survivors) {
          if (reward(m, k) >= top - 2.0 * w) sets[m][k] = true;
        }
        for (std::size_t k = 0; k < K; ++k) {
          if (sets[m][k]) {
            inf[m] = k;
            break;
          }
        }
      }

      const double shaded = v / (1.0 + lambda);
      std::size_t m = 0;
      for (std::size_t i = 0; i < M; ++i) {
        if (values[i] <= shaded) m = i;
      }
      round.value_index = static_cast<int>(m);
      round.set_count = counts[m];
      round.bid_index = inf[m];
      const std::size_t k = round.bid_index;
      const double cost_estimate =
          (static_cast<double>(wins[k]) / static_cast<double>(n[k])) * bids[k];
      if (config.budget_control) {
        lambda = std::max(0.0, lambda - config.step_size * (rho - cost_estimate));
      }
    }
    const double b = bids[round.bid_index];
    round.won = b >= d;
    out.push_back(round);
    log.push_back({round.bid_index, round.won, d});
    budget -= round.won ? b : 0.0;
    if (budget < config.value_bound) break;
  }
  return out;
}

ExperimentConfig RandomSmallConfig(uint64_t seed, int64_t max_horizon) {
  Rng rng(seed ^ 0x5eed5eed5eedULL);
  auto uniform_int = [&](int64_t lo, int64_t hi) {
    return lo + static_cast<int64_t>(rng.Uniform() *
                                     static_cast<double>(hi - lo + 1));
  };
  ExperimentConfig c;
  c.horizon = uniform_int(50, max_horizon);
  c.value_bound = rng.Uniform() < 0.5 ? 1.0 : 2.0;
  // Spend rates from tight to slack.
  const double rho = c.value_bound * (0.005 + 0.5 * rng.Uniform());
  c.budget = rho * static_cast<double>(c.horizon);
  c.bid_grid = static_cast<int>(uniform_int(2, 20));
  c.value_grid = c.bid_grid;
  c.step_size = 1.0 / std::sqrt(static_cast<double>(c.horizon));
  c.failure_prob = 0.01;
  c.feedback = rng.Uniform() < 0.5 ? Feedback::kFull : Feedback::kOneSided;
  c.budget_control = rng.Uniform() < 0.75;
  c.repetitions = 1;
  c.seed = seed;
  c.log_stride = 100;
  const double vb = c.value_bound;
  switch (uniform_int(0, 3)) {
    case 0:
      c.value_dist = DistributionSpec::Normal(0.6 * vb, 0.1 * vb);
      break;
    case 1:
      c.value_dist = DistributionSpec::LogNormal(std::log(0.67 * vb), 0.1);
      break;
    case 2:
      c.value_dist = DistributionSpec::Uniform(0.25 * vb, vb);
      break;
    default:
      c.value_dist = DistributionSpec::Uniform(0.0, vb);
      break;
  }
  c.competing_dist = rng.Uniform() < 0.5
                         ? DistributionSpec::Normal(0.4 * vb, 0.1 * vb)
                         : DistributionSpec::Uniform(0.0, vb);
  c.Validate();
  return c;
}

std::vector<NaiveRound> NaiveRun(const ExperimentConfig& config,
                                 uint64_t seed) {
  const std::vector<Draw> draws = DrawStream(config, seed);
  return config.feedback == Feedback::kFull ? NaiveFullFeedback(config, draws)
                                            : NaiveOneSided(config, draws);
}

std::string CompareWithNaive(const ExperimentConfig& config,
                             const Trace& trace) {
  const std::vector<NaiveRound> naive = NaiveRun(config, trace.seed);
  if (static_cast<int64_t>(trace.records.size()) != trace.tau) {
    return "trace does not retain every round";
  }
  if (naive.size() != trace.records.size()) {
    return Format("naive run played ", naive.size(), " rounds, bidder played ",
                  trace.records.size());
  }
  for (std::size_t i = 0; i < naive.size(); ++i) {
    const RoundRecord& r = trace.records[i];
    const NaiveRound& n = naive[i];
    if (r.bid_index != n.bid_index) {
      return Format("round ", r.t, ": bid index ", r.bid_index, " vs naive ",
                    n.bid_index);
    }
    if (r.lambda != n.lambda) {
      return Format("round ", r.t, ": lambda ", r.lambda, " vs naive ",
                    n.lambda);
    }
    if (r.won != n.won) return Format("round ", r.t, ": outcome differs");
    if (r.one_sided && r.t >= 2 &&
        (r.value_index != n.value_index || r.set_count != n.set_count)) {
      return Format("round ", r.t, ": (m, N) = (", r.value_index, ", ",
                    r.set_count, ") vs naive (", n.value_index, ", ",
                    n.set_count, ")");
    }
  }
  return "";
}

std::vector<std::string> CheckTraceInvariants(const ExperimentConfig& config,
                                              const Trace& trace) {
  std::vector<std::string> violations;
  if (static_cast<int64_t>(trace.records.size()) != trace.tau) {
    violations.push_back("trace does not retain every round");
    return violations;
  }

  double spent = 0.0;
  for (const RoundRecord& r : trace.records) {
    spent += r.cost;
    if (r.budget < 0.0) {
      violations.push_back(Format("round ", r.t, ": negative budget ", r.budget));
    }
  }
  if (spent > config.budget * (1.0 + 1e-12)) {
    violations.push_back(Format("total spend ", spent, " exceeds budget ",
                                config.budget));
  }

  if (!trace.one_sided) {
    const double step = config.value_bound / config.bid_grid;
    const bool lambda_bounded =
        config.budget_control && config.step_size * config.rho() < 1.0;
    const double lambda_cap = config.value_bound / config.rho() - 1.0 + 1e-9;
    for (const RoundRecord& r : trace.records) {
      if (r.lambda < 0.0 || (lambda_bounded && r.lambda > lambda_cap)) {
        violations.push_back(
            Format("round ", r.t, ": lambda ", r.lambda, " outside [0, ",
                   lambda_cap, "]"));
      }
      if (r.t >= 2 && r.bid > r.value / (1.0 + r.lambda) + step) {
        violations.push_back(Format("round ", r.t, ": bid ", r.bid,
                                    " above shaded value ", r.shaded_value));
      }
    }
    return violations;
  }

  // Count lower bound over rounds 2..tau with a Fenwick tree on the ranks of
  // the shaded values.
  std::vector<double> sorted;
  for (const RoundRecord& r : trace.records) {
    if (r.t >= 2) sorted.push_back(r.shaded_value);
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<int64_t> tree(sorted.size() + 1, 0);
  for (const RoundRecord& r : trace.records) {
    if (r.t < 2) continue;
    const std::size_t rank = static_cast<std::size_t>(
        std::upper_bound(sorted.begin(), sorted.end(), r.shaded_value) -
        sorted.begin());
    int64_t smaller = 0;
    for (std::size_t i = rank; i > 0; i -= i & (~i + 1)) smaller += tree[i];
    if (r.set_count < 1 + smaller) {
      violations.push_back(Format("round ", r.t, ": N = ", r.set_count,
                                  " below lower bound ", 1 + smaller));
    }
    for (std::size_t i = rank; i < tree.size(); i += i & (~i + 1)) ++tree[i];
  }
  return violations;
}

std::vector<std::string> CheckActiveSetInvariants(
    const ExperimentConfig& config, uint64_t seed, int64_t stride) {
  std::vector<std::string> violations;
  OneSidedBidder bidder(config);
  const std::vector<Draw> draws = DrawStream(config, seed);
  const ActiveSets& sets = bidder.active_sets();
  const std::size_t M = sets.value_grid();
  std::vector<uint64_t> before;

  for (int64_t t = 1; t <= config.horizon && !bidder.halted(); ++t) {
    const bool inspect = t == 2 || (t >= 2 && t % stride == 0);
    if (inspect) {
      before.clear();
      for (std::size_t m = 0; m < M; ++m) {
        const auto ws = sets.words(m);
        before.insert(before.end(), ws.begin(), ws.end());
      }
    }
    bidder.PlayRound(draws[t - 1].value, draws[t - 1].competing);
    if (!inspect) continue;

    std::size_t offset = 0;
    std::size_t previous_inf = 0;
    for (std::size_t m = 0; m < M; ++m) {
      for (uint64_t w : sets.words(m)) {
        if ((w & ~before[offset]) != 0) {
          violations.push_back(Format("round ", t, ": set ", m, " grew"));
        }
        ++offset;
      }
      if (sets.Empty(m)) {
        violations.push_back(Format("round ", t, ": set ", m, " is empty"));
      }
      const std::size_t inf = sets.Infimum(m);
      if (m > 0 && inf < previous_inf) {
        violations.push_back(Format("round ", t, ": infimum of set ", m,
                                    " below that of set ", m - 1));
      }
      previous_inf = inf;
    }
  }
  return violations;
}

std::vector<std::string> CheckCensoringSoundness(const ExperimentConfig& config,
                                                 uint64_t seed) {
  std::vector<std::string> violations;
  ExperimentConfig c = config;
  c.feedback = Feedback::kOneSided;
  OneSidedBidder bidder(c);
  const std::vector<Draw> draws = DrawStream(c, seed);
  const std::vector<double> bids = GridPoints(c.bid_grid, c.value_bound);
  std::vector<int64_t> informed(bids.size(), 0);

  for (int64_t t = 1; t <= c.horizon && !bidder.halted(); ++t) {
    const RoundRecord r = bidder.PlayRound(draws[t - 1].value,
                                           draws[t - 1].competing);
    for (std::size_t k = 0; k < bids.size(); ++k) {
      if (r.bid <= bids[k] && bids[k] >= draws[t - 1].competing) ++informed[k];
    }
    for (std::size_t k = 0; k < bids.size(); ++k) {
      if (bidder.estimator().wins(k) != informed[k]) {
        violations.push_back(Format("round ", t, ": censored win count at k=",
                                    k, " is ", bidder.estimator().wins(k),
                                    ", informed count is ", informed[k]));
        return violations;
      }
    }
  }
  return violations;
}

}  // namespace fpbudget::reference
