#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "airtime/problem.hpp"

namespace airtime::testing {

enum class UtilityMix { linear_only, linear_and_log, all };

struct RandomProblemOptions {
  std::size_t min_players = 2;
  std::size_t max_players = 6;
  double max_beta = 3.0;
  UtilityMix utilities = UtilityMix::all;
  bool disagreement = true;     // sometimes put x^d above zero
  double min_fill = 0.15;       // T as a fraction of total demand
  double max_fill = 0.95;
};

inline UtilityEvaluator random_utility(std::mt19937_64& rng, UtilityMix mix) {
  const int kinds = mix == UtilityMix::linear_only ? 1 : mix == UtilityMix::linear_and_log ? 2 : 3;
  const int kind = std::uniform_int_distribution<int>(0, kinds - 1)(rng);
  if (kind == 1) return UtilityEvaluator::log_shifted(std::uniform_real_distribution(0.2, 5.0)(rng));
  if (kind == 2) return UtilityEvaluator::power(std::uniform_real_distribution(0.3, 1.0)(rng));
  return UtilityEvaluator::normalized_linear();
}

/// Unsaturated, feasible instance. Player 0 is the GO (beta = 0); client
/// betas are uniform in [0.05, max_beta].
inline BargainingProblem random_problem(std::mt19937_64& rng, const RandomProblemOptions& opt = {}) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n =
      std::uniform_int_distribution<std::size_t>(opt.min_players, opt.max_players)(rng);
  const double rb = 11.0;
  const UtilityEvaluator shared = random_utility(rng, opt.utilities);
  const bool mixed = unit(rng) < 0.5;
  std::vector<Player> players;
  double demand = 0.0;
  std::vector<double> betas;
  for (std::size_t i = 0; i < n; ++i) {
    Player p;
    p.id = node_id(static_cast<std::uint32_t>(i + 1));
    p.role = i == 0 ? Role::go : Role::client;
    p.data_mb = 1.0 + 99.0 * unit(rng);
    const double beta = i == 0 ? 0.0 : 0.05 + (opt.max_beta - 0.05) * unit(rng);
    p.upload_mbps = i == 0 ? rb : rb / beta;
    p.alpha = 0.2 + 2.8 * unit(rng);
    p.utility = mixed ? random_utility(rng, opt.utilities) : shared;
    demand += (1.0 + beta) * p.data_mb / rb;
    betas.push_back(beta);
    players.push_back(p);
  }
  const double airtime = demand * (opt.min_fill + (opt.max_fill - opt.min_fill) * unit(rng));
  if (opt.disagreement && unit(rng) < 0.5) {
    // Disagreement points use at most 40% of the budget.
    for (std::size_t i = 0; i < n; ++i) {
      const double cap = players[i].data_mb / rb;
      const double share = unit(rng) * 0.4 * airtime / (1.0 + betas[i]) / static_cast<double>(n);
      players[i].disagreement_s = std::min(share, 0.5 * cap);
    }
  }
  return BargainingProblem(std::move(players), airtime, rb);
}

/// Uniform sample of a feasible point strictly above disagreement: random
/// direction in the box, scaled to use a random share of the free budget.
inline std::vector<double> random_feasible_point(std::mt19937_64& rng, const BargainingProblem& p) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> x(p.size(), 0.0);
  double floor = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.active(i)) floor += (1.0 + p.beta(i)) * p.disagreement(i);
  }
  const double free = p.airtime() - floor;
  std::vector<double> w(p.size(), 0.0);
  double used = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.active(i)) continue;
    w[i] = (0.01 + unit(rng)) * (p.cap(i) - p.disagreement(i));
    used += (1.0 + p.beta(i)) * w[i];
  }
  const double scale = std::min(1.0, free / used) * (0.05 + 0.95 * unit(rng));
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p.active(i)) x[i] = p.disagreement(i) + scale * w[i];
  }
  return x;
}

}  // namespace airtime::testing
