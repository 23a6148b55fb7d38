#include "airtime/problem.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include <fmt/format.h>

#include "airtime/errors.hpp"

namespace airtime {

BargainingProblem::BargainingProblem(std::vector<Player> players, double airtime_s,
                                     double broadcast_mbps, Relay relay)
    : players_(std::move(players)),
      airtime_(airtime_s),
      broadcast_rate_(broadcast_mbps),
      relay_(relay) {
  if (players_.empty()) throw InvalidInput("bargaining problem needs at least one player");
  if (!(airtime_ > 0.0) || !std::isfinite(airtime_)) {
    throw InvalidInput("airtime must be positive and finite");
  }
  if (!(broadcast_rate_ > 0.0) || !std::isfinite(broadcast_rate_)) {
    throw InvalidInput("broadcast rate must be positive and finite");
  }

  std::size_t go_count = 0;
  std::unordered_set<std::uint32_t> ids;
  for (std::size_t i = 0; i < players_.size(); ++i) {
    const Player& p = players_[i];
    if (!ids.insert(to_int(p.id)).second) {
      throw InvalidInput(fmt::format("duplicate player id {}", to_int(p.id)));
    }
    if (p.role == Role::go) {
      ++go_count;
      go_index_ = i;
    }
    if (!(p.data_mb >= 0.0) || !std::isfinite(p.data_mb)) {
      throw InvalidInput(fmt::format("player {}: data size must be >= 0", to_int(p.id)));
    }
    if (!(p.alpha > 0.0) || !std::isfinite(p.alpha)) {
      throw InvalidInput(fmt::format("player {}: bargaining power must be > 0", to_int(p.id)));
    }
    if (!(p.disagreement_s >= 0.0)) {
      throw InvalidInput(fmt::format("player {}: disagreement point must be >= 0", to_int(p.id)));
    }
    if (p.role == Role::client && relay_ == Relay::relayed &&
        !(p.upload_mbps > 0.0 && std::isfinite(p.upload_mbps))) {
      throw InvalidInput(fmt::format("client {}: upload rate must be > 0", to_int(p.id)));
    }
  }
  if (go_count != 1) {
    throw InvalidInput(fmt::format("expected exactly one GO, found {}", go_count));
  }

  const double alpha_sum = std::accumulate(players_.begin(), players_.end(), 0.0,
                                           [](double acc, const Player& p) { return acc + p.alpha; });
  beta_.resize(players_.size());
  cap_.resize(players_.size());
  double disagreement_airtime = 0.0;
  for (std::size_t i = 0; i < players_.size(); ++i) {
    Player& p = players_[i];
    p.alpha /= alpha_sum;
    beta_[i] = (p.role == Role::go || relay_ == Relay::direct) ? 0.0
                                                                : broadcast_rate_ / p.upload_mbps;
    cap_[i] = p.data_mb / broadcast_rate_;
    if (cap_[i] > 0.0) {
      p.utility = p.utility.bind(cap_[i]);
      if (p.disagreement_s >= cap_[i]) {
        throw InfeasibleProblem(fmt::format(
            "player {}: disagreement point leaves no room for improvement", to_int(p.id)));
      }
      disagreement_airtime += (1.0 + beta_[i]) * p.disagreement_s;
    }
  }
  if (disagreement_airtime >= airtime_) {
    throw InfeasibleProblem("disagreement point already consumes the whole airtime");
  }
  if (std::none_of(cap_.begin(), cap_.end(), [](double b) { return b > 0.0; })) {
    throw InfeasibleProblem("no player has data, so nobody can gain from bargaining");
  }
}

double BargainingProblem::total_demand() const {
  double total = 0.0;
  for (std::size_t i = 0; i < size(); ++i) total += (1.0 + beta_[i]) * cap_[i];
  return total;
}

BargainingProblem BargainingProblem::with_airtime(double airtime_s) const {
  return BargainingProblem(players_, airtime_s, broadcast_rate_, relay_);
}

Allocation make_allocation(const BargainingProblem& problem, std::vector<double> broadcast_s,
                           bool saturated) {
  Allocation a;
  a.upload_s.resize(broadcast_s.size());
  for (std::size_t i = 0; i < broadcast_s.size(); ++i) {
    a.upload_s[i] = problem.beta(i) * broadcast_s[i];
  }
  a.broadcast_s = std::move(broadcast_s);
  a.saturated = saturated;
  return a;
}

double airtime_used(const BargainingProblem& problem, std::span<const double> broadcast_s) {
  double total = 0.0;
  for (std::size_t i = 0; i < broadcast_s.size(); ++i) {
    total += (1.0 + problem.beta(i)) * broadcast_s[i];
  }
  return total;
}

std::string feasibility_violation(const BargainingProblem& problem, const Allocation& allocation,
                                  double tol) {
  if (allocation.broadcast_s.size() != problem.size() ||
      allocation.upload_s.size() != problem.size()) {
    return "allocation size does not match the problem";
  }
  for (std::size_t i = 0; i < problem.size(); ++i) {
    const double x = allocation.broadcast_s[i];
    if (x < -tol || x > problem.cap(i) + tol) {
      return fmt::format("x[{}] = {} outside [0, {}]", i, x, problem.cap(i));
    }
    if (allocation.upload_s[i] != problem.beta(i) * x) {
      return fmt::format("y[{}] != beta x", i);
    }
  }
  const double used = airtime_used(problem, allocation.broadcast_s);
  if (allocation.saturated) {
    for (std::size_t i = 0; i < problem.size(); ++i) {
      if (std::abs(allocation.broadcast_s[i] - problem.cap(i)) > tol) {
        return fmt::format("saturated allocation but x[{}] != b", i);
      }
    }
    if (used > problem.airtime() + tol) return "saturated allocation exceeds the airtime";
  } else if (std::abs(used - problem.airtime()) > tol) {
    return fmt::format("budget violated: used {} of {}", used, problem.airtime());
  }
  return {};
}

}  // namespace airtime
