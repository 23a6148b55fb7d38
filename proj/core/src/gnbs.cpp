#include "airtime/gnbs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <fmt/format.h>

#include "airtime/bisection.hpp"
#include "airtime/errors.hpp"

namespace airtime {
namespace {

constexpr double kCapSlack = 1e-12;

bool linear(const BargainingProblem& problem, std::size_t i) {
  return problem.utility(i).kind() == UtilityEvaluator::Kind::normalized_linear;
}

double tolerance_for(double value) { return kBisectionRelTol * std::max(1.0, std::abs(value)); }

void require_active(const BargainingProblem& problem, std::size_t i) {
  if (i >= problem.size()) throw DomainError(fmt::format("player index {} out of range", i));
  if (!problem.active(i)) {
    throw DomainError(fmt::format("player {} has no data and no water level", i));
  }
}

double level_unchecked(const BargainingProblem& problem, std::size_t i, double x) {
  const double gain = problem.utility(i).gain_over_slope(x, problem.disagreement(i));
  return (1.0 + problem.beta(i)) / problem.alpha(i) * gain;
}

double tail_airtime_floor(const BargainingProblem& problem, std::span<const std::size_t> order,
                          std::size_t rank) {
  double floor = 0.0;
  for (std::size_t r = rank; r < order.size(); ++r) {
    floor += (1.0 + problem.beta(order[r])) * problem.disagreement(order[r]);
  }
  return floor;
}

}  // namespace

double water_level(const BargainingProblem& problem, std::size_t i, double x) {
  require_active(problem, i);
  const double xd = problem.disagreement(i);
  const double b = problem.cap(i);
  if (!(x > xd) || x > b * (1.0 + kCapSlack)) {
    throw DomainError(fmt::format("water level of player {} undefined at x = {} (domain ({}, {}])",
                                  i, x, xd, b));
  }
  return level_unchecked(problem, i, std::min(x, b));
}

double water_level_inverse(const BargainingProblem& problem, std::size_t i, double level,
                           Inversion how) {
  require_active(problem, i);
  const double b = problem.cap(i);
  const double top = level_unchecked(problem, i, b);
  if (!(level > 0.0) || level > top * (1.0 + kCapSlack)) {
    throw DomainError(
        fmt::format("level {} outside (0, {}] for player {}", level, top, i));
  }
  if (level >= top) return b;
  const double xd = problem.disagreement(i);
  if (how == Inversion::automatic && linear(problem, i)) {
    return std::min(b, xd + problem.alpha(i) * level / (1.0 + problem.beta(i)));
  }
  return bisect_increasing([&](double x) { return level_unchecked(problem, i, x); }, level, xd, b,
                           tolerance_for(level));
}

std::vector<std::size_t> cap_level_order(const BargainingProblem& problem) {
  std::vector<std::size_t> order;
  std::vector<double> top(problem.size(), 0.0);
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (!problem.active(i)) continue;
    order.push_back(i);
    top[i] = level_unchecked(problem, i, problem.cap(i));
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return top[a] < top[b]; });
  return order;
}

double tail_airtime(const BargainingProblem& problem, std::span<const std::size_t> order,
                    std::size_t rank, double level, Inversion how) {
  if (rank >= order.size()) throw DomainError("tail rank out of range");
  const double top = level_unchecked(problem, order[rank], problem.cap(order[rank]));
  if (!(level > 0.0) || level > top * (1.0 + kCapSlack)) {
    throw DomainError(fmt::format("level {} outside (0, {}] for tail {}", level, top, rank));
  }
  double total = 0.0;
  for (std::size_t r = rank; r < order.size(); ++r) {
    const std::size_t n = order[r];
    total += (1.0 + problem.beta(n)) * water_level_inverse(problem, n, std::min(level, top), how);
  }
  return total;
}

double tail_airtime_inverse(const BargainingProblem& problem, std::span<const std::size_t> order,
                            std::size_t rank, double airtime_s, Inversion how) {
  if (rank >= order.size()) throw DomainError("tail rank out of range");
  const double top = level_unchecked(problem, order[rank], problem.cap(order[rank]));
  const double floor = tail_airtime_floor(problem, order, rank);
  const double ceiling = tail_airtime(problem, order, rank, top, how);
  if (!(airtime_s > floor) || airtime_s > ceiling * (1.0 + kCapSlack)) {
    throw DomainError(fmt::format("airtime {} outside the tail range ({}, {}]", airtime_s, floor,
                                  ceiling));
  }
  if (airtime_s >= ceiling) return top;

  const bool all_linear = std::all_of(order.begin() + static_cast<std::ptrdiff_t>(rank),
                                      order.end(),
                                      [&](std::size_t n) { return linear(problem, n); });
  if (how == Inversion::automatic && all_linear) {
    double alpha_sum = 0.0;
    for (std::size_t r = rank; r < order.size(); ++r) alpha_sum += problem.alpha(order[r]);
    return std::min(top, (airtime_s - floor) / alpha_sum);
  }
  return bisect_increasing(
      [&](double level) { return tail_airtime(problem, order, rank, level, how); }, airtime_s,
      0.0, top, tolerance_for(airtime_s));
}

double total_airtime_at_level(const BargainingProblem& problem, double level, Inversion how) {
  if (!(level > 0.0)) throw DomainError("level must be positive");
  double total = 0.0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (!problem.active(i)) continue;
    const double top = level_unchecked(problem, i, problem.cap(i));
    const double x = level >= top ? problem.cap(i) : water_level_inverse(problem, i, level, how);
    total += (1.0 + problem.beta(i)) * x;
  }
  return total;
}

KktReport kkt_residuals(const BargainingProblem& problem, const Allocation& allocation,
                        double lambda) {
  if (allocation.size() != problem.size()) {
    throw InvalidInput("allocation size does not match the problem");
  }
  constexpr double kInf = std::numeric_limits<double>::infinity();
  KktReport report;
  report.lambda = lambda;
  report.stationarity.assign(problem.size(), 0.0);
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (!problem.active(i)) continue;
    const double x = allocation.broadcast_s[i];
    const double b = problem.cap(i);
    if (!(x > problem.disagreement(i)) || x > b * (1.0 + kCapSlack)) {
      report.stationarity[i] = kInf;
      report.dual_feasibility = kInf;
      report.complementary_slackness = kInf;
      continue;
    }
    const double inv_level = 1.0 / water_level(problem, i, x);
    if (x < b) report.stationarity[i] = std::abs(inv_level - lambda);
    report.dual_feasibility = std::max(report.dual_feasibility, lambda - inv_level);
    report.complementary_slackness =
        std::max(report.complementary_slackness, std::abs((inv_level - lambda) * (x - b)));
  }
  const double used = airtime_used(problem, allocation.broadcast_s);
  report.budget = allocation.saturated ? std::abs(used - problem.total_demand())
                                       : std::abs(used - problem.airtime());
  report.max_residual = std::max({report.dual_feasibility, report.complementary_slackness,
                                  report.budget});
  for (double s : report.stationarity) report.max_residual = std::max(report.max_residual, s);
  return report;
}

GnbsResult gnbs_allocate(const BargainingProblem& problem, Inversion how) {
  std::vector<double> x(problem.size(), 0.0);
  if (problem.saturated()) {
    for (std::size_t i = 0; i < problem.size(); ++i) x[i] = problem.cap(i);
    Allocation allocation = make_allocation(problem, std::move(x), true);
    KktReport kkt = kkt_residuals(problem, allocation, 0.0);
    return {std::move(allocation), std::move(kkt)};
  }

  const std::vector<std::size_t> order = cap_level_order(problem);
  double remaining = problem.airtime();
  double level = 0.0;
  for (std::size_t r = 0; r < order.size(); ++r) {
    const std::size_t i = order[r];
    const double weight = 1.0 + problem.beta(i);
    if (remaining <= tail_airtime_floor(problem, order, r)) {
      throw InfeasibleProblem("no allocation improves on the disagreement point for every player");
    }
    if (r + 1 == order.size()) {
      // The last player's tail is itself, so F^{-1} then L^{-1} reduces to
      // spending what is left. Doing it directly closes the budget exactly.
      x[i] = std::min(problem.cap(i), remaining / weight);
      if (level == 0.0) level = water_level(problem, i, x[i]);
    } else {
      const double top = water_level(problem, i, problem.cap(i));
      if (remaining >= tail_airtime(problem, order, r, top, how)) {
        x[i] = problem.cap(i);
      } else {
        const double s = tail_airtime_inverse(problem, order, r, remaining, how);
        x[i] = water_level_inverse(problem, i, s, how);
        if (level == 0.0) level = s;
      }
    }
    remaining -= weight * x[i];
  }

  Allocation allocation = make_allocation(problem, std::move(x), false);
  KktReport kkt = kkt_residuals(problem, allocation, 1.0 / level);
  return {std::move(allocation), std::move(kkt)};
}

}  // namespace airtime
