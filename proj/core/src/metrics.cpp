#include "airtime/metrics.hpp"

#include <cmath>
#include <limits>

#include "airtime/errors.hpp"

namespace airtime {

double utility_gain(const BargainingProblem& problem, std::size_t i, double x) {
  const UtilityEvaluator& u = problem.utility(i);
  return u.value(x) - u.value(problem.disagreement(i));
}

double log_nash_welfare(const BargainingProblem& problem, std::span<const double> broadcast_s) {
  if (broadcast_s.size() != problem.size()) {
    throw InvalidInput("allocation size does not match the problem");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (!problem.active(i)) continue;
    const double gain = utility_gain(problem, i, broadcast_s[i]);
    if (!(gain > 0.0)) return -std::numeric_limits<double>::infinity();
    total += problem.alpha(i) * std::log(gain);
  }
  return total;
}

double log_nash_welfare(const BargainingProblem& problem, const Allocation& allocation) {
  return log_nash_welfare(problem, allocation.broadcast_s);
}

double nash_product(const BargainingProblem& problem, std::span<const double> broadcast_s) {
  if (broadcast_s.size() != problem.size()) {
    throw InvalidInput("allocation size does not match the problem");
  }
  double product = 1.0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (!problem.active(i)) continue;
    const double gain = utility_gain(problem, i, broadcast_s[i]);
    if (!(gain > 0.0)) return 0.0;
    product *= std::pow(gain, problem.alpha(i));
  }
  return product;
}

double nash_product(const BargainingProblem& problem, const Allocation& allocation) {
  return nash_product(problem, allocation.broadcast_s);
}

double wpf_aggregate(const BargainingProblem& problem, std::span<const double> reference_s,
                     std::span<const double> other_s) {
  if (reference_s.size() != problem.size() || other_s.size() != problem.size()) {
    throw InvalidInput("allocation size does not match the problem");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < problem.size(); ++i) {
    if (!problem.active(i)) continue;
    const double base = utility_gain(problem, i, reference_s[i]);
    if (!(base > 0.0)) throw InvalidInput("reference allocation sits at the disagreement point");
    total += problem.alpha(i) * (utility_gain(problem, i, other_s[i]) - base) / base;
  }
  return total;
}

double wpf_aggregate(const BargainingProblem& problem, const Allocation& reference,
                     const Allocation& other) {
  return wpf_aggregate(problem, reference.broadcast_s, other.broadcast_s);
}

double dissemination_rate(const BargainingProblem& problem, const Allocation& allocation,
                          std::size_t k) {
  return problem.broadcast_rate() * allocation.broadcast_s.at(k) / problem.airtime();
}

}  // namespace airtime
