#include "airtime/baselines.hpp"

#include <algorithm>
#include <vector>

#include "airtime/bisection.hpp"

namespace airtime {
namespace {

Allocation saturated_allocation(const BargainingProblem& problem) {
  std::vector<double> x(problem.caps().begin(), problem.caps().end());
  return make_allocation(problem, std::move(x), true);
}

}  // namespace

Allocation eql_allocate(const BargainingProblem& problem) {
  if (problem.saturated()) return saturated_allocation(problem);

  const std::size_t n = problem.size();
  std::vector<bool> capped(n, false);
  for (std::size_t i = 0; i < n; ++i) capped[i] = !problem.active(i);

  // Fixed point: every pass caps at least one more player or terminates.
  double share = 0.0;
  for (;;) {
    double left = problem.airtime();
    double weight = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      if (capped[i]) {
        left -= (1.0 + problem.beta(i)) * problem.cap(i);
      } else {
        weight += 1.0 + problem.beta(i);
      }
    }
    share = left / weight;
    bool changed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!capped[i] && problem.cap(i) <= share) {
        capped[i] = true;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    if (problem.active(i)) x[i] = std::min(problem.cap(i), share);
  }
  return make_allocation(problem, std::move(x), false);
}

Allocation wtd_allocate(const BargainingProblem& problem) {
  if (problem.saturated()) return saturated_allocation(problem);

  const std::size_t n = problem.size();
  auto spent = [&](double c) {
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      total += (1.0 + problem.beta(i)) * std::min(problem.cap(i), c * problem.player(i).data_mb);
    }
    return total;
  };
  // Every cap binds once c reaches 1 / Rb, so the root lies below that.
  const double c_max = 1.0 / problem.broadcast_rate();
  const double c = bisect_increasing(spent, problem.airtime(), 0.0, c_max,
                                     1e-12 * std::max(1.0, problem.airtime()));
  std::vector<double> x(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = std::min(problem.cap(i), c * problem.player(i).data_mb);
  }
  return make_allocation(problem, std::move(x), false);
}

}  // namespace airtime
