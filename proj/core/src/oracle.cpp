#include "airtime/oracle.hpp"

#include <cmath>
#include <limits>
#include <vector>

#include "airtime/errors.hpp"
#include "airtime/metrics.hpp"

namespace airtime {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

struct GridSearch {
  const BargainingProblem& problem;
  std::vector<std::size_t> active;
  double step;
  // term[k][g] = alpha log(gain) at grid point g for active[k]
  std::vector<std::vector<double>> term;
  std::vector<std::size_t> current;
  std::vector<std::size_t> best;
  double best_value = kNegInf;

  double term_at(std::size_t k, double x) const {
    const std::size_t i = active[k];
    const double gain = utility_gain(problem, i, x);
    return gain > 0.0 ? problem.alpha(i) * std::log(gain) : kNegInf;
  }

  void prepare() {
    term.resize(active.size() - 1);
    for (std::size_t k = 0; k + 1 < active.size(); ++k) {
      const double b = problem.cap(active[k]);
      for (std::size_t g = 1; static_cast<double>(g) * step <= b; ++g) {
        term[k].push_back(term_at(k, static_cast<double>(g) * step));
      }
    }
    current.assign(active.size() - 1, 0);
  }

  void descend(std::size_t k, double budget_left, double partial) {
    if (k + 1 == active.size()) {
      const std::size_t last = active[k];
      const double x = budget_left / (1.0 + problem.beta(last));
      if (x < 0.0 || x > problem.cap(last)) return;
      const double value = partial + term_at(k, x);
      if (value > best_value) {
        best_value = value;
        best = current;
      }
      return;
    }
    const double weight = 1.0 + problem.beta(active[k]);
    for (std::size_t g = 0; g < term[k].size(); ++g) {
      const double spend = weight * static_cast<double>(g + 1) * step;
      if (spend > budget_left) break;
      if (term[k][g] == kNegInf) continue;
      current[k] = g;
      descend(k + 1, budget_left - spend, partial + term[k][g]);
    }
  }
};

}  // namespace

Allocation oracle_allocate(const BargainingProblem& problem, int resolution) {
  if (resolution < 1) throw InvalidInput("oracle resolution must be >= 1");
  const std::size_t n = problem.size();
  std::vector<double> x(n, 0.0);
  if (problem.saturated()) {
    for (std::size_t i = 0; i < n; ++i) x[i] = problem.cap(i);
    return make_allocation(problem, std::move(x), true);
  }

  std::vector<std::size_t> active;
  for (std::size_t i = 0; i < n; ++i) {
    if (problem.active(i)) active.push_back(i);
  }
  const double T = problem.airtime();
  const double step = T / resolution;

  if (active.size() == 1) {
    x[active[0]] = T / (1.0 + problem.beta(active[0]));
    return make_allocation(problem, std::move(x), false);
  }

  GridSearch grid{problem, active, step, {}, {}, {}, kNegInf};
  grid.prepare();
  grid.descend(0, T, 0.0);

  if (grid.best_value > kNegInf) {
    double spent = 0.0;
    for (std::size_t k = 0; k + 1 < active.size(); ++k) {
      const std::size_t i = active[k];
      x[i] = static_cast<double>(grid.best[k] + 1) * step;
      spent += (1.0 + problem.beta(i)) * x[i];
    }
    x[active.back()] = (T - spent) / (1.0 + problem.beta(active.back()));
  } else {
    // Grid too coarse for the caps: start from the proportional interior point.
    const double scale = T / problem.total_demand();
    for (std::size_t i : active) x[i] = scale * problem.cap(i);
  }

  // Pairwise exchange refinement: move `delta` seconds of airtime from j to i.
  double value = log_nash_welfare(problem, x);
  for (double delta = step; delta > 1e-13 * T; delta *= 0.5) {
    bool improved = true;
    while (improved) {
      improved = false;
      for (std::size_t i : active) {
        for (std::size_t j : active) {
          if (i == j) continue;
          const double xi = x[i] + delta / (1.0 + problem.beta(i));
          const double xj = x[j] - delta / (1.0 + problem.beta(j));
          if (xi > problem.cap(i) || xj <= problem.disagreement(j)) continue;
          const double old_i = x[i];
          const double old_j = x[j];
          x[i] = xi;
          x[j] = xj;
          const double candidate = log_nash_welfare(problem, x);
          if (candidate > value) {
            value = candidate;
            improved = true;
          } else {
            x[i] = old_i;
            x[j] = old_j;
          }
        }
      }
    }
  }
  return make_allocation(problem, std::move(x), false);
}

}  // namespace airtime
