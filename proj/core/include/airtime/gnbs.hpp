#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "airtime/problem.hpp"

namespace airtime {

/// How monotone maps are inverted. `automatic` uses closed forms where the
/// utility admits one (normalized-linear) and bisection otherwise.
enum class Inversion { automatic, bisection };

/// Water level of player i at broadcast time x:
///   L_i(x) = (1 + beta_i) / alpha_i * (u_i(x) - u_i(xd_i)) / u_i'(x).
/// Strictly increasing on (xd_i, b_i]. Throws DomainError outside it.
double water_level(const BargainingProblem& problem, std::size_t i, double x);

/// Broadcast time at which player i reaches `level`. Domain (0, L_i(b_i)].
double water_level_inverse(const BargainingProblem& problem, std::size_t i, double level,
                           Inversion how = Inversion::automatic);

/// Active players sorted by ascending L_i(b_i); ties keep the original order.
std::vector<std::size_t> cap_level_order(const BargainingProblem& problem);

/// Airtime taken by the tail of `order` starting at `rank` when every player
/// in it sits at `level`:  sum_{n >= rank} (1 + beta_n) L_n^{-1}(level).
/// Domain (0, L_{order[rank]}(b)], the smallest cap level in the tail.
double tail_airtime(const BargainingProblem& problem, std::span<const std::size_t> order,
                    std::size_t rank, double level, Inversion how = Inversion::automatic);

/// Level at which the tail from `rank` consumes `airtime_s`.
double tail_airtime_inverse(const BargainingProblem& problem, std::span<const std::size_t> order,
                            std::size_t rank, double airtime_s,
                            Inversion how = Inversion::automatic);

/// sum_i (1 + beta_i) min{b_i, L_i^{-1}(level)} over all active players; for
/// levels above a player's cap level the player contributes its cap.
double total_airtime_at_level(const BargainingProblem& problem, double level,
                              Inversion how = Inversion::automatic);

struct KktReport {
  double lambda = 0.0;
  std::vector<double> stationarity;  // |1/L_i(x_i) - lambda| for x_i < b_i, else 0
  double dual_feasibility = 0.0;     // max_i max(0, lambda - 1/L_i(x_i))
  double complementary_slackness = 0.0;  // max_i |(1/L_i(x_i) - lambda)(x_i - b_i)|
  double budget = 0.0;               // |sum (1+beta) x - T|, or against the demand if saturated
  double max_residual = 0.0;
};

/// Residuals of the reduced optimality system at (allocation, lambda).
KktReport kkt_residuals(const BargainingProblem& problem, const Allocation& allocation,
                        double lambda);

struct GnbsResult {
  Allocation allocation;
  KktReport kkt;
};

/// The generalized Nash bargaining allocation. Saturated problems return
/// x = b with lambda = 0; otherwise players are visited in cap-level order
/// and each receives min{b_i, L_i^{-1}(F_i^{-1}(remaining airtime))}.
GnbsResult gnbs_allocate(const BargainingProblem& problem, Inversion how = Inversion::automatic);

}  // namespace airtime
