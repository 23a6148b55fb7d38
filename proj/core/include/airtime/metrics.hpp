#pragma once

#include <cstddef>
#include <span>

#include "airtime/problem.hpp"

namespace airtime {

/// Utility gain u_i(x) - u_i(xd_i) of an active player.
double utility_gain(const BargainingProblem& problem, std::size_t i, double x);

/// prod_i (u_i(x_i) - u_i(xd_i))^alpha_i over active players; 0 as soon as
/// one factor is not positive.
double nash_product(const BargainingProblem& problem, std::span<const double> broadcast_s);
double nash_product(const BargainingProblem& problem, const Allocation& allocation);

/// sum_i alpha_i log(u_i(x_i) - u_i(xd_i)); -infinity at or below disagreement.
double log_nash_welfare(const BargainingProblem& problem, std::span<const double> broadcast_s);
double log_nash_welfare(const BargainingProblem& problem, const Allocation& allocation);

/// Aggregate of weighted proportional utility changes when moving from the
/// bargaining point to `other`:  sum_i alpha_i (u_i(other) - u_i(gnbs)) / u_i(gnbs),
/// with utilities measured as gains over disagreement. Non-positive for any
/// feasible `other` when `reference` is the bargaining solution.
double wpf_aggregate(const BargainingProblem& problem, std::span<const double> reference_s,
                     std::span<const double> other_s);
double wpf_aggregate(const BargainingProblem& problem, const Allocation& reference,
                     const Allocation& other);

/// Rate at which player k's data reaches the group: Rb x_k / T.
double dissemination_rate(const BargainingProblem& problem, const Allocation& allocation,
                          std::size_t k);

}  // namespace airtime
