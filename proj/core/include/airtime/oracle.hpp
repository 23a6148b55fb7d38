#pragma once

#include "airtime/problem.hpp"

namespace airtime {

/// Brute-force maximizer of the log Nash welfare, used to check
/// gnbs_allocate independently of the water-level machinery. It only ever
/// evaluates the objective.
///
/// Enumerates a grid of step T/resolution over all active players but the
/// last (whose time is fixed by the budget), then refines the best point by
/// pairwise airtime exchanges with a halving step down to ~1e-13 T. Cost is
/// O(resolution^(I-1)); meant for I <= 4.
Allocation oracle_allocate(const BargainingProblem& problem, int resolution = 200);

}  // namespace airtime
