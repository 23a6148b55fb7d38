#pragma once

#include "airtime/problem.hpp"

namespace airtime {

/// Equal broadcast time for every active player, capped at b_i; airtime
/// freed by capped players is shared equally among the rest.
Allocation eql_allocate(const BargainingProblem& problem);

/// Broadcast time proportional to data load: x_i = min(b_i, c M_i) with c
/// chosen so the budget is spent.
Allocation wtd_allocate(const BargainingProblem& problem);

}  // namespace airtime
