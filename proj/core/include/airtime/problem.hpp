#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "airtime/node_id.hpp"
#include "airtime/utility.hpp"

namespace airtime {

struct Player {
  NodeId id{};
  double data_mb = 0.0;
  double upload_mbps = 0.0;  // ignored for the GO and in direct mode
  double alpha = 1.0;        // any positive weight; normalized by the problem
  double disagreement_s = 0.0;
  UtilityEvaluator utility = UtilityEvaluator::normalized_linear();
  Role role = Role::client;
};

/// How client data reaches the other members.
///   relayed: clients upload to the GO, which broadcasts (beta_i = Rb / Ru_i)
///   direct:  two-node unicast, nobody uploads (beta_i = 0 for all)
enum class Relay { relayed, direct };

/// One airtime bargaining instance. Construction validates the instance,
/// normalizes the bargaining powers to sum to one and derives beta_i and the
/// broadcast caps b_i = M_i / Rb.
///
/// Players with no data are kept (so indices line up with the caller's
/// order) but are not part of the bargaining set: they always receive zero
/// airtime and are skipped by every objective.
class BargainingProblem {
 public:
  BargainingProblem(std::vector<Player> players, double airtime_s, double broadcast_mbps,
                    Relay relay = Relay::relayed);

  std::size_t size() const { return players_.size(); }
  const std::vector<Player>& players() const { return players_; }
  const Player& player(std::size_t i) const { return players_[i]; }

  double airtime() const { return airtime_; }
  double broadcast_rate() const { return broadcast_rate_; }
  Relay relay() const { return relay_; }

  /// Normalized bargaining power.
  double alpha(std::size_t i) const { return players_[i].alpha; }
  double beta(std::size_t i) const { return beta_[i]; }
  double cap(std::size_t i) const { return cap_[i]; }
  double disagreement(std::size_t i) const { return players_[i].disagreement_s; }
  /// Utility bound to the player's cap. Undefined for inactive players.
  const UtilityEvaluator& utility(std::size_t i) const { return players_[i].utility; }

  /// True when the player has data and takes part in bargaining.
  bool active(std::size_t i) const { return cap_[i] > 0.0; }
  std::size_t go_index() const { return go_index_; }

  std::span<const double> betas() const { return beta_; }
  std::span<const double> caps() const { return cap_; }

  /// Sum over active players of (1 + beta_i) b_i: the airtime needed to
  /// deliver everything.
  double total_demand() const;
  /// Demand fits in the budget, so there is nothing to bargain over.
  bool saturated() const { return total_demand() <= airtime_; }

  BargainingProblem with_airtime(double airtime_s) const;

 private:
  std::vector<Player> players_;
  std::vector<double> beta_;
  std::vector<double> cap_;
  double airtime_;
  double broadcast_rate_;
  Relay relay_;
  std::size_t go_index_ = 0;
};

/// Paired upload/broadcast time vectors, indexed like the problem's players.
struct Allocation {
  std::vector<double> broadcast_s;  // x_i
  std::vector<double> upload_s;     // y_i = beta_i x_i
  bool saturated = false;

  std::size_t size() const { return broadcast_s.size(); }
};

/// Builds an allocation from broadcast times, deriving y_i = beta_i x_i.
Allocation make_allocation(const BargainingProblem& problem, std::vector<double> broadcast_s,
                           bool saturated = false);

/// Sum of (1 + beta_i) x_i.
double airtime_used(const BargainingProblem& problem, std::span<const double> broadcast_s);

/// Checks the feasibility invariants (box, y = beta x, budget or saturation)
/// with absolute tolerance `tol`. Returns an empty string when they hold,
/// otherwise a description of the first violation.
std::string feasibility_violation(const BargainingProblem& problem, const Allocation& allocation,
                                  double tol = 1e-9);

}  // namespace airtime
