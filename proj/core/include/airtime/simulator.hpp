#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "airtime/problem.hpp"
#include "airtime/roles.hpp"
#include "airtime/scenario.hpp"
#include "airtime/schedule.hpp"

namespace airtime {

enum class Policy { gsa, eql, wtd };

std::string_view to_string(Policy policy);
/// Accepts "gsa", "eql", "wtd". Throws InvalidInput otherwise.
Policy parse_policy(std::string_view name);

/// Allocation of `problem` under `policy`.
Allocation allocate(const BargainingProblem& problem, Policy policy);

/// What started a round.
enum class RoundTrigger { membership_change, interval_expired };

/// One allocation round: roles, the allocation computed from estimated
/// PCDs, its schedule and what was actually transmitted before the round
/// ended (at the next true membership event or when the allocation
/// interval ran out).
struct RoundRecord {
  std::size_t index = 0;
  std::size_t period = 0;
  RoundTrigger trigger = RoundTrigger::membership_change;
  double start_s = 0.0;
  double end_s = 0.0;
  double estimated_interval_s = 0.0;
  NodeId go{};
  TransmissionMode mode = TransmissionMode::go_coordinated;
  /// Members in ascending id; every per-node vector below follows this order.
  std::vector<NodeId> members;
  std::vector<double> load_mb;
  std::vector<double> loss_probability;
  std::vector<double> beta;
  Allocation allocation;
  std::vector<NodeSlot> slots;
  Schedule schedule;
  std::vector<double> realized_broadcast_s;
  std::vector<double> realized_rate_mbps;
};

/// Interval between consecutive true membership events with at least two
/// members. Loads are fresh at the start of each period; `ideal_broadcast_s`
/// is the bargaining allocation for the true period length with nominal
/// rates, `realized_broadcast_s` what the rounds of the period delivered.
struct PeriodRecord {
  std::size_t index = 0;
  double start_s = 0.0;
  double end_s = 0.0;
  NodeId go{};
  std::vector<NodeId> members;
  std::vector<double> load_mb;
  std::vector<double> alpha;  // normalized, GO factor applied
  std::vector<double> ideal_broadcast_s;
  std::vector<double> realized_broadcast_s;
  double nash_product_ideal = 0.0;
  double nash_product_realized = 0.0;
  double wpf_aggregate = 0.0;  // realized vs ideal
};

struct NodeTotals {
  NodeId id{};
  double broadcast_s = 0.0;
  double sent_mb = 0.0;      // megabits of this node's data put on the air
  double offered_mb = 0.0;   // sum of its period loads
  double received_mb = 0.0;  // summed over receivers, after loss
};

struct SimulationReport {
  Policy policy = Policy::gsa;
  std::vector<RoundRecord> rounds;
  std::vector<PeriodRecord> periods;
  std::vector<NodeTotals> totals;
  /// Means over periods; zero when no period had two members.
  double nash_product_realized = 0.0;
  double nash_product_ideal = 0.0;
  double wpf_aggregate_vs_ideal = 0.0;
};

/// Runs the group through its membership events. Each event (and each
/// expiry of an allocation interval while the group is unchanged and still
/// has data) starts a round: contact tables are rebuilt from estimated
/// PCDs, roles are reselected, the policy allocates the estimated interval
/// and the slotted schedule is executed until the next true event.
///
/// Deterministic: every random draw comes from a counter-based stream keyed
/// by (seed, subject, round, purpose).
SimulationReport run_scenario(const Scenario& scenario, Policy policy = Policy::gsa);

/// Bargaining problem of membership period `period` (counting periods with
/// at least two members, in time order): true period length as airtime,
/// nominal rates, fresh loads, GO chosen from true contact tables.
BargainingProblem period_problem(const Scenario& scenario, std::size_t period = 0);

/// CSV renderings of a report (header row, 6-decimal fixed point).
std::string rounds_csv(const SimulationReport& report);
std::string delivery_csv(const SimulationReport& report);
std::string metrics_csv(const SimulationReport& report);

}  // namespace airtime
