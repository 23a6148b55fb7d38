#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "airtime/node_id.hpp"
#include "airtime/rng.hpp"
#include "airtime/roles.hpp"

namespace airtime {

/// Per-node, per-round loss probability drawn uniformly from [lo, hi].
struct LossModel {
  double lo = 0.0;
  double hi = 0.0;
};

/// Additive PCD estimation error ~ Normal(mean, stddev).
struct PcdErrorModel {
  double mean = 0.0;
  double stddev = 1.0;
};

/// A node's presence in the scenario. Exactly one of data_mb (one content
/// item for the whole group) and data_mb_per_peer (that much for each other
/// member present) is set.
struct ScenarioNode {
  NodeId id{};
  double join_s = 0.0;
  double leave_s = 0.0;
  std::optional<double> data_mb;
  std::optional<double> data_mb_per_peer;
  double upload_mbps = 11.0;
  double alpha = 1.0;
};

struct Scenario {
  std::vector<ScenarioNode> nodes;
  double broadcast_mbps = 11.0;
  /// Direct links; std::nullopt means every pair is connected.
  std::optional<std::vector<std::pair<NodeId, NodeId>>> links;
  double t_slot_s = 0.020;
  std::optional<LossModel> loss;
  std::optional<PcdErrorModel> pcd_error;
  std::uint64_t seed = 0;
  /// The GO bargains with this multiple of its own weight.
  double go_alpha_factor = 2.0;

  /// Throws InvalidInput when an invariant does not hold.
  void validate() const;

  const ScenarioNode& node(NodeId id) const;
  ConnectivityGraph connectivity(std::span<const NodeId> members) const;
  /// Data node `n` brings into a membership period with `group_size` members.
  double period_load(const ScenarioNode& n, std::size_t group_size) const;
};

/// Estimated PCD: true duration plus a model error, floored at 0.1 s.
inline constexpr double kMinEstimatedPcd = 0.1;
double estimate_pcd(double true_duration_s, const std::optional<PcdErrorModel>& model,
                    CounterRng& rng);

/// Upload rate after loss: nominal (1 - p).
double effective_upload_rate(double nominal_mbps, double loss_probability);

/// Scales every join/leave time about the earliest join so that the span
/// of the scenario becomes `duration_s`.
Scenario with_contact_duration(const Scenario& scenario, double duration_s);

/// Same scenario with the loss and PCD-error models removed.
Scenario without_randomness(const Scenario& scenario);

}  // namespace airtime
