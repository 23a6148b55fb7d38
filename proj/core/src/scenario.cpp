#include "airtime/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include <fmt/format.h>

#include "airtime/errors.hpp"

namespace airtime {

void Scenario::validate() const {
  if (!(broadcast_mbps > 0.0)) throw InvalidInput("broadcast rate must be positive");
  if (!(t_slot_s > 0.0)) throw InvalidInput("basic slot size must be positive");
  if (!(go_alpha_factor > 0.0)) throw InvalidInput("GO bargaining factor must be positive");
  std::set<NodeId> ids;
  for (const ScenarioNode& n : nodes) {
    const auto id = to_int(n.id);
    if (!ids.insert(n.id).second) throw InvalidInput(fmt::format("duplicate node id {}", id));
    if (!(n.join_s < n.leave_s)) {
      throw InvalidInput(fmt::format("node {}: join time must precede leave time", id));
    }
    if (n.data_mb.has_value() == n.data_mb_per_peer.has_value()) {
      throw InvalidInput(
          fmt::format("node {}: set exactly one of data_mb and data_mb_per_peer", id));
    }
    const double data = n.data_mb.value_or(n.data_mb_per_peer.value_or(0.0));
    if (!(data >= 0.0)) throw InvalidInput(fmt::format("node {}: data must be >= 0", id));
    if (!(n.upload_mbps > 0.0)) throw InvalidInput(fmt::format("node {}: upload rate must be > 0", id));
    if (!(n.alpha > 0.0)) throw InvalidInput(fmt::format("node {}: alpha must be > 0", id));
  }
  if (links) {
    for (const auto& [a, b] : *links) {
      if (!ids.contains(a) || !ids.contains(b)) {
        throw InvalidInput(fmt::format("link {}-{} names an unknown node", to_int(a), to_int(b)));
      }
      if (a == b) throw InvalidInput(fmt::format("self-link on node {}", to_int(a)));
    }
  }
  if (loss && !(0.0 <= loss->lo && loss->lo <= loss->hi && loss->hi < 1.0)) {
    throw InvalidInput("loss bounds must satisfy 0 <= lo <= hi < 1");
  }
  if (pcd_error && !(pcd_error->stddev >= 0.0 && std::isfinite(pcd_error->mean))) {
    throw InvalidInput("PCD error needs a finite mean and stddev >= 0");
  }
}

const ScenarioNode& Scenario::node(NodeId id) const {
  auto it = std::find_if(nodes.begin(), nodes.end(),
                         [id](const ScenarioNode& n) { return n.id == id; });
  if (it == nodes.end()) throw InvalidInput(fmt::format("unknown node {}", to_int(id)));
  return *it;
}

ConnectivityGraph Scenario::connectivity(std::span<const NodeId> members) const {
  if (!links) return ConnectivityGraph::complete(members);
  ConnectivityGraph graph;
  for (NodeId m : members) graph.add_node(m);
  for (const auto& [a, b] : *links) {
    if (graph.contains(a) && graph.contains(b)) graph.add_edge(a, b);
  }
  return graph;
}

double Scenario::period_load(const ScenarioNode& n, std::size_t group_size) const {
  if (n.data_mb) return *n.data_mb;
  return *n.data_mb_per_peer * static_cast<double>(group_size - 1);
}

double estimate_pcd(double true_duration_s, const std::optional<PcdErrorModel>& model,
                    CounterRng& rng) {
  if (!model) return true_duration_s;
  double error = model->mean;
  if (model->stddev > 0.0) {
    std::normal_distribution<double> normal(model->mean, model->stddev);
    error = normal(rng);
  }
  return std::max(kMinEstimatedPcd, true_duration_s + error);
}

double effective_upload_rate(double nominal_mbps, double loss_probability) {
  if (!(loss_probability >= 0.0 && loss_probability < 1.0)) {
    throw InvalidInput("loss probability must lie in [0, 1)");
  }
  return nominal_mbps * (1.0 - loss_probability);
}

Scenario with_contact_duration(const Scenario& scenario, double duration_s) {
  if (!(duration_s > 0.0)) throw InvalidInput("contact duration must be positive");
  if (scenario.nodes.empty()) return scenario;
  double first = scenario.nodes.front().join_s;
  double last = scenario.nodes.front().leave_s;
  for (const ScenarioNode& n : scenario.nodes) {
    first = std::min(first, n.join_s);
    last = std::max(last, n.leave_s);
  }
  const double scale = duration_s / (last - first);
  Scenario scaled = scenario;
  for (ScenarioNode& n : scaled.nodes) {
    n.join_s = first + (n.join_s - first) * scale;
    n.leave_s = first + (n.leave_s - first) * scale;
  }
  return scaled;
}

Scenario without_randomness(const Scenario& scenario) {
  Scenario plain = scenario;
  plain.loss.reset();
  plain.pcd_error.reset();
  return plain;
}

}  // namespace airtime
