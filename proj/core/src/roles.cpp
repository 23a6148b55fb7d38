#include "airtime/roles.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "airtime/errors.hpp"

namespace airtime {

ConnectivityGraph ConnectivityGraph::complete(std::span<const NodeId> nodes) {
  ConnectivityGraph graph;
  for (NodeId a : nodes) graph.add_node(a);
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < nodes.size(); ++j) graph.add_edge(nodes[i], nodes[j]);
  }
  return graph;
}

void ConnectivityGraph::add_node(NodeId id) { adjacency_.try_emplace(id); }

void ConnectivityGraph::add_edge(NodeId a, NodeId b) {
  if (a == b) throw InvalidInput(fmt::format("self-loop on node {}", to_int(a)));
  adjacency_[a].insert(b);
  adjacency_[b].insert(a);
}

bool ConnectivityGraph::connected(NodeId a, NodeId b) const {
  auto it = adjacency_.find(a);
  return it != adjacency_.end() && it->second.contains(b);
}

const std::set<NodeId>& ConnectivityGraph::neighbours(NodeId id) const {
  static const std::set<NodeId> kNone;
  auto it = adjacency_.find(id);
  return it == adjacency_.end() ? kNone : it->second;
}

std::vector<NodeId> ConnectivityGraph::nodes() const {
  std::vector<NodeId> out;
  for (const auto& [id, _] : adjacency_) out.push_back(id);
  return out;
}

std::vector<NodeId> go_candidates(std::span<const NodeId> members, const ConnectivityGraph& graph) {
  std::vector<NodeId> out;
  for (NodeId candidate : members) {
    const bool reaches_all = std::all_of(members.begin(), members.end(), [&](NodeId other) {
      return other == candidate || graph.connected(candidate, other);
    });
    if (reaches_all) out.push_back(candidate);
  }
  return out;
}

RoleAssignment select_roles(std::span<const ContactTable> tables, const ConnectivityGraph& graph) {
  if (tables.empty()) throw InvalidInput("role selection needs at least one node");
  std::vector<NodeId> members;
  std::map<NodeId, double> load;
  for (const ContactTable& t : tables) {
    members.push_back(t.owner);
    load[t.owner] = t.owner_data_mb;
  }
  // A node's own table is authoritative for its load, but loads announced
  // in other tables fill in for nodes whose table is absent.
  for (const ContactTable& t : tables) {
    for (const ContactEntry& e : t.entries) load.try_emplace(e.id, e.data_mb);
  }

  const std::vector<NodeId> candidates = go_candidates(members, graph);
  if (candidates.empty()) {
    throw InvalidInput("no node can reach every other member; the group cannot elect a GO");
  }
  NodeId go = candidates.front();
  for (NodeId c : candidates) {
    const double mc = load.at(c);
    const double mg = load.at(go);
    if (mc > mg || (mc == mg && to_int(c) < to_int(go))) go = c;
  }

  RoleAssignment assignment;
  assignment.go = go;
  for (NodeId m : members) assignment.roles[m] = (m == go) ? Role::go : Role::client;
  return assignment;
}

double total_broadcast_time(std::span<const std::pair<NodeId, double>> loads, NodeId go,
                            double rate) {
  if (!(rate > 0.0)) throw InvalidInput("rate must be positive");
  bool found = false;
  double total = 0.0;
  for (const auto& [id, mb] : loads) {
    if (id == go) {
      found = true;
      total += mb;
    } else {
      total += 2.0 * mb;
    }
  }
  if (!found) throw InvalidInput(fmt::format("GO {} is not among the loads", to_int(go)));
  return total / rate;
}

double allocation_interval(const ContactTable& go_table, NodeId go) {
  if (go_table.owner != go) {
    throw InvalidInput(fmt::format("allocation interval needs the GO's table (owner {} != GO {})",
                                   to_int(go_table.owner), to_int(go)));
  }
  if (go_table.entries.empty()) throw InvalidInput("the GO has no peers");
  double shortest = std::numeric_limits<double>::infinity();
  for (const ContactEntry& e : go_table.entries) shortest = std::min(shortest, e.pcd_s);
  return shortest;
}

TransmissionMode select_transmission_mode(std::size_t group_size) {
  if (group_size < 2) throw InvalidInput("a transmission mode needs at least two nodes");
  return group_size == 2 ? TransmissionMode::unicast_pair : TransmissionMode::go_coordinated;
}

}  // namespace airtime
