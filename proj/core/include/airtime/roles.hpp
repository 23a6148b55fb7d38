#pragma once

#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "airtime/contact_table.hpp"
#include "airtime/node_id.hpp"

namespace airtime {

/// Undirected "can connect directly" relation between nodes.
class ConnectivityGraph {
 public:
  ConnectivityGraph() = default;

  /// Every pair of the given nodes is connected.
  static ConnectivityGraph complete(std::span<const NodeId> nodes);

  void add_node(NodeId id);
  /// Throws InvalidInput on a self-loop.
  void add_edge(NodeId a, NodeId b);

  bool connected(NodeId a, NodeId b) const;
  bool contains(NodeId id) const { return adjacency_.contains(id); }
  const std::set<NodeId>& neighbours(NodeId id) const;
  std::vector<NodeId> nodes() const;

 private:
  std::map<NodeId, std::set<NodeId>> adjacency_;
};

struct RoleAssignment {
  NodeId go{};
  std::map<NodeId, Role> roles;
};

/// Nodes that reach every other member directly (the GO candidates).
std::vector<NodeId> go_candidates(std::span<const NodeId> members, const ConnectivityGraph& graph);

/// Picks the GO as the candidate with the largest data load (smallest id on
/// ties); everyone else is a client. The member set and the loads are read
/// from the nodes' contact tables. Throws InvalidInput when no node reaches
/// all the others.
RoleAssignment select_roles(std::span<const ContactTable> tables, const ConnectivityGraph& graph);

/// Time for everybody's data to reach everybody if `go` relays:
/// (M_go + 2 sum_{k != go} M_k) / rate.
double total_broadcast_time(std::span<const std::pair<NodeId, double>> loads, NodeId go,
                            double rate);

/// Allocation interval: the shortest PCD between the GO and any member,
/// read from the GO's own contact table.
double allocation_interval(const ContactTable& go_table, NodeId go);

enum class TransmissionMode { unicast_pair, go_coordinated };

/// Two nodes exchange directly; three or more use GO-coordinated relaying.
TransmissionMode select_transmission_mode(std::size_t group_size);

}  // namespace airtime
