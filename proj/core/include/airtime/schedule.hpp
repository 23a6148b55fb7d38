#pragma once

#include <span>
#include <string>
#include <vector>

#include "airtime/node_id.hpp"
#include "airtime/problem.hpp"

namespace airtime {

/// Per-node slot of the round-robin cycle: an upload sub-slot (client to GO)
/// followed by a broadcast sub-slot (GO to everyone else).
struct NodeSlot {
  NodeId node{};
  double whole_s = 0.0;
  double upload_s = 0.0;
  double broadcast_s = 0.0;
};

/// Whole slots proportional to each node's airtime (1 + beta_i) x_i, scaled
/// so the smallest one equals t_slot, then split by beta_i into upload and
/// broadcast parts. Nodes with x_i = 0 get no slot. Throws InvalidInput when
/// no node has airtime or t_slot is not positive.
std::vector<NodeSlot> slot_sizes(std::span<const NodeId> ids, const Allocation& allocation,
                                 std::span<const double> betas, double t_slot_s);
std::vector<NodeSlot> slot_sizes(const BargainingProblem& problem, const Allocation& allocation,
                                 double t_slot_s);

/// Ascending node id with the GO moved to the end of the cycle.
std::vector<NodeId> round_robin_order(std::span<const NodeSlot> slots, NodeId go);

enum class SlotKind { upload, broadcast };

struct ScheduleEntry {
  NodeId node{};
  SlotKind kind = SlotKind::broadcast;
  double start_s = 0.0;
  double duration_s = 0.0;
};

struct Schedule {
  std::vector<ScheduleEntry> entries;
  double cycle_length_s = 0.0;
  double t_start_s = 0.0;
  double interval_s = 0.0;

  double end_s() const { return t_start_s + interval_s; }
  /// Total time scheduled for `node` of the given kind.
  double scheduled(NodeId node, SlotKind kind) const;
  /// Same, counting only the part of each slot that finishes before `until`.
  double scheduled_until(NodeId node, SlotKind kind, double until) const;
};

/// Repeats the cycle (upload then broadcast for each node in `order`) from
/// t_start, cutting the last cycle mid-slot at t_start + interval. Throws
/// InvalidInput when one cycle is longer than the interval or `order` does
/// not list every slot exactly once.
Schedule build_schedule(std::span<const NodeSlot> slots, double interval_s,
                        std::span<const NodeId> order, double t_start_s);

std::string_view to_string(SlotKind kind);

/// `node_id,kind,start_s,duration_s` rows with a header, 6 decimals.
std::string schedule_csv(const Schedule& schedule);

}  // namespace airtime
