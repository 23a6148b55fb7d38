#include "airtime/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include <fmt/format.h>

#include "airtime/errors.hpp"

namespace airtime {

std::vector<NodeSlot> slot_sizes(std::span<const NodeId> ids, const Allocation& allocation,
                                 std::span<const double> betas, double t_slot_s) {
  if (!(t_slot_s > 0.0)) throw InvalidInput("basic slot size must be positive");
  if (ids.size() != allocation.size() || betas.size() != allocation.size()) {
    throw InvalidInput("slot sizing inputs disagree in length");
  }
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < allocation.size(); ++i) {
    const double airtime = (1.0 + betas[i]) * allocation.broadcast_s[i];
    if (airtime > 0.0) smallest = std::min(smallest, airtime);
  }
  if (!std::isfinite(smallest)) {
    throw InvalidInput("degenerate allocation: no node has airtime to schedule");
  }

  std::vector<NodeSlot> slots;
  for (std::size_t i = 0; i < allocation.size(); ++i) {
    const double airtime = (1.0 + betas[i]) * allocation.broadcast_s[i];
    if (!(airtime > 0.0)) continue;
    NodeSlot slot;
    slot.node = ids[i];
    slot.whole_s = airtime / smallest * t_slot_s;
    slot.broadcast_s = slot.whole_s / (1.0 + betas[i]);
    slot.upload_s = betas[i] * slot.whole_s / (1.0 + betas[i]);
    slots.push_back(slot);
  }
  return slots;
}

std::vector<NodeSlot> slot_sizes(const BargainingProblem& problem, const Allocation& allocation,
                                 double t_slot_s) {
  std::vector<NodeId> ids;
  ids.reserve(problem.size());
  for (const Player& p : problem.players()) ids.push_back(p.id);
  return slot_sizes(ids, allocation, problem.betas(), t_slot_s);
}

std::vector<NodeId> round_robin_order(std::span<const NodeSlot> slots, NodeId go) {
  std::vector<NodeId> order;
  for (const NodeSlot& s : slots) order.push_back(s.node);
  std::sort(order.begin(), order.end(), [go](NodeId a, NodeId b) {
    if ((a == go) != (b == go)) return b == go;
    return to_int(a) < to_int(b);
  });
  return order;
}

double Schedule::scheduled(NodeId node, SlotKind kind) const {
  double total = 0.0;
  for (const ScheduleEntry& e : entries) {
    if (e.node == node && e.kind == kind) total += e.duration_s;
  }
  return total;
}

double Schedule::scheduled_until(NodeId node, SlotKind kind, double until) const {
  double total = 0.0;
  for (const ScheduleEntry& e : entries) {
    if (e.start_s >= until) break;
    if (e.node == node && e.kind == kind) {
      total += std::min(e.duration_s, until - e.start_s);
    }
  }
  return total;
}

Schedule build_schedule(std::span<const NodeSlot> slots, double interval_s,
                        std::span<const NodeId> order, double t_start_s) {
  if (!(interval_s > 0.0)) throw InvalidInput("schedule interval must be positive");
  if (order.size() != slots.size()) throw InvalidInput("order must list every slot once");
  std::vector<const NodeSlot*> sequence;
  std::set<NodeId> seen;
  for (NodeId id : order) {
    auto it = std::find_if(slots.begin(), slots.end(),
                           [id](const NodeSlot& s) { return s.node == id; });
    if (it == slots.end() || !seen.insert(id).second) {
      throw InvalidInput(fmt::format("order lists node {} without a unique slot", to_int(id)));
    }
    sequence.push_back(&*it);
  }

  Schedule schedule;
  schedule.t_start_s = t_start_s;
  schedule.interval_s = interval_s;
  for (const NodeSlot* s : sequence) schedule.cycle_length_s += s->whole_s;
  if (schedule.cycle_length_s > interval_s * (1.0 + 1e-12)) {
    throw InvalidInput(fmt::format("one cycle ({} s) is longer than the interval ({} s)",
                                   schedule.cycle_length_s, interval_s));
  }
  if (sequence.empty()) return schedule;

  const double end = t_start_s + interval_s;
  constexpr double kMinPiece = 1e-12;
  auto emit = [&](NodeId node, SlotKind kind, double start, double length) {
    const double stop = std::min(start + length, end);
    if (stop - start > kMinPiece) schedule.entries.push_back({node, kind, start, stop - start});
  };
  for (std::size_t cycle = 0;; ++cycle) {
    double t = t_start_s + static_cast<double>(cycle) * schedule.cycle_length_s;
    if (t >= end - kMinPiece) break;
    for (const NodeSlot* s : sequence) {
      if (t >= end) break;
      if (s->upload_s > 0.0) emit(s->node, SlotKind::upload, t, s->upload_s);
      t += s->upload_s;
      if (t >= end) break;
      emit(s->node, SlotKind::broadcast, t, s->broadcast_s);
      t += s->broadcast_s;
    }
  }
  return schedule;
}

std::string_view to_string(SlotKind kind) {
  return kind == SlotKind::upload ? "upload" : "broadcast";
}

std::string schedule_csv(const Schedule& schedule) {
  std::string out = "node_id,kind,start_s,duration_s\n";
  for (const ScheduleEntry& e : schedule.entries) {
    out += fmt::format("{},{},{:.6f},{:.6f}\n", to_int(e.node), to_string(e.kind), e.start_s,
                       e.duration_s);
  }
  return out;
}

}  // namespace airtime
