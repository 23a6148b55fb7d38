#include "airtime/schedule.hpp"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "airtime/errors.hpp"
#include "airtime/gnbs.hpp"
#include "random_problem.hpp"
#include "table1.hpp"

namespace airtime {
namespace {

using testing::table1_problem;

std::vector<NodeId> ids_of(const BargainingProblem& p) {
  std::vector<NodeId> ids;
  for (const Player& pl : p.players()) ids.push_back(pl.id);
  return ids;
}

TEST(SlotSizes, TableOneAtTwentyMilliseconds) {
  const BargainingProblem p = table1_problem();
  const std::vector<NodeSlot> slots = slot_sizes(p, gnbs_allocate(p).allocation, 0.020);
  ASSERT_EQ(slots.size(), 6u);
  for (const NodeSlot& s : slots) {
    if (s.node == node_id(4)) {
      EXPECT_NEAR(s.whole_s, 0.040, 1e-12);
      EXPECT_EQ(s.upload_s, 0.0);
      EXPECT_NEAR(s.broadcast_s, 0.040, 1e-12);
    } else {
      EXPECT_NEAR(s.whole_s, 0.020, 1e-12);
      EXPECT_NEAR(s.upload_s, 0.010, 1e-12);
      EXPECT_NEAR(s.broadcast_s, 0.010, 1e-12);
    }
  }
}

TEST(SlotSizes, IdenticalPlayersShareTheBaseSlot) {
  const std::vector<NodeId> ids = {node_id(1), node_id(2), node_id(3)};
  const std::vector<double> betas = {0.0, 0.0, 0.0};
  const Allocation a{{1.0, 1.0, 1.0}, {0.0, 0.0, 0.0}, false};
  for (const NodeSlot& s : slot_sizes(ids, a, betas, 0.05)) {
    EXPECT_DOUBLE_EQ(s.whole_s, 0.05);
    EXPECT_EQ(s.upload_s, 0.0);
    EXPECT_DOUBLE_EQ(s.broadcast_s, s.whole_s);
  }
}

TEST(SlotSizes, ZeroAllocationDropsTheNode) {
  const std::vector<NodeId> ids = {node_id(1), node_id(2)};
  const std::vector<double> betas = {0.0, 1.0};
  const Allocation a{{1.0, 0.0}, {0.0, 0.0}, false};
  EXPECT_EQ(slot_sizes(ids, a, betas, 0.02).size(), 1u);
  const Allocation none{{0.0, 0.0}, {0.0, 0.0}, false};
  EXPECT_THROW(slot_sizes(ids, none, betas, 0.02), InvalidInput);
  EXPECT_THROW(slot_sizes(ids, a, betas, 0.0), InvalidInput);
}

TEST(SlotSizes, RatiosAndSplitOnRandomAllocations) {
  std::mt19937_64 rng(51);
  for (int k = 0; k < 200; ++k) {
    const BargainingProblem p = testing::random_problem(rng);
    const Allocation a = gnbs_allocate(p).allocation;
    const std::vector<NodeSlot> slots = slot_sizes(p, a, 0.02);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const double bi = p.beta(i);
      EXPECT_NEAR(slots[i].upload_s + slots[i].broadcast_s, slots[i].whole_s, 1e-15);
      EXPECT_NEAR(slots[i].upload_s, bi * slots[i].broadcast_s, 1e-12);
      for (std::size_t j = 0; j < slots.size(); ++j) {
        const double want = (1.0 + bi) * a.broadcast_s[i] / ((1.0 + p.beta(j)) * a.broadcast_s[j]);
        EXPECT_NEAR(slots[i].whole_s / slots[j].whole_s, want, 1e-9 * want);
      }
    }
  }
}

TEST(RoundRobin, AscendingIdsGoLast) {
  const std::vector<NodeSlot> slots = {{node_id(5), 1, 0, 1}, {node_id(2), 1, 0, 1},
                                       {node_id(3), 1, 0, 1}};
  EXPECT_EQ(round_robin_order(slots, node_id(2)),
            (std::vector<NodeId>{node_id(3), node_id(5), node_id(2)}));
}

TEST(BuildSchedule, TableOneCycleAndTruncation) {
  const BargainingProblem p = table1_problem();
  const Allocation a = gnbs_allocate(p).allocation;
  const std::vector<NodeSlot> slots = slot_sizes(p, a, 0.020);
  const Schedule s = build_schedule(slots, 10.0, round_robin_order(slots, node_id(4)), 0.0);
  EXPECT_NEAR(s.cycle_length_s, 0.140, 1e-12);
  // 71 full cycles = 9.94 s; the last 60 ms cover n1, n2 and n3.
  EXPECT_NEAR(s.scheduled(node_id(1), SlotKind::broadcast), 72 * 0.010, 1e-9);
  EXPECT_NEAR(s.scheduled(node_id(3), SlotKind::broadcast), 72 * 0.010, 1e-9);
  EXPECT_NEAR(s.scheduled(node_id(5), SlotKind::broadcast), 71 * 0.010, 1e-9);
  EXPECT_NEAR(s.scheduled(node_id(4), SlotKind::broadcast), 71 * 0.040, 1e-9);
  for (std::uint32_t id = 1; id <= 6; ++id) {
    const std::size_t i = id - 1;
    EXPECT_LE(std::abs(s.scheduled(node_id(id), SlotKind::broadcast) - a.broadcast_s[i]),
              slots[i].whole_s);
  }
  double total = 0.0;
  for (const ScheduleEntry& e : s.entries) total += e.duration_s;
  EXPECT_NEAR(total, 10.0, 1e-9);
  EXPECT_NEAR(s.entries.back().start_s + s.entries.back().duration_s, 10.0, 1e-9);
}

TEST(BuildSchedule, UploadImmediatelyPrecedesBroadcastAndGoOnlyBroadcasts) {
  const BargainingProblem p = table1_problem();
  const std::vector<NodeSlot> slots = slot_sizes(p, gnbs_allocate(p).allocation, 0.020);
  const Schedule s = build_schedule(slots, 10.0, round_robin_order(slots, node_id(4)), 2.0);
  for (std::size_t k = 0; k < s.entries.size(); ++k) {
    const ScheduleEntry& e = s.entries[k];
    EXPECT_GT(e.duration_s, 0.0);
    if (k > 0) {
      const ScheduleEntry& prev = s.entries[k - 1];
      EXPECT_NEAR(prev.start_s + prev.duration_s, e.start_s, 1e-9);
    }
    if (e.node == node_id(4)) EXPECT_EQ(e.kind, SlotKind::broadcast);
    if (e.kind == SlotKind::upload && k + 1 < s.entries.size()) {
      EXPECT_EQ(s.entries[k + 1].node, e.node);
      EXPECT_EQ(s.entries[k + 1].kind, SlotKind::broadcast);
    }
  }
  EXPECT_DOUBLE_EQ(s.entries.front().start_s, 2.0);
}

TEST(BuildSchedule, WholeCyclesGiveExactShares) {
  const std::vector<NodeSlot> slots = {{node_id(1), 0.3, 0.1, 0.2}, {node_id(2), 0.1, 0.0, 0.1}};
  const std::vector<NodeId> order = {node_id(1), node_id(2)};
  const Schedule s = build_schedule(slots, 4.0, order, 0.0);
  EXPECT_NEAR(s.scheduled(node_id(1), SlotKind::broadcast), 10 * 0.2, 1e-12);
  EXPECT_NEAR(s.scheduled(node_id(1), SlotKind::upload), 10 * 0.1, 1e-12);
  EXPECT_NEAR(s.scheduled(node_id(2), SlotKind::broadcast), 10 * 0.1, 1e-12);
}

TEST(BuildSchedule, TwoNodeRoundHasNoUploads) {
  const std::vector<NodeId> ids = {node_id(1), node_id(2)};
  const std::vector<double> betas = {0.0, 0.0};
  const Allocation a{{2.5, 1.5}, {0.0, 0.0}, false};
  const std::vector<NodeSlot> slots = slot_sizes(ids, a, betas, 0.1);
  const Schedule s = build_schedule(slots, 4.0, round_robin_order(slots, node_id(1)), 0.0);
  for (const ScheduleEntry& e : s.entries) EXPECT_EQ(e.kind, SlotKind::broadcast);
}

TEST(BuildSchedule, Errors) {
  const std::vector<NodeSlot> slots = {{node_id(1), 0.3, 0.1, 0.2}, {node_id(2), 0.1, 0.0, 0.1}};
  const std::vector<NodeId> order = {node_id(1), node_id(2)};
  EXPECT_THROW(build_schedule(slots, 0.35, order, 0.0), InvalidInput);
  const std::vector<NodeId> missing = {node_id(1)};
  EXPECT_THROW(build_schedule(slots, 4.0, missing, 0.0), InvalidInput);
}

// Shrinking the base slot drives every node's scheduled broadcast time to its
// allocation: the error never exceeds that node's own whole slot.
TEST(BuildSchedule, SharesConvergeAsTheSlotShrinks) {
  std::mt19937_64 rng(52);
  for (int k = 0; k < 100; ++k) {
    const BargainingProblem p = testing::random_problem(rng);
    const Allocation a = gnbs_allocate(p).allocation;
    const std::vector<NodeId> ids = ids_of(p);
    double smallest = p.airtime();
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (a.broadcast_s[i] > 0) smallest = std::min(smallest, (1 + p.beta(i)) * a.broadcast_s[i]);
    }
    double previous_bound = 0.0;
    const double first = std::min(0.08, smallest);
    for (double t_slot = first; t_slot >= first / 64; t_slot /= 2) {
      const std::vector<NodeSlot> slots = slot_sizes(p, a, t_slot);
      const Schedule s =
          build_schedule(slots, p.airtime(), round_robin_order(slots, ids[p.go_index()]), 0.0);
      double bound = 0.0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        const double dev = std::abs(s.scheduled(ids[i], SlotKind::broadcast) - a.broadcast_s[i]);
        EXPECT_LE(dev, slots[i].whole_s + 1e-9) << "case " << k << " t_slot " << t_slot;
        bound = std::max(bound, slots[i].whole_s);
      }
      if (previous_bound > 0.0) EXPECT_LE(bound, previous_bound / 2 + 1e-12);
      previous_bound = bound;
    }
  }
}

TEST(ScheduleCsv, HeaderAndFixedDecimals) {
  const std::vector<NodeSlot> slots = {{node_id(1), 0.3, 0.1, 0.2}};
  const std::vector<NodeId> order = {node_id(1)};
  const std::string csv = schedule_csv(build_schedule(slots, 0.5, order, 1.0));
  EXPECT_EQ(csv,
            "node_id,kind,start_s,duration_s\n"
            "1,upload,1.000000,0.100000\n"
            "1,broadcast,1.100000,0.200000\n"
            "1,upload,1.300000,0.100000\n"
            "1,broadcast,1.400000,0.100000\n");
}

}  // namespace
}  // namespace airtime
