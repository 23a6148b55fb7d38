#include "airtime/problem.hpp"

#include <gtest/gtest.h>

#include "airtime/errors.hpp"
#include "table1.hpp"

namespace airtime {
namespace {

using testing::make_player;
using testing::table1_problem;

TEST(Problem, NormalizesAlphaAndDerivesBetaAndCaps) {
  const BargainingProblem p = table1_problem();
  double sum = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) sum += p.alpha(i);
  EXPECT_NEAR(sum, 1.0, 1e-15);
  EXPECT_NEAR(p.alpha(3), 2.0 / 7.0, 1e-15);
  EXPECT_NEAR(p.alpha(0), 1.0 / 7.0, 1e-15);
  EXPECT_EQ(p.beta(3), 0.0);
  EXPECT_EQ(p.beta(0), 1.0);
  EXPECT_NEAR(p.cap(5), 80.0 / 11.0, 1e-15);
  EXPECT_EQ(p.go_index(), 3u);
  EXPECT_FALSE(p.saturated());
}

TEST(Problem, DirectRelayForcesZeroBeta) {
  const BargainingProblem p({make_player(1, 10, 2.0, 1, Role::go), make_player(2, 10, 2.0, 1)},
                            5.0, 11.0, Relay::direct);
  EXPECT_EQ(p.beta(0), 0.0);
  EXPECT_EQ(p.beta(1), 0.0);
}

TEST(Problem, BetaIsBroadcastOverUploadRate) {
  const BargainingProblem p({make_player(1, 10, 11, 1, Role::go), make_player(2, 10, 5.5, 1)},
                            5.0, 11.0);
  EXPECT_DOUBLE_EQ(p.beta(1), 2.0);
}

TEST(Problem, ZeroLoadPlayersAreInactive) {
  const BargainingProblem p({make_player(1, 10, 11, 1, Role::go), make_player(2, 0, 11, 1),
                             make_player(3, 10, 11, 1)},
                            1.0, 11.0);
  EXPECT_TRUE(p.active(0));
  EXPECT_FALSE(p.active(1));
  EXPECT_NEAR(p.total_demand(), 10.0 / 11.0 + 20.0 / 11.0, 1e-12);
}

TEST(Problem, SaturatedWhenDemandFits) {
  const BargainingProblem p({make_player(1, 11, 11, 1, Role::go), make_player(2, 11, 11, 1)},
                            3.0, 11.0);
  EXPECT_TRUE(p.saturated());
  EXPECT_FALSE(p.with_airtime(2.5).saturated());
}

TEST(Problem, ValidationErrors) {
  EXPECT_THROW(BargainingProblem({}, 1.0, 11.0), InvalidInput);
  EXPECT_THROW(BargainingProblem({make_player(1, 10, 11, 1)}, 1.0, 11.0), InvalidInput);
  EXPECT_THROW(BargainingProblem({make_player(1, 10, 11, 1, Role::go),
                                  make_player(1, 10, 11, 1)},
                                 1.0, 11.0),
               InvalidInput);
  EXPECT_THROW(BargainingProblem({make_player(1, 10, 11, 0, Role::go)}, 1.0, 11.0), InvalidInput);
  EXPECT_THROW(BargainingProblem({make_player(1, -1, 11, 1, Role::go)}, 1.0, 11.0), InvalidInput);
  EXPECT_THROW(BargainingProblem({make_player(1, 10, 11, 1, Role::go), make_player(2, 10, 0, 1)},
                                 1.0, 11.0),
               InvalidInput);
  EXPECT_THROW(BargainingProblem({make_player(1, 10, 11, 1, Role::go)}, 0.0, 11.0), InvalidInput);
}

TEST(Problem, NobodyWithDataIsInfeasible) {
  EXPECT_THROW(BargainingProblem({make_player(1, 0, 11, 1, Role::go), make_player(2, 0, 11, 1)},
                                 1.0, 11.0),
               InfeasibleProblem);
}

TEST(Problem, DisagreementMustLeaveRoom) {
  Player go = make_player(1, 11, 11, 1, Role::go);
  go.disagreement_s = 1.0;  // equals the cap
  EXPECT_THROW(BargainingProblem({go, make_player(2, 10, 11, 1)}, 5.0, 11.0), InfeasibleProblem);
  go.disagreement_s = 0.5;
  Player c = make_player(2, 11, 11, 1);
  c.disagreement_s = 0.5;  // (1+1)*0.5 + 0.5 = 1.5 >= T
  EXPECT_THROW(BargainingProblem({go, c}, 1.5, 11.0), InfeasibleProblem);
}

TEST(Problem, AllocationHelpers) {
  const BargainingProblem p = table1_problem();
  const Allocation a = make_allocation(p, {0.5, 0.5, 0.5, 2.0, 0.5, 0.5}, false);
  EXPECT_DOUBLE_EQ(a.upload_s[0], 0.5);
  EXPECT_DOUBLE_EQ(a.upload_s[3], 0.0);
  EXPECT_NEAR(airtime_used(p, a.broadcast_s), 7.0, 1e-12);
  EXPECT_FALSE(feasibility_violation(p, a, 1e-9).empty());  // budget not used up
  const Allocation full = make_allocation(p, {5.0 / 7, 5.0 / 7, 5.0 / 7, 20.0 / 7, 5.0 / 7, 5.0 / 7},
                                          false);
  EXPECT_EQ(feasibility_violation(p, full, 1e-9), "");
  const Allocation over = make_allocation(p, {2.0, 0, 0, 0, 0, 0}, false);
  EXPECT_FALSE(feasibility_violation(p, over, 1e-9).empty());  // above the cap
}

}  // namespace
}  // namespace airtime
