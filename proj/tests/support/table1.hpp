#pragma once

#include <vector>

#include "airtime/problem.hpp"

namespace airtime::testing {

/// Six static nodes, T = 10 s, 11 Mb/s everywhere, n4 is the GO with twice
/// a client's bargaining power.
inline BargainingProblem table1_problem(double airtime_s = 10.0) {
  const double loads[] = {10, 20, 40, 40, 60, 80};
  std::vector<Player> players;
  for (std::uint32_t i = 0; i < 6; ++i) {
    Player p;
    p.id = node_id(i + 1);
    p.data_mb = loads[i];
    p.upload_mbps = 11.0;
    p.role = i == 3 ? Role::go : Role::client;
    p.alpha = i == 3 ? 2.0 : 1.0;
    players.push_back(p);
  }
  return BargainingProblem(std::move(players), airtime_s, 11.0);
}

inline Player make_player(std::uint32_t id, double data_mb, double upload_mbps, double alpha,
                          Role role = Role::client) {
  Player p;
  p.id = node_id(id);
  p.data_mb = data_mb;
  p.upload_mbps = upload_mbps;
  p.alpha = alpha;
  p.role = role;
  return p;
}

}  // namespace airtime::testing
