#include "airtime/simulator.hpp"

#include <algorithm>
#include <random>
#include <map>
#include <optional>

#include <fmt/format.h>

#include "airtime/baselines.hpp"
#include "airtime/errors.hpp"
#include "airtime/gnbs.hpp"
#include "airtime/metrics.hpp"

namespace airtime {

std::string_view to_string(Policy policy) {
  switch (policy) {
    case Policy::gsa:
      return "gsa";
    case Policy::eql:
      return "eql";
    case Policy::wtd:
      return "wtd";
  }
  return "unknown";
}

Policy parse_policy(std::string_view name) {
  if (name == "gsa") return Policy::gsa;
  if (name == "eql") return Policy::eql;
  if (name == "wtd") return Policy::wtd;
  throw InvalidInput(fmt::format("unknown policy '{}' (expected gsa, eql or wtd)", name));
}

Allocation allocate(const BargainingProblem& problem, Policy policy) {
  switch (policy) {
    case Policy::gsa:
      return gnbs_allocate(problem).allocation;
    case Policy::eql:
      return eql_allocate(problem);
    case Policy::wtd:
      return wtd_allocate(problem);
  }
  throw InvalidInput("unknown policy");
}

namespace {

constexpr double kNoData = 1e-9;  // megabits
constexpr double kTimeEps = 1e-9;

std::uint64_t pair_subject(NodeId a, NodeId b) {
  const std::uint64_t lo = std::min(to_int(a), to_int(b));
  const std::uint64_t hi = std::max(to_int(a), to_int(b));
  return (hi << 32) | lo;
}

std::vector<ContactTable> build_tables(const Scenario& scenario, std::span<const NodeId> members,
                                       std::span<const double> load_mb, double now,
                                       std::size_t round, bool estimated) {
  std::vector<ContactTable> tables;
  tables.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    tables.push_back({members[i], load_mb[i], {}});
  }
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const double true_pcd = std::min(scenario.node(members[i]).leave_s,
                                       scenario.node(members[j]).leave_s) - now;
      double pcd = true_pcd;
      if (estimated) {
        CounterRng rng = make_stream(scenario.seed, pair_subject(members[i], members[j]), round,
                                     Purpose::pcd_error);
        pcd = estimate_pcd(true_pcd, scenario.pcd_error, rng);
      }
      tables[i] = update_contact_table(std::move(tables[i]), JoinEvent{members[j], pcd, load_mb[j]});
      tables[j] = update_contact_table(std::move(tables[j]), JoinEvent{members[i], pcd, load_mb[i]});
    }
  }
  return tables;
}

RoleAssignment roles_for(const Scenario& scenario, std::span<const ContactTable> tables,
                         std::span<const NodeId> members, double now) {
  try {
    return select_roles(tables, scenario.connectivity(members));
  } catch (const InvalidInput& e) {
    throw InvalidInput(fmt::format("at t = {:.6f} s: {}", now, e.what()));
  }
}

BargainingProblem make_problem(const Scenario& scenario, std::span<const NodeId> members,
                               std::span<const double> load_mb, std::span<const double> loss,
                               NodeId go, double airtime_s) {
  std::vector<Player> players;
  players.reserve(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    const ScenarioNode& n = scenario.node(members[i]);
    Player p;
    p.id = members[i];
    p.data_mb = std::max(0.0, load_mb[i]);
    p.upload_mbps = effective_upload_rate(n.upload_mbps, loss[i]);
    p.role = members[i] == go ? Role::go : Role::client;
    p.alpha = n.alpha * (p.role == Role::go ? scenario.go_alpha_factor : 1.0);
    players.push_back(p);
  }
  const Relay relay = select_transmission_mode(members.size()) == TransmissionMode::unicast_pair
                          ? Relay::direct
                          : Relay::relayed;
  return BargainingProblem(std::move(players), airtime_s, scenario.broadcast_mbps, relay);
}

bool has_data(std::span<const double> load_mb) {
  return std::any_of(load_mb.begin(), load_mb.end(), [](double m) { return m > kNoData; });
}

struct Membership {
  double start_s = 0.0;
  double end_s = 0.0;
  std::vector<NodeId> members;  // ascending id
};

/// Intervals between consecutive distinct event times with >= 2 members.
std::vector<Membership> membership_periods(const Scenario& scenario) {
  std::vector<double> times;
  for (const ScenarioNode& n : scenario.nodes) {
    times.push_back(n.join_s);
    times.push_back(n.leave_s);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  std::vector<Membership> out;
  for (std::size_t p = 0; p + 1 < times.size(); ++p) {
    Membership m{times[p], times[p + 1], {}};
    for (const ScenarioNode& n : scenario.nodes) {
      if (n.join_s <= m.start_s && n.leave_s >= m.end_s) m.members.push_back(n.id);
    }
    std::sort(m.members.begin(), m.members.end(),
              [](NodeId a, NodeId b) { return to_int(a) < to_int(b); });
    if (m.members.size() >= 2) out.push_back(std::move(m));
  }
  return out;
}

std::vector<double> period_loads(const Scenario& scenario, std::span<const NodeId> members) {
  std::vector<double> loads;
  for (NodeId id : members) loads.push_back(scenario.period_load(scenario.node(id), members.size()));
  return loads;
}

BargainingProblem ideal_problem(const Scenario& scenario, const Membership& m,
                                std::span<const double> loads, std::size_t round) {
  const std::vector<ContactTable> tables =
      build_tables(scenario, m.members, loads, m.start_s, round, false);
  const NodeId go = roles_for(scenario, tables, m.members, m.start_s).go;
  const std::vector<double> no_loss(m.members.size(), 0.0);
  return make_problem(scenario, m.members, loads, no_loss, go, m.end_s - m.start_s);
}

}  // namespace

BargainingProblem period_problem(const Scenario& scenario, std::size_t period) {
  scenario.validate();
  const std::vector<Membership> periods = membership_periods(scenario);
  if (period >= periods.size()) {
    throw InvalidInput(fmt::format("period {} does not exist (scenario has {} with two or more members)",
                                   period, periods.size()));
  }
  const Membership& m = periods[period];
  return ideal_problem(scenario, m, period_loads(scenario, m.members), 0);
}

SimulationReport run_scenario(const Scenario& scenario, Policy policy) {
  scenario.validate();
  SimulationReport report;
  report.policy = policy;

  std::vector<NodeId> all_ids;
  for (const ScenarioNode& n : scenario.nodes) all_ids.push_back(n.id);
  std::sort(all_ids.begin(), all_ids.end(),
            [](NodeId a, NodeId b) { return to_int(a) < to_int(b); });
  std::map<NodeId, NodeTotals> totals;
  for (NodeId id : all_ids) totals[id].id = id;

  const double rb = scenario.broadcast_mbps;
  std::size_t round_index = 0;
  for (const Membership& m : membership_periods(scenario)) {
    const double period_start = m.start_s;
    const double period_end = m.end_s;
    const std::vector<NodeId>& members = m.members;

    PeriodRecord period;
    period.index = report.periods.size();
    period.start_s = period_start;
    period.end_s = period_end;
    period.members = members;
    for (NodeId id : members) {
      period.load_mb.push_back(scenario.period_load(scenario.node(id), members.size()));
      totals[id].offered_mb += period.load_mb.back();
    }
    period.realized_broadcast_s.assign(members.size(), 0.0);

    // Reference point: true period length, nominal rates, no slotting.
    std::optional<BargainingProblem> reference;
    if (has_data(period.load_mb)) {
      reference.emplace(ideal_problem(scenario, m, period.load_mb, round_index));
      period.go = reference->player(reference->go_index()).id;
      period.ideal_broadcast_s = gnbs_allocate(*reference).allocation.broadcast_s;
      for (std::size_t i = 0; i < members.size(); ++i) period.alpha.push_back(reference->alpha(i));
    }

    std::vector<double> remaining = period.load_mb;
    double now = period_start;
    RoundTrigger trigger = RoundTrigger::membership_change;
    while (now < period_end - kTimeEps && has_data(remaining)) {
      RoundRecord round;
      round.index = round_index;
      round.period = period.index;
      round.trigger = trigger;
      round.start_s = now;
      round.members = members;
      round.load_mb = remaining;

      const std::vector<ContactTable> tables =
          build_tables(scenario, members, remaining, now, round_index, true);
      round.go = roles_for(scenario, tables, members, now).go;
      round.mode = select_transmission_mode(members.size());
      const auto go_table = std::find_if(tables.begin(), tables.end(),
                                         [&](const ContactTable& t) { return t.owner == round.go; });
      round.estimated_interval_s = allocation_interval(*go_table, round.go);

      round.loss_probability.assign(members.size(), 0.0);
      if (scenario.loss) {
        for (std::size_t i = 0; i < members.size(); ++i) {
          CounterRng rng = make_stream(scenario.seed, to_int(members[i]), round_index, Purpose::loss);
          std::uniform_real_distribution<double> uniform(scenario.loss->lo, scenario.loss->hi);
          round.loss_probability[i] = scenario.loss->hi > scenario.loss->lo ? uniform(rng)
                                                                            : scenario.loss->lo;
        }
      }

      const BargainingProblem problem = make_problem(scenario, members, remaining,
                                                     round.loss_probability, round.go,
                                                     round.estimated_interval_s);
      round.beta.assign(problem.betas().begin(), problem.betas().end());
      round.allocation = allocate(problem, policy);

      double smallest_airtime = round.estimated_interval_s;
      for (std::size_t i = 0; i < members.size(); ++i) {
        const double a = (1.0 + round.beta[i]) * round.allocation.broadcast_s[i];
        if (a > 0.0) smallest_airtime = std::min(smallest_airtime, a);
      }
      const double used = airtime_used(problem, round.allocation.broadcast_s);
      const double busy = std::min(round.estimated_interval_s, used);
      // A slot longer than somebody's whole allocation would overrun it; the
      // busy-to-used ratio keeps one cycle inside the interval despite rounding.
      const double t_slot = std::min(scenario.t_slot_s, smallest_airtime * std::min(1.0, busy / used));
      round.slots = slot_sizes(problem, round.allocation, t_slot);
      const std::vector<NodeId> order = round_robin_order(round.slots, round.go);
      round.schedule = build_schedule(round.slots, busy, order, now);

      const double interval_end = now + round.estimated_interval_s;
      round.end_s = std::min(interval_end, period_end);

      std::vector<CounterRng> reception;
      for (NodeId id : members) {
        reception.push_back(make_stream(scenario.seed, to_int(id), round_index, Purpose::reception));
      }
      round.realized_broadcast_s.assign(members.size(), 0.0);
      for (const ScheduleEntry& e : round.schedule.entries) {
        if (e.start_s >= round.end_s) break;
        if (e.kind != SlotKind::broadcast) continue;
        const std::size_t i = static_cast<std::size_t>(
            std::find(members.begin(), members.end(), e.node) - members.begin());
        const double airtime = std::min(e.duration_s, round.end_s - e.start_s);
        const double sent_s = std::min(airtime, remaining[i] / rb);
        if (!(sent_s > 0.0)) continue;
        round.realized_broadcast_s[i] += sent_s;
        remaining[i] = std::max(0.0, remaining[i] - sent_s * rb);
        NodeTotals& sender = totals[e.node];
        sender.broadcast_s += sent_s;
        sender.sent_mb += sent_s * rb;
        for (std::size_t j = 0; j < members.size(); ++j) {
          if (j == i) continue;
          std::bernoulli_distribution delivered(1.0 - round.loss_probability[j]);
          if (delivered(reception[j])) sender.received_mb += sent_s * rb;
        }
      }
      const double length = round.end_s - round.start_s;
      for (std::size_t i = 0; i < members.size(); ++i) {
        round.realized_rate_mbps.push_back(rb * round.realized_broadcast_s[i] / length);
        period.realized_broadcast_s[i] += round.realized_broadcast_s[i];
      }

      now = round.end_s;
      trigger = RoundTrigger::interval_expired;
      report.rounds.push_back(std::move(round));
      ++round_index;
    }

    if (reference) {
      period.nash_product_ideal = nash_product(*reference, period.ideal_broadcast_s);
      period.nash_product_realized = nash_product(*reference, period.realized_broadcast_s);
      period.wpf_aggregate =
          wpf_aggregate(*reference, period.ideal_broadcast_s, period.realized_broadcast_s);
    }
    report.periods.push_back(std::move(period));
  }

  std::size_t scored = 0;
  for (const PeriodRecord& period : report.periods) {
    if (period.ideal_broadcast_s.empty()) continue;
    ++scored;
    report.nash_product_realized += period.nash_product_realized;
    report.nash_product_ideal += period.nash_product_ideal;
    report.wpf_aggregate_vs_ideal += period.wpf_aggregate;
  }
  if (scored > 0) {
    report.nash_product_realized /= static_cast<double>(scored);
    report.nash_product_ideal /= static_cast<double>(scored);
    report.wpf_aggregate_vs_ideal /= static_cast<double>(scored);
  }
  for (NodeId id : all_ids) report.totals.push_back(totals[id]);
  return report;
}

namespace {

std::string_view mode_name(TransmissionMode mode) {
  return mode == TransmissionMode::unicast_pair ? "unicast-pair" : "go-coordinated";
}

std::string_view trigger_name(RoundTrigger trigger) {
  return trigger == RoundTrigger::membership_change ? "membership" : "interval-expired";
}

std::string member_list(std::span<const NodeId> members) {
  std::string out;
  for (NodeId id : members) {
    if (!out.empty()) out += ';';
    out += to_string(id);
  }
  return out;
}

}  // namespace

std::string rounds_csv(const SimulationReport& report) {
  std::string out =
      "round,period,trigger,start_s,end_s,estimated_interval_s,go_id,mode,node_id,role,load_mb,"
      "loss_p,beta,upload_s,broadcast_s,upload_slot_s,broadcast_slot_s,realized_broadcast_s,"
      "realized_rate_mbps\n";
  for (const RoundRecord& r : report.rounds) {
    for (std::size_t i = 0; i < r.members.size(); ++i) {
      const NodeId id = r.members[i];
      double up_slot = 0.0;
      double bc_slot = 0.0;
      for (const NodeSlot& s : r.slots) {
        if (s.node == id) {
          up_slot = s.upload_s;
          bc_slot = s.broadcast_s;
        }
      }
      out += fmt::format(
          "{},{},{},{:.6f},{:.6f},{:.6f},{},{},{},{},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},{:.6f},"
          "{:.6f},{:.6f},{:.6f}\n",
          r.index, r.period, trigger_name(r.trigger), r.start_s, r.end_s, r.estimated_interval_s,
          to_int(r.go), mode_name(r.mode), to_int(id), id == r.go ? "go" : "client", r.load_mb[i],
          r.loss_probability[i], r.beta[i], r.allocation.upload_s[i], r.allocation.broadcast_s[i],
          up_slot, bc_slot, r.realized_broadcast_s[i], r.realized_rate_mbps[i]);
    }
  }
  return out;
}

std::string delivery_csv(const SimulationReport& report) {
  std::string out = "node_id,offered_mb,sent_mb,received_mb,broadcast_s\n";
  for (const NodeTotals& t : report.totals) {
    out += fmt::format("{},{:.6f},{:.6f},{:.6f},{:.6f}\n", to_int(t.id), t.offered_mb, t.sent_mb,
                       t.received_mb, t.broadcast_s);
  }
  return out;
}

std::string metrics_csv(const SimulationReport& report) {
  std::string out =
      "period,start_s,end_s,go_id,members,nash_product_realized,nash_product_ideal,wpf_aggregate\n";
  for (const PeriodRecord& p : report.periods) {
    out += fmt::format("{},{:.6f},{:.6f},{},{},{:.6f},{:.6f},{:.6f}\n", p.index, p.start_s,
                       p.end_s, to_int(p.go), member_list(p.members), p.nash_product_realized,
                       p.nash_product_ideal, p.wpf_aggregate);
  }
  out += fmt::format("all,,,,,{:.6f},{:.6f},{:.6f}\n", report.nash_product_realized,
                     report.nash_product_ideal, report.wpf_aggregate_vs_ideal);
  return out;
}

}  // namespace airtime
