#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "airtime/errors.hpp"
#include "airtime/experiments.hpp"
#include "airtime/gnbs.hpp"
#include "airtime/metrics.hpp"
#include "airtime/scenario_io.hpp"
#include "airtime/simulator.hpp"

namespace airtime::cli {

namespace {

struct Source {
  std::string path;
  std::string preset;
  std::optional<std::uint64_t> seed;

  Scenario load() const {
    if (path.empty() == preset.empty()) {
      throw SchemaError("give either a scenario file or --preset");
    }
    Scenario s;
    if (!preset.empty()) {
      try {
        s = airtime::preset(preset);
      } catch (const InvalidInput& e) {
        throw SchemaError(e.what());
      }
    } else {
      s = load_scenario_file(path);
    }
    if (seed) s.seed = *seed;
    return s;
  }
};

void add_source(CLI::App& cmd, Source& source) {
  cmd.add_option("scenario", source.path, "Scenario JSON file");
  cmd.add_option("--preset", source.preset, "Built-in scenario (table1, dynamic4)");
  cmd.add_option("--seed", source.seed, "Override the scenario seed");
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw SchemaError(fmt::format("cannot write '{}'", out_path));
  file << text;
}

std::string role_name(const BargainingProblem& problem, std::size_t i) {
  return i == problem.go_index() ? "go" : "client";
}

std::string allocate_output(const Scenario& scenario, Policy policy, const std::string& format) {
  const BargainingProblem problem = period_problem(scenario, 0);
  const Allocation alloc = allocate(problem, policy);
  const Allocation reference = gnbs_allocate(problem).allocation;
  const double np = nash_product(problem, alloc);
  const double wpf = wpf_aggregate(problem, reference, alloc);
  std::string out;
  if (format == "csv") {
    out += "node_id,role,upload_s,broadcast_s,rate_mbps,utility\n";
    for (std::size_t i = 0; i < problem.size(); ++i) {
      out += fmt::format("{},{},{:.6f},{:.6f},{:.6f},{:.6f}\n", to_int(problem.player(i).id),
                         role_name(problem, i), alloc.upload_s[i], alloc.broadcast_s[i],
                         dissemination_rate(problem, alloc, i),
                         problem.active(i) ? utility_gain(problem, i, alloc.broadcast_s[i]) : 0.0);
    }
    out += fmt::format("# nash_product,{:.6f}\n# wpf_vs_gsa,{:.6f}\n", np, wpf);
    return out;
  }
  out += fmt::format("policy {}  airtime {:.3f} s\n", to_string(policy), problem.airtime());
  out += fmt::format("{:>6} {:>7} {:>9} {:>12} {:>10} {:>8}\n", "node", "role", "upload_s",
                     "broadcast_s", "rate_mbps", "utility");
  for (std::size_t i = 0; i < problem.size(); ++i) {
    out += fmt::format("{:>6} {:>7} {:>9.3f} {:>12.3f} {:>10.3f} {:>8.3f}\n",
                       to_int(problem.player(i).id), role_name(problem, i), alloc.upload_s[i],
                       alloc.broadcast_s[i], dissemination_rate(problem, alloc, i),
                       problem.active(i) ? utility_gain(problem, i, alloc.broadcast_s[i]) : 0.0);
  }
  out += fmt::format("nash product {:.3f}\nwpf vs gsa   {:.3f}\n", np, wpf);
  return out;
}

std::string schedule_table(const RoundRecord& round) {
  std::string out = fmt::format("round {}  go {}  cycle {:.3f} s  interval {:.3f} s\n",
                                round.index, to_int(round.go), round.schedule.cycle_length_s,
                                round.schedule.interval_s);
  out += fmt::format("{:>6} {:>10} {:>10} {:>10}\n", "node", "kind", "start_s", "duration_s");
  for (const ScheduleEntry& e : round.schedule.entries) {
    out += fmt::format("{:>6} {:>10} {:>10.3f} {:>10.3f}\n", to_int(e.node), to_string(e.kind),
                       e.start_s, e.duration_s);
  }
  return out;
}

std::string simulate_summary(const SimulationReport& report) {
  std::string out = fmt::format("policy {}  rounds {}\n", to_string(report.policy),
                                report.rounds.size());
  out += fmt::format("{:>5} {:>8} {:>8} {:>4} {:>8} {:>15}\n", "round", "start_s", "end_s", "go",
                     "members", "mode");
  for (const RoundRecord& r : report.rounds) {
    out += fmt::format("{:>5} {:>8.3f} {:>8.3f} {:>4} {:>8} {:>15}\n", r.index, r.start_s,
                       r.end_s, to_int(r.go), r.members.size(),
                       r.mode == TransmissionMode::unicast_pair ? "unicast-pair"
                                                                : "go-coordinated");
  }
  out += fmt::format("nash product realized {:.6f}  ideal {:.6f}  wpf {:.6f}\n",
                     report.nash_product_realized, report.nash_product_ideal,
                     report.wpf_aggregate_vs_ideal);
  return out;
}

double scenario_span(const Scenario& s) {
  double first = s.nodes.front().join_s;
  double last = s.nodes.front().leave_s;
  for (const ScenarioNode& n : s.nodes) {
    first = std::min(first, n.join_s);
    last = std::max(last, n.leave_s);
  }
  return last - first;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Airtime allocation for WiFi-Direct groups"};
  app.require_subcommand(1);

  Source source;
  std::string policy_name = "gsa";
  std::string format = "table";
  std::string out_path;
  std::size_t round_index = 0;
  std::size_t reps = 10;
  std::vector<double> durations;
  std::vector<double> slot_sizes_ms{5, 10, 20, 50, 100};

  auto* allocate_cmd = app.add_subcommand("allocate", "Allocate the first membership period");
  add_source(*allocate_cmd, source);
  allocate_cmd->add_option("--policy", policy_name, "gsa, eql or wtd");
  allocate_cmd->add_option("--format", format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  allocate_cmd->add_option("--out", out_path, "Write to this file instead of stdout");

  auto* schedule_cmd = app.add_subcommand("schedule", "Print the slot schedule of one round");
  add_source(*schedule_cmd, source);
  schedule_cmd->add_option("--round", round_index, "Round index (0-based)");
  schedule_cmd->add_option("--policy", policy_name, "gsa, eql or wtd");
  schedule_cmd->add_option("--format", format, "table or csv")
      ->check(CLI::IsMember({"table", "csv"}));
  schedule_cmd->add_option("--out", out_path, "Write to this file instead of stdout");

  auto* simulate_cmd = app.add_subcommand("simulate", "Run the scenario and write CSV reports");
  add_source(*simulate_cmd, source);
  simulate_cmd->add_option("--policy", policy_name, "gsa, eql or wtd");
  simulate_cmd->add_option("--out", out_path, "Output directory (created if missing)")
      ->required();

  auto* compare_cmd =
      app.add_subcommand("compare", "Mean Nash product per policy over contact durations");
  add_source(*compare_cmd, source);
  compare_cmd->add_option("--durations", durations, "Contact durations in seconds")
      ->delimiter(',');
  compare_cmd->add_option("--reps", reps, "Repetitions per duration")
      ->check(CLI::PositiveNumber);
  compare_cmd->add_option("--out", out_path, "Write to this file instead of stdout");

  auto* sweep_cmd = app.add_subcommand("sweep", "Mean WPF aggregate of GSA per basic slot size");
  add_source(*sweep_cmd, source);
  sweep_cmd->add_option("--slot-sizes", slot_sizes_ms, "Slot sizes in milliseconds")
      ->delimiter(',');
  sweep_cmd->add_option("--reps", reps, "Repetitions per slot size")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", out_path, "Write to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Scenario scenario = source.load();
    const Policy policy = parse_policy(policy_name);
    if (*allocate_cmd) {
      emit(allocate_output(scenario, policy, format), out_path, out);
    } else if (*schedule_cmd) {
      const SimulationReport report = run_scenario(scenario, policy);
      if (round_index >= report.rounds.size()) {
        throw InvalidInput(fmt::format("round {} does not exist (the run has {} rounds)",
                                       round_index, report.rounds.size()));
      }
      const RoundRecord& round = report.rounds[round_index];
      emit(format == "csv" ? schedule_csv(round.schedule) : schedule_table(round), out_path, out);
    } else if (*simulate_cmd) {
      const SimulationReport report = run_scenario(scenario, policy);
      const std::filesystem::path dir(out_path);
      std::filesystem::create_directories(dir);
      emit(rounds_csv(report), (dir / "rounds.csv").string(), out);
      emit(delivery_csv(report), (dir / "delivery.csv").string(), out);
      emit(metrics_csv(report), (dir / "metrics.csv").string(), out);
      out << simulate_summary(report);
    } else if (*compare_cmd) {
      if (durations.empty()) durations.push_back(scenario_span(scenario));
      emit(durations_csv(compare_over_durations(scenario, durations, reps)), out_path, out);
    } else if (*sweep_cmd) {
      std::vector<double> t_slots;
      for (double ms : slot_sizes_ms) t_slots.push_back(ms / 1000.0);
      emit(sweep_csv(slot_size_sweep(scenario, t_slots, reps)), out_path, out);
    }
  } catch (const InfeasibleProblem& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace airtime::cli
