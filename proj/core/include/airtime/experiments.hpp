#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "airtime/scenario.hpp"
#include "airtime/simulator.hpp"

namespace airtime {

/// Seed of repetition `rep` derived from a base seed.
std::uint64_t repetition_seed(std::uint64_t base_seed, std::uint64_t rep);

struct ContactSeries {
  std::vector<double> nash_product;  // realized, one per contact
  std::vector<double> running_mean;
  /// Bargaining optimum of the unperturbed contact.
  double ideal = 0.0;
};

/// Replays `base` as `n_contacts` independent contacts, each with its own
/// PCD-error and loss draws.
ContactSeries repeated_contacts(const Scenario& base, std::size_t n_contacts,
                                Policy policy = Policy::gsa);

struct SweepPoint {
  double t_slot_s = 0.0;
  double mean_wpf = 0.0;
  double stddev_wpf = 0.0;  // sample standard deviation
  std::vector<double> samples;
};

/// Mean WPF aggregate (realized vs. bargaining optimum) of GSA for each
/// slot size. Repetition r uses the same seed for every slot size.
std::vector<SweepPoint> slot_size_sweep(const Scenario& scenario, std::span<const double> t_slots_s,
                                        std::size_t repetitions);

struct PolicyOutcome {
  Policy policy = Policy::gsa;
  double nash_product_realized = 0.0;
  double nash_product_ideal = 0.0;
  /// Per node (ascending id): megabits sent per second of membership.
  std::vector<NodeId> nodes;
  std::vector<double> dissemination_rate_mbps;
};

/// Runs the scenario once per policy with identical seeds.
std::vector<PolicyOutcome> compare_policies(const Scenario& scenario,
                                            std::span<const Policy> policies);

struct DurationRow {
  double duration_s = 0.0;
  double gsa = 0.0;
  double eql = 0.0;
  double wtd = 0.0;
};

/// Mean realized Nash product per policy for each contact duration, over
/// `repetitions` seeded repetitions.
std::vector<DurationRow> compare_over_durations(const Scenario& scenario,
                                                std::span<const double> durations_s,
                                                std::size_t repetitions);

std::string sweep_csv(std::span<const SweepPoint> points);
std::string durations_csv(std::span<const DurationRow> rows);

}  // namespace airtime
