#include "airtime/experiments.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

#include "airtime/errors.hpp"

namespace airtime {

std::uint64_t repetition_seed(std::uint64_t base_seed, std::uint64_t rep) {
  return stream_key(base_seed, rep, 0, static_cast<std::uint64_t>(Purpose::repetition));
}

ContactSeries repeated_contacts(const Scenario& base, std::size_t n_contacts, Policy policy) {
  ContactSeries series;
  series.ideal = run_scenario(without_randomness(base), policy).nash_product_ideal;
  double sum = 0.0;
  for (std::size_t k = 0; k < n_contacts; ++k) {
    Scenario contact = base;
    contact.seed = repetition_seed(base.seed, k);
    const double np = run_scenario(contact, policy).nash_product_realized;
    sum += np;
    series.nash_product.push_back(np);
    series.running_mean.push_back(sum / static_cast<double>(k + 1));
  }
  return series;
}

std::vector<SweepPoint> slot_size_sweep(const Scenario& scenario, std::span<const double> t_slots_s,
                                        std::size_t repetitions) {
  if (repetitions == 0) throw InvalidInput("need at least one repetition");
  std::vector<SweepPoint> points;
  for (double t_slot : t_slots_s) {
    if (!(t_slot > 0.0)) throw InvalidInput("slot sizes must be positive");
    SweepPoint point;
    point.t_slot_s = t_slot;
    for (std::size_t r = 0; r < repetitions; ++r) {
      Scenario rep = scenario;
      rep.t_slot_s = t_slot;
      rep.seed = repetition_seed(scenario.seed, r);
      point.samples.push_back(run_scenario(rep, Policy::gsa).wpf_aggregate_vs_ideal);
    }
    const double n = static_cast<double>(repetitions);
    double sum = 0.0;
    for (double s : point.samples) sum += s;
    point.mean_wpf = sum / n;
    double sq = 0.0;
    for (double s : point.samples) sq += (s - point.mean_wpf) * (s - point.mean_wpf);
    point.stddev_wpf = repetitions > 1 ? std::sqrt(sq / (n - 1.0)) : 0.0;
    points.push_back(std::move(point));
  }
  return points;
}

std::vector<PolicyOutcome> compare_policies(const Scenario& scenario,
                                            std::span<const Policy> policies) {
  std::vector<PolicyOutcome> outcomes;
  for (Policy policy : policies) {
    const SimulationReport report = run_scenario(scenario, policy);
    PolicyOutcome out;
    out.policy = policy;
    out.nash_product_realized = report.nash_product_realized;
    out.nash_product_ideal = report.nash_product_ideal;
    for (const NodeTotals& t : report.totals) {
      double present = 0.0;
      for (const PeriodRecord& p : report.periods) {
        if (std::find(p.members.begin(), p.members.end(), t.id) != p.members.end()) {
          present += p.end_s - p.start_s;
        }
      }
      out.nodes.push_back(t.id);
      out.dissemination_rate_mbps.push_back(present > 0.0 ? t.sent_mb / present : 0.0);
    }
    outcomes.push_back(std::move(out));
  }
  return outcomes;
}

std::vector<DurationRow> compare_over_durations(const Scenario& scenario,
                                                std::span<const double> durations_s,
                                                std::size_t repetitions) {
  if (repetitions == 0) throw InvalidInput("need at least one repetition");
  std::vector<DurationRow> rows;
  for (double duration : durations_s) {
    const Scenario scaled = with_contact_duration(scenario, duration);
    DurationRow row;
    row.duration_s = duration;
    for (std::size_t r = 0; r < repetitions; ++r) {
      Scenario rep = scaled;
      rep.seed = repetition_seed(scenario.seed, r);
      row.gsa += run_scenario(rep, Policy::gsa).nash_product_realized;
      row.eql += run_scenario(rep, Policy::eql).nash_product_realized;
      row.wtd += run_scenario(rep, Policy::wtd).nash_product_realized;
    }
    const double n = static_cast<double>(repetitions);
    row.gsa /= n;
    row.eql /= n;
    row.wtd /= n;
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_csv(std::span<const SweepPoint> points) {
  std::string out = "t_slot_ms,mean_wpf,stddev\n";
  for (const SweepPoint& p : points) {
    out += fmt::format("{:.6f},{:.6f},{:.6f}\n", p.t_slot_s * 1000.0, p.mean_wpf, p.stddev_wpf);
  }
  return out;
}

std::string durations_csv(std::span<const DurationRow> rows) {
  std::string out = "duration_s,gsa,eql,wtd\n";
  for (const DurationRow& r : rows) {
    out += fmt::format("{:.6f},{:.6f},{:.6f},{:.6f}\n", r.duration_s, r.gsa, r.eql, r.wtd);
  }
  return out;
}

}  // namespace airtime
