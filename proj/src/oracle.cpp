#include "jq/oracle.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace jq {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct FluidFlow {
  double weight = 1.0;
  std::deque<std::pair<size_t, double>> queue;  // (arrival index, remaining bytes)
};

}  // namespace

GpsResult gps_simulate(const Scenario& scenario, const std::vector<Packet>& arrivals,
                       SimTime window_begin, SimTime window_end) {
  const double capacity = scenario.link.capacity_Bps;
  std::map<int, FluidFlow> flows;
  for (const auto& f : scenario.flows) flows[f.flow_id].weight = f.weight;

  GpsResult result;
  result.departures.assign(arrivals.size(), 0.0);

  double weight_sum = 0.0;
  SimTime now = arrivals.empty() ? 0.0 : arrivals.front().arrival;
  size_t next_arrival = 0;

  auto window_overlap = [&](SimTime a, SimTime b) {
    double lo = std::max(a, window_begin);
    double hi = std::min(b, window_end);
    return std::max(0.0, hi - lo);
  };

  while (true) {
    // Earliest head completion under the current rates.
    SimTime t_complete = kInf;
    if (weight_sum > 0.0) {
      for (const auto& [id, fl] : flows) {
        if (fl.queue.empty()) continue;
        double rate = capacity * fl.weight / weight_sum;
        t_complete = std::min(t_complete, now + fl.queue.front().second / rate);
      }
    }
    SimTime t_arrival = next_arrival < arrivals.size() ? arrivals[next_arrival].arrival : kInf;
    if (t_complete == kInf && t_arrival == kInf) break;

    SimTime t_next = std::min(t_complete, t_arrival);
    double dt = t_next - now;

    if (weight_sum > 0.0 && dt > 0.0) {
      result.busy_seconds += dt;
      double overlap = window_overlap(now, t_next);
      for (auto& [id, fl] : flows) {
        if (fl.queue.empty()) continue;
        double rate = capacity * fl.weight / weight_sum;
        fl.queue.front().second -= rate * dt;
        if (overlap > 0.0) result.served_in_window[id] += rate * overlap;
      }
    }
    now = t_next;

    if (t_complete <= t_arrival && t_complete < kInf) {
      // Pop every head that finished at exactly this instant; symmetric flows
      // produce identical doubles, so equality catches genuine ties.
      for (auto& [id, fl] : flows) {
        while (!fl.queue.empty() && fl.queue.front().second <= 1e-9) {
          result.departures[fl.queue.front().first] = now;
          fl.queue.pop_front();
        }
        if (fl.queue.empty() && fl.weight > 0.0) continue;
      }
      weight_sum = 0.0;
      for (const auto& [id, fl] : flows)
        if (!fl.queue.empty()) weight_sum += fl.weight;
    }

    while (next_arrival < arrivals.size() && arrivals[next_arrival].arrival == now) {
      const Packet& p = arrivals[next_arrival];
      auto it = flows.find(p.flow_id);
      if (it == flows.end())
        throw SimError(Errc::UnknownFlow, "flow " + std::to_string(p.flow_id));
      if (it->second.queue.empty()) weight_sum += it->second.weight;
      it->second.queue.emplace_back(next_arrival, static_cast<double>(p.length_bytes));
      next_arrival++;
    }
  }
  return result;
}

std::vector<SimTime> gps_run(const Scenario& scenario, const std::vector<Packet>& arrivals) {
  return gps_simulate(scenario, arrivals).departures;
}

std::map<int, double> gps_fair_shares(const Scenario& scenario,
                                      const std::vector<Packet>& arrivals,
                                      SimTime window_begin, SimTime window_end) {
  auto result = gps_simulate(scenario, arrivals, window_begin, window_end);
  // Flows the window never served still get an entry so callers can see the
  // zero explicitly.
  for (const auto& f : scenario.flows) result.served_in_window.try_emplace(f.flow_id, 0.0);
  return result.served_in_window;
}

}  // namespace jq
