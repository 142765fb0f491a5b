#ifndef JQ_ORACLE_HPP
#define JQ_ORACLE_HPP

#include <map>
#include <vector>

#include "jq/model.hpp"

namespace jq {

// Fluid GPS reference: every backlogged flow is served simultaneously at
// rate C * phi_i / sum(phi over backlogged flows). The buffer is infinite
// and there is no packetization; a packet departs when its last byte has
// been served. Integration is event-driven and exact between arrival and
// head-completion events.
struct GpsResult {
  std::vector<SimTime> departures;       // aligned with the input arrival order
  std::map<int, double> served_in_window;  // bytes per flow inside [window_begin, window_end]
  double busy_seconds = 0.0;             // time with any backlog, up to the last departure
};

// Runs fluid GPS over the whole arrival sequence (arrivals must be sorted by
// time and reference known flows). Window accounting covers
// [window_begin, window_end]; pass an empty window for departures only.
GpsResult gps_simulate(const Scenario& scenario, const std::vector<Packet>& arrivals,
                       SimTime window_begin = 0.0, SimTime window_end = 0.0);

// Fluid departure time of each packet, aligned with `arrivals`.
std::vector<SimTime> gps_run(const Scenario& scenario, const std::vector<Packet>& arrivals);

// Bytes served per flow in [window_begin, window_end]: the maxmin-fair
// reference allocation used by the metrics module.
std::map<int, double> gps_fair_shares(const Scenario& scenario,
                                      const std::vector<Packet>& arrivals,
                                      SimTime window_begin, SimTime window_end);

}  // namespace jq

#endif
