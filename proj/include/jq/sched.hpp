#ifndef JQ_SCHED_HPP
#define JQ_SCHED_HPP

#include <deque>
#include <map>
#include <optional>

#include "jq/model.hpp"

namespace jq {

enum class Discipline : uint8_t { Fifo = 0, Wfq = 1, Jq = 2 };

const char* to_string(Discipline d);
std::optional<Discipline> discipline_from_string(std::string_view s);

// Charges applied by the JQ stamp during congestion. Outside congestion both
// levels are zero, which makes jq_stamp bit-identical to wfq_stamp.
struct ChargeInputs {
  double flow_level = 0.0;  // fl_le, virtual-time units added to the start stamp
  double user_level = 0.0;  // usr_le, bytes added to the effective length
  bool congested = false;
};

struct StampedPacket {
  Packet pkt;
  VirtualTime start = 0.0;
  VirtualTime finish = 0.0;
  uint64_t enqueue_seq = 0;  // global arrival order; FIFO service key
  bool congested_at_arrival = false;
};

struct FlowState {
  int flow_id = -1;
  double weight = 1.0;
  VirtualTime last_finish = 0.0;
  std::deque<StampedPacket> queue;
  uint64_t backlog_bytes = 0;
};

// Virtual start/finish stamps: start = max(last_finish, V(arrival)),
// finish = start + length / weight. Updates flow.last_finish.
StampedPacket wfq_stamp(FlowState& flow, const Packet& pkt, VirtualTime v_arrival);

// Congestion-charged variant: start gains flow_level, the effective length
// gains user_level bytes. With zero charges this reduces exactly to wfq_stamp.
StampedPacket jq_stamp(FlowState& flow, const Packet& pkt, VirtualTime v_arrival,
                       const ChargeInputs& charges);

// Per-run queue state shared by the three disciplines. Holds only waiting
// packets; the packet in transmission is the engine's.
class Scheduler {
public:
  Scheduler(const Scenario& scenario, Discipline discipline);

  Discipline discipline() const { return _discipline; }

  // Stamps per the discipline and appends to the flow queue. Returns false
  // when the buffer is full and the arriving packet is dropped (drop-tail);
  // a dropped packet leaves flow state untouched.
  bool enqueue(const Packet& pkt, VirtualTime v_arrival, const ChargeInputs& charges,
               bool congested_at_arrival);

  // WFQ/JQ: backlogged flow whose head packet has the minimum finish stamp,
  // ties to the smaller flow id. FIFO: flow holding the globally oldest head.
  // nullopt iff nothing is queued.
  std::optional<int> select_next() const;

  StampedPacket pop_head(int flow_id);

  uint64_t queued_packets() const { return _queued_packets; }
  uint64_t queued_bytes() const { return _queued_bytes; }
  const FlowState& flow_state(int flow_id) const;

private:
  Discipline _discipline;
  uint64_t _buffer_limit;
  std::map<int, FlowState> _flows;  // keyed by flow id; iteration order is the tie order
  uint64_t _queued_packets = 0;
  uint64_t _queued_bytes = 0;
  uint64_t _next_seq = 0;
};

}  // namespace jq

#endif
