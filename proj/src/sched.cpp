#include "jq/sched.hpp"

namespace jq {

const char* to_string(Discipline d) {
  switch (d) {
    case Discipline::Fifo: return "fifo";
    case Discipline::Wfq: return "wfq";
    case Discipline::Jq: return "jq";
  }
  return "?";
}

std::optional<Discipline> discipline_from_string(std::string_view s) {
  if (s == "fifo") return Discipline::Fifo;
  if (s == "wfq") return Discipline::Wfq;
  if (s == "jq") return Discipline::Jq;
  return std::nullopt;
}

static void check_flow(const FlowState& flow, const Packet& pkt) {
  if (pkt.flow_id != flow.flow_id)
    throw SimError(Errc::FlowMismatch, "packet flow " + std::to_string(pkt.flow_id) +
                                           " stamped against flow " +
                                           std::to_string(flow.flow_id));
}

StampedPacket jq_stamp(FlowState& flow, const Packet& pkt, VirtualTime v_arrival,
                       const ChargeInputs& charges) {
  check_flow(flow, pkt);
  StampedPacket sp;
  sp.pkt = pkt;
  sp.start = std::max(flow.last_finish, v_arrival) + charges.flow_level;
  sp.finish = sp.start + (static_cast<double>(pkt.length_bytes) + charges.user_level) / flow.weight;
  flow.last_finish = sp.finish;
  return sp;
}

StampedPacket wfq_stamp(FlowState& flow, const Packet& pkt, VirtualTime v_arrival) {
  return jq_stamp(flow, pkt, v_arrival, ChargeInputs{});
}

Scheduler::Scheduler(const Scenario& scenario, Discipline discipline)
    : _discipline(discipline), _buffer_limit(scenario.link.buffer_limit_packets) {
  for (const auto& f : scenario.flows) {
    FlowState st;
    st.flow_id = f.flow_id;
    st.weight = f.weight;
    _flows.emplace(f.flow_id, std::move(st));
  }
}

bool Scheduler::enqueue(const Packet& pkt, VirtualTime v_arrival, const ChargeInputs& charges,
                        bool congested_at_arrival) {
  auto it = _flows.find(pkt.flow_id);
  if (it == _flows.end())
    throw SimError(Errc::UnknownFlow, "flow " + std::to_string(pkt.flow_id));
  if (_queued_packets >= _buffer_limit) return false;

  FlowState& flow = it->second;
  StampedPacket sp;
  switch (_discipline) {
    case Discipline::Fifo:
      // FIFO ignores virtual time; stamps stay zero.
      sp.pkt = pkt;
      break;
    case Discipline::Wfq:
      sp = wfq_stamp(flow, pkt, v_arrival);
      break;
    case Discipline::Jq:
      sp = jq_stamp(flow, pkt, v_arrival, charges);
      break;
  }
  sp.enqueue_seq = _next_seq++;
  sp.congested_at_arrival = congested_at_arrival;
  flow.queue.push_back(sp);
  flow.backlog_bytes += pkt.length_bytes;
  _queued_packets++;
  _queued_bytes += pkt.length_bytes;
  return true;
}

std::optional<int> Scheduler::select_next() const {
  const FlowState* best = nullptr;
  for (const auto& [id, flow] : _flows) {
    if (flow.queue.empty()) continue;
    if (!best) {
      best = &flow;
      continue;
    }
    if (_discipline == Discipline::Fifo) {
      if (flow.queue.front().enqueue_seq < best->queue.front().enqueue_seq) best = &flow;
    } else {
      // Strict < keeps the smallest flow id on ties (map order).
      if (flow.queue.front().finish < best->queue.front().finish) best = &flow;
    }
  }
  if (!best) return std::nullopt;
  return best->flow_id;
}

StampedPacket Scheduler::pop_head(int flow_id) {
  auto it = _flows.find(flow_id);
  if (it == _flows.end() || it->second.queue.empty())
    throw SimError(Errc::UnknownFlow, "pop from flow " + std::to_string(flow_id));
  FlowState& flow = it->second;
  StampedPacket sp = flow.queue.front();
  flow.queue.pop_front();
  flow.backlog_bytes -= sp.pkt.length_bytes;
  _queued_packets--;
  _queued_bytes -= sp.pkt.length_bytes;
  return sp;
}

const FlowState& Scheduler::flow_state(int flow_id) const {
  auto it = _flows.find(flow_id);
  if (it == _flows.end())
    throw SimError(Errc::UnknownFlow, "flow " + std::to_string(flow_id));
  return it->second;
}

}  // namespace jq
