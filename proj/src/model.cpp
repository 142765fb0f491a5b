#include "jq/model.hpp"

#include <cmath>
#include <unordered_set>

namespace jq {

const char* to_string(TosClass c) {
  switch (c) {
    case TosClass::Voice: return "voice";
    case TosClass::Video: return "video";
    case TosClass::Interactive: return "interactive";
    case TosClass::Bulk: return "bulk";
  }
  return "?";
}

std::optional<TosClass> tos_class_from_string(std::string_view s) {
  for (TosClass c : kAllTosClasses)
    if (s == to_string(c)) return c;
  return std::nullopt;
}

const char* to_string(Errc e) {
  switch (e) {
    case Errc::DuplicateFlowId: return "DuplicateFlowId";
    case Errc::NonPositiveWeight: return "NonPositiveWeight";
    case Errc::NonPositiveCapacity: return "NonPositiveCapacity";
    case Errc::TimeRegression: return "TimeRegression";
    case Errc::FlowMismatch: return "FlowMismatch";
    case Errc::UnknownFlow: return "UnknownFlow";
    case Errc::InvalidSpec: return "InvalidSpec";
    case Errc::AllZero: return "AllZero";
    case Errc::ZeroOracleShare: return "ZeroOracleShare";
    case Errc::EmptyClass: return "EmptyClass";
    case Errc::ParseError: return "ParseError";
    case Errc::UnknownKey: return "UnknownKey";
    case Errc::MissingRequired: return "MissingRequired";
    case Errc::IoError: return "IoError";
  }
  return "?";
}

const FlowDescriptor* Scenario::find_flow(int flow_id) const {
  for (const auto& f : flows)
    if (f.flow_id == flow_id) return &f;
  return nullptr;
}

const FlowDescriptor& Scenario::flow(int flow_id) const {
  const FlowDescriptor* f = find_flow(flow_id);
  if (!f) throw SimError(Errc::UnknownFlow, "flow " + std::to_string(flow_id));
  return *f;
}

Scenario validate_scenario(std::vector<FlowDescriptor> flows, LinkConfig link) {
  if (!(link.capacity_Bps > 0.0) || !std::isfinite(link.capacity_Bps))
    throw SimError(Errc::NonPositiveCapacity,
                   "link.capacity_bytes_per_sec = " + std::to_string(link.capacity_Bps));
  if (link.buffer_limit_packets == 0)
    throw SimError(Errc::InvalidSpec, "link.buffer_limit_packets must be >= 1 or unbounded");
  std::unordered_set<int> seen;
  for (const auto& f : flows) {
    if (!(f.weight > 0.0) || !std::isfinite(f.weight))
      throw SimError(Errc::NonPositiveWeight, "flow " + std::to_string(f.flow_id) +
                                                  ": weight = " + std::to_string(f.weight));
    if (!seen.insert(f.flow_id).second)
      throw SimError(Errc::DuplicateFlowId, "flow id " + std::to_string(f.flow_id));
  }
  Scenario sc;
  sc.flows = std::move(flows);
  sc.link = link;
  return sc;
}

}  // namespace jq
