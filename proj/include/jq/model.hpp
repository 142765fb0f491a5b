#ifndef JQ_MODEL_HPP
#define JQ_MODEL_HPP

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace jq {

// Real time in seconds and virtual time in dimensionless units. Both are
// plain doubles; all comparisons in scheduler logic are exact, tolerances
// belong in tests only.
using SimTime = double;
using VirtualTime = double;

enum class TosClass : uint8_t { Voice = 0, Video = 1, Interactive = 2, Bulk = 3 };

inline constexpr TosClass kAllTosClasses[] = {TosClass::Voice, TosClass::Video,
                                              TosClass::Interactive, TosClass::Bulk};

const char* to_string(TosClass c);
std::optional<TosClass> tos_class_from_string(std::string_view s);

enum class Errc {
  DuplicateFlowId,
  NonPositiveWeight,
  NonPositiveCapacity,
  TimeRegression,
  FlowMismatch,
  UnknownFlow,
  InvalidSpec,
  AllZero,
  ZeroOracleShare,
  EmptyClass,
  ParseError,
  UnknownKey,
  MissingRequired,
  IoError,
};

const char* to_string(Errc e);

class SimError : public std::runtime_error {
public:
  SimError(Errc code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), _code(code) {}
  Errc code() const noexcept { return _code; }

private:
  Errc _code;
};

struct Packet {
  uint64_t id = 0;            // unique within a run
  int flow_id = -1;
  int user_id = -1;
  uint32_t length_bytes = 0;  // >= 1
  TosClass tos = TosClass::Bulk;
  SimTime arrival = 0.0;
};

struct FlowDescriptor {
  int flow_id = -1;
  double weight = 1.0;        // phi, > 0
  TosClass tos = TosClass::Bulk;
  int user_id = -1;
};

// Sentinel for an unbounded packet buffer.
inline constexpr uint64_t kUnbounded = std::numeric_limits<uint64_t>::max();

struct LinkConfig {
  double capacity_Bps = 0.0;  // bytes per second, > 0
  uint64_t buffer_limit_packets = kUnbounded;
};

// A validated scenario. Immutable after validate_scenario(); safe to share
// read-only across engine instances.
struct Scenario {
  std::vector<FlowDescriptor> flows;
  LinkConfig link;

  const FlowDescriptor* find_flow(int flow_id) const;
  const FlowDescriptor& flow(int flow_id) const;  // throws UnknownFlow
};

// Checks all type invariants and flow-id uniqueness. Errors name the
// offending field.
Scenario validate_scenario(std::vector<FlowDescriptor> flows, LinkConfig link);

}  // namespace jq

#endif
