#ifndef JQ_TRAFFIC_HPP
#define JQ_TRAFFIC_HPP

#include <vector>

#include "jq/model.hpp"

namespace jq {

enum class GeneratorKind : uint8_t {
  Cbr = 0,
  Poisson = 1,
  OnOffGreedy = 2,
  SmallPacketMultiSession = 3,
};

const char* to_string(GeneratorKind k);
std::optional<GeneratorKind> generator_kind_from_string(std::string_view s);

struct GeneratorSpec {
  GeneratorKind kind = GeneratorKind::Cbr;
  std::vector<int> flow_ids;  // one entry; SmallPacketMultiSession lists one per session
  int user_id = -1;
  TosClass tos = TosClass::Bulk;
  double rate_Bps = 0.0;      // aggregate offered rate (OnOffGreedy: rate while on)
  uint32_t packet_bytes = 0;
  SimTime start = 0.0;
  SimTime stop = std::numeric_limits<double>::infinity();  // clipped to horizon
  uint64_t seed = 0;
  double on_seconds = 0.0;    // OnOffGreedy burst length
  double off_seconds = 0.0;   // OnOffGreedy silence length
};

// Emits the generator's packets with arrival < min(stop, horizon), sorted by
// arrival, ids numbered 0..n-1 in emission order. Same spec and seed give a
// byte-identical list. Throws InvalidSpec for non-positive parameters.
std::vector<Packet> generate(const GeneratorSpec& spec, SimTime horizon);

// Merges per-generator lists into one arrival sequence ordered by
// (arrival, generator index, per-generator id) and renumbers packet ids
// 0..N-1 in merged order.
std::vector<Packet> merge_arrivals(const std::vector<std::vector<Packet>>& per_generator);

}  // namespace jq

#endif
