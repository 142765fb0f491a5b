#include "jq/traffic.hpp"

#include <algorithm>
#include <cmath>

#include "jq/rng.hpp"

namespace jq {

const char* to_string(GeneratorKind k) {
  switch (k) {
    case GeneratorKind::Cbr: return "cbr";
    case GeneratorKind::Poisson: return "poisson";
    case GeneratorKind::OnOffGreedy: return "onoff";
    case GeneratorKind::SmallPacketMultiSession: return "smallpacket";
  }
  return "?";
}

std::optional<GeneratorKind> generator_kind_from_string(std::string_view s) {
  if (s == "cbr") return GeneratorKind::Cbr;
  if (s == "poisson") return GeneratorKind::Poisson;
  if (s == "onoff") return GeneratorKind::OnOffGreedy;
  if (s == "smallpacket") return GeneratorKind::SmallPacketMultiSession;
  return std::nullopt;
}

static void validate_spec(const GeneratorSpec& spec, SimTime horizon) {
  auto bad = [&](const std::string& what) {
    throw SimError(Errc::InvalidSpec, std::string(to_string(spec.kind)) + " generator: " + what);
  };
  if (!(horizon > 0.0)) bad("horizon must be > 0");
  if (!(spec.rate_Bps > 0.0) || !std::isfinite(spec.rate_Bps)) bad("rate must be > 0");
  if (spec.packet_bytes < 1) bad("packet_bytes must be >= 1");
  if (spec.flow_ids.empty()) bad("no target flow");
  if (spec.kind != GeneratorKind::SmallPacketMultiSession && spec.flow_ids.size() != 1)
    bad("multiple flows only valid for smallpacket");
  if (spec.start < 0.0 || !std::isfinite(spec.start)) bad("start must be >= 0");
  if (!(spec.stop > spec.start)) bad("stop must be > start");
  if (spec.kind == GeneratorKind::OnOffGreedy &&
      (!(spec.on_seconds > 0.0) || !(spec.off_seconds > 0.0)))
    bad("on_seconds and off_seconds must be > 0");
}

static Packet make_packet(const GeneratorSpec& spec, uint64_t id, int flow_id, SimTime at) {
  Packet p;
  p.id = id;
  p.flow_id = flow_id;
  p.user_id = spec.user_id;
  p.length_bytes = spec.packet_bytes;
  p.tos = spec.tos;
  p.arrival = at;
  return p;
}

std::vector<Packet> generate(const GeneratorSpec& spec, SimTime horizon) {
  validate_spec(spec, horizon);
  const SimTime end = std::min(spec.stop, horizon);
  const double interval = static_cast<double>(spec.packet_bytes) / spec.rate_Bps;
  std::vector<Packet> out;
  uint64_t n = 0;

  switch (spec.kind) {
    case GeneratorKind::Cbr: {
      // t = start + n*interval keeps arrival times exact; no drifting sum.
      for (;; n++) {
        SimTime t = spec.start + static_cast<double>(n) * interval;
        if (t >= end) break;
        out.push_back(make_packet(spec, n, spec.flow_ids[0], t));
      }
      break;
    }
    case GeneratorKind::Poisson: {
      SplitMix64 rng(spec.seed);
      SimTime t = spec.start + rng.next_exponential(interval);
      while (t < end) {
        out.push_back(make_packet(spec, n++, spec.flow_ids[0], t));
        t += rng.next_exponential(interval);
      }
      break;
    }
    case GeneratorKind::OnOffGreedy: {
      // Bursts are CBR at rate_Bps for on_seconds, then silence.
      const double cycle = spec.on_seconds + spec.off_seconds;
      const uint64_t per_burst = std::max<uint64_t>(
          1, static_cast<uint64_t>(std::ceil(spec.on_seconds / interval)));
      for (;; n++) {
        uint64_t burst = n / per_burst;
        uint64_t k = n % per_burst;
        SimTime t = spec.start + static_cast<double>(burst) * cycle +
                    static_cast<double>(k) * interval;
        if (t >= end) break;
        out.push_back(make_packet(spec, n, spec.flow_ids[0], t));
      }
      break;
    }
    case GeneratorKind::SmallPacketMultiSession: {
      // The aggregate rate is spread round-robin over the sessions, all owned
      // by one user.
      const size_t sessions = spec.flow_ids.size();
      for (;; n++) {
        SimTime t = spec.start + static_cast<double>(n) * interval;
        if (t >= end) break;
        out.push_back(make_packet(spec, n, spec.flow_ids[n % sessions], t));
      }
      break;
    }
  }
  return out;
}

std::vector<Packet> merge_arrivals(const std::vector<std::vector<Packet>>& per_generator) {
  struct Tagged {
    Packet pkt;
    size_t gen;
  };
  std::vector<Tagged> all;
  size_t total = 0;
  for (const auto& v : per_generator) total += v.size();
  all.reserve(total);
  for (size_t g = 0; g < per_generator.size(); g++)
    for (const Packet& p : per_generator[g]) all.push_back({p, g});

  std::sort(all.begin(), all.end(), [](const Tagged& a, const Tagged& b) {
    if (a.pkt.arrival != b.pkt.arrival) return a.pkt.arrival < b.pkt.arrival;
    if (a.gen != b.gen) return a.gen < b.gen;
    return a.pkt.id < b.pkt.id;
  });

  std::vector<Packet> out;
  out.reserve(all.size());
  uint64_t id = 0;
  for (auto& t : all) {
    t.pkt.id = id++;
    out.push_back(t.pkt);
  }
  return out;
}

}  // namespace jq
