#ifndef JQ_RNG_HPP
#define JQ_RNG_HPP

#include <cmath>
#include <cstdint>

namespace jq {

// SplitMix64 (Steele, Lea, Flood 2014). Chosen over std distributions so
// that generated traffic is bit-identical across platforms and standard
// libraries. The algorithm name is echoed in run metadata.
inline constexpr const char* kRngName = "splitmix64";

class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : _state(seed) {}

  uint64_t next_u64() {
    uint64_t z = (_state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in (0, 1]; never returns 0, so log() below is safe.
  double next_unit() { return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53; }

  double next_exponential(double mean) { return -mean * std::log(next_unit()); }

  // Uniform in [lo, hi).
  double next_range(double lo, double hi) { return lo + (hi - lo) * (next_unit() - 0x1.0p-53); }

  // Uniform integer in [lo, hi].
  uint64_t next_int(uint64_t lo, uint64_t hi) { return lo + next_u64() % (hi - lo + 1); }

private:
  uint64_t _state;
};

// Deterministic seed derivation for sub-streams (per-generator seeds from the
// run seed plus the generator index).
inline uint64_t derive_seed(uint64_t master, uint64_t index) {
  SplitMix64 mix(master ^ (0xa5a5a5a5a5a5a5a5ULL + index));
  return mix.next_u64();
}

}  // namespace jq

#endif
