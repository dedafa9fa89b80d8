#pragma once

#include <cstdint>

namespace triorient {

// SplitMix64. Fully specified, so trajectories are reproducible across
// platforms. Streams are split by hashing (seed, stream id).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Independent stream derived from this seed and a stream id.
  Rng split(std::uint64_t stream) const {
    Rng mixer(state_ ^ (0xd1b54a32d192ed03ULL * (stream + 1)));
    mixer.next();
    return Rng(mixer.next());
  }

  /// Uniform integer in [0, bound). Debiased by rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    for (;;) {
      std::uint64_t x = next();
      if (x < limit) return x % bound;
    }
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return double(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

}  // namespace triorient
