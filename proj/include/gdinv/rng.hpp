#pragma once

#include <cstdint>

namespace gdinv {

/// SplitMix64 (Steele, Lea, Flood; public-domain reference constants).
///
/// This is the single PRNG of the project. All randomized operations take an
/// explicit 64-bit seed and evolve this generator with pure uint64 arithmetic,
/// so identical seeds give bitwise-identical streams on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform-ish integer in [lo, hi] via modulo reduction. The tiny modulo
  /// bias is irrelevant here; what matters is that the mapping is fixed.
  long next_int(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long>(next() % span);
  }

  bool next_bool() { return (next() & 1u) != 0; }

  /// Independent stream for trial `index` of a run seeded with `seed`.
  /// Both inputs pass through the mixer once so that nearby (seed, index)
  /// pairs land far apart in state space.
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index) {
    SplitMix64 a(seed);
    SplitMix64 b(~index);
    const std::uint64_t s = a.next() ^ (b.next() + 0x9E3779B97F4A7C15ull);
    return SplitMix64(s);
  }

  /// The raw state a stream starts from; reported as firstFailureSeed so a
  /// failing trial can be replayed in isolation.
  std::uint64_t state() const { return state_; }

 private:
  std::uint64_t state_;
};

}  // namespace gdinv
