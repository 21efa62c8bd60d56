#pragma once

#include <cstdint>

namespace qadd {

/// SplitMix64 finalizer. Used both as the stream mixer and the generator
/// step so that random draws are identical on every platform and toolchain
/// (std:: distributions are implementation-defined and would not be).
inline std::uint64_t splitmix_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Tiny counter-based generator. Independent streams are cheap: seed each
/// one with splitmix_mix(base + index * golden_gamma) and the streams never
/// need to share state, which keeps parallel sampling deterministic.
class SplitMix64 {
 public:
  static constexpr std::uint64_t golden_gamma = 0x9E3779B97F4A7C15ULL;

  explicit SplitMix64(std::uint64_t state) : state_(state) {}

  std::uint64_t next() {
    state_ += golden_gamma;
    return splitmix_mix(state_);
  }

  /// Draw from [lo, hi] by modulo reduction. The bias is ~2^-60 for the
  /// small spans used here and the result is reproducible everywhere,
  /// which is the property that matters.
  long range(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

 private:
  std::uint64_t state_;
};

}  // namespace qadd
