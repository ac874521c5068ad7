#pragma once

#include <cstdint>

namespace cubocubic {

/// SplitMix64: state advances by 0x9E3779B97F4A7C15 and each output is the
/// state passed through
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   z =  z ^ (z >> 31).
/// The constants are fixed so that generated tensors reproduce bit for bit
/// on any implementation.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // lo + next() mod (hi - lo + 1); the modulo bias is below 2^-58 for the
  // small ranges used here.
  long long uniform(long long lo, long long hi) noexcept {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }

 private:
  std::uint64_t state_;
};

}  // namespace cubocubic
