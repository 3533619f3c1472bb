#pragma once

#include <cstdint>

namespace pick3d {

/// SplitMix64 (Steele/Lea/Flood constants). Chosen because surveys and the
/// polygon generator must be bit-reproducible across platforms; the whole
/// generator is three shifts and two multiplies with published constants.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();

  /// Uniform in [0, bound), bound > 0; unbiased via threshold rejection.
  std::uint64_t below(std::uint64_t bound);

  /// Uniform in [lo, hi], inclusive; lo <= hi.
  std::int64_t range(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

}  // namespace pick3d
