#pragma once

#include <cstdint>

namespace cliquelab {

// splitmix64 (Steele, Lea, Flood). Chosen because the whole state is the
// seed: identical seeds give identical streams on every platform, which the
// determinism contract depends on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53 bits of mantissa.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform in [0, bound). Rejection-free modulo is fine here: bound is
  // tiny relative to 2^64, the bias is far below anything observable.
  std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

  static constexpr const char* kName = "splitmix64";

 private:
  std::uint64_t state_;
};

}  // namespace cliquelab
