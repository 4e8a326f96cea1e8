// rng.hpp - deterministic 64-bit mixing, reproducible across platforms.
#pragma once

#include <cstdint>

namespace primefractal {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Stateless position hash: element `index` of stream `seed`.
inline std::uint64_t mix64(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t state = seed ^ (index * 0xd1342543de82ef95ULL);
  return splitmix64_next(state);
}

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64_next(state_); }

  // Uniform in [0, n); n must be positive. Modulo bias is negligible for
  // the small n used here and keeps the sequence platform-independent.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

}  // namespace primefractal
