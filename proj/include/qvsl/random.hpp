#ifndef QVSL_RANDOM_HPP
#define QVSL_RANDOM_HPP

#include <cstdint>
#include <random>

namespace qvsl {

namespace detail {

// splitmix64; used to spread seeds before feeding the engine.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

// Deterministic random stream. mt19937_64 output is specified bit for bit
// by the standard, and uniform01 avoids std::uniform_real_distribution
// (whose mapping is implementation-defined), so draws are reproducible
// across platforms and toolchains.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

  // Stream for one trial of a batch. Derivation depends only on
  // (seed, index), so results do not depend on trial scheduling order.
  static RandomStream derived(std::uint64_t seed, std::uint64_t index) {
    return RandomStream(detail::mix64(seed ^ detail::mix64(index)));
  }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform draw in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace qvsl

#endif
