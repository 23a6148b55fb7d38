#pragma once

#include <cstdint>
#include <limits>

namespace airtime {

/// SplitMix64 output function.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Stream key for one (seed, subject, round, purpose) tuple. Streams for
/// different tuples are independent, so adding a node or a round does not
/// shift anybody else's draws.
constexpr std::uint64_t stream_key(std::uint64_t seed, std::uint64_t subject, std::uint64_t round,
                                   std::uint64_t purpose) {
  std::uint64_t h = mix64(seed);
  h = mix64(h ^ subject);
  h = mix64(h ^ (round * 0xd1b54a32d192ed03ULL));
  return mix64(h ^ (purpose * 0x8cb92ba72f3d8dd7ULL));
}

/// Counter-based generator: the n-th output is a pure function of (key, n).
/// Satisfies UniformRandomBitGenerator, so it plugs into <random>
/// distributions.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix64(key_ ^ mix64(++counter_)); }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

enum class Purpose : std::uint64_t { pcd_error = 1, loss = 2, reception = 3, repetition = 4 };

inline CounterRng make_stream(std::uint64_t seed, std::uint64_t subject, std::uint64_t round,
                              Purpose purpose) {
  return CounterRng(stream_key(seed, subject, round, static_cast<std::uint64_t>(purpose)));
}

}  // namespace airtime
