#pragma once

#include <cstdint>

namespace aistress {

/// Counter-based SplitMix64.
///
/// Output n (n = 0, 1, ...) of stream `key` is mix(key + (n + 1)·0x9E3779B97F4A7C15),
/// where mix is the SplitMix64 finalizer (Steele, Lea & Flood 2014). Any position
/// of any stream can be computed directly, so draws can be farmed out to workers
/// without changing results. Reference outputs for key 42:
///   0xbdd732262feb6e95, 0x28efe333b266f103, 0x47526757130f9f52, 0x581ce1ff0e4ae394
class CounterRng {
 public:
  explicit constexpr CounterRng(std::uint64_t key, std::uint64_t counter = 0)
      : key_(key), counter_(counter) {}

  static constexpr std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  static constexpr std::uint64_t at(std::uint64_t key, std::uint64_t n) {
    return mix(key + (n + 1) * 0x9E3779B97F4A7C15ULL);
  }

  constexpr std::uint64_t next() { return at(key_, counter_++); }

  /// Uniform on [0, 1) with 53 random bits.
  constexpr double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  constexpr std::uint64_t counter() const { return counter_; }

  /// Stream key for draw `index` of a run seeded with `seed`.
  static constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t index) {
    return mix(mix(seed) ^ mix(index + 0xD1B54A32D192ED03ULL));
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace aistress
