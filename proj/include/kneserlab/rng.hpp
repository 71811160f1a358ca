#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "kneserlab/errors.hpp"

namespace kneserlab {

/// splitmix64 (Steele–Lea–Flood). Chosen over std::mt19937 plus
/// distributions because its output is identical on every platform, which
/// the reproducibility contract of the random constructors requires.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, bound) by rejection below the largest multiple of bound.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) throw DomainError("SplitMix64::below: zero bound");
    const std::uint64_t limit = bound * ((~std::uint64_t{0}) / bound);
    std::uint64_t v;
    do {
      v = next();
    } while (v >= limit);
    return v % bound;
  }

 private:
  std::uint64_t state_;
};

/// Floyd's algorithm: m distinct values sampled uniformly from [0, total),
/// using exactly m bounded draws. Output is sorted.
inline std::vector<std::uint64_t> sample_distinct(SplitMix64& rng, std::uint64_t total,
                                                  std::uint64_t m) {
  if (m > total) throw DomainError("sample_distinct: m > total");
  std::set<std::uint64_t> chosen;
  for (std::uint64_t j = total - m; j < total; ++j) {
    const std::uint64_t t = rng.below(j + 1);
    if (!chosen.insert(t).second) chosen.insert(j);
  }
  return {chosen.begin(), chosen.end()};
}

}  // namespace kneserlab
