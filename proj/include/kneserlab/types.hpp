#pragma once

#include <cstdint>
#include <string>

#include "kneserlab/errors.hpp"

namespace kneserlab {

// Ground sets are [1..n] with n capped by the fixed bit-vector width.
inline constexpr int kMaxGroundSet = 128;

// Default cap on the number of k-sets an operation may materialize.
inline constexpr std::uint64_t kDefaultEnumBudget = 4'000'000;

/// Ground-set size n and member size k of a k-uniform family over [n].
struct Params {
  int n = 0;
  int k = 0;

  void validate() const {
    if (k < 1 || n < k) {
      throw DomainError("Params: need 1 <= k <= n, got n=" + std::to_string(n) +
                        " k=" + std::to_string(k));
    }
    if (n > kMaxGroundSet) {
      throw ResourceError("Params: n=" + std::to_string(n) +
                          " exceeds supported ground-set size " +
                          std::to_string(kMaxGroundSet));
    }
  }

  bool operator==(const Params&) const = default;
};

}  // namespace kneserlab
