#pragma once

#include <algorithm>
#include <vector>

#include "kneserlab/errors.hpp"
#include "kneserlab/numeric.hpp"
#include "kneserlab/types.hpp"

namespace kneserlab {

namespace detail {

// Pascal table for the supported ground-set range, built once.
inline const std::vector<std::vector<BigInt>>& binom_table() {
  static const std::vector<std::vector<BigInt>> table = [] {
    std::vector<std::vector<BigInt>> t(kMaxGroundSet + 1);
    for (int a = 0; a <= kMaxGroundSet; ++a) {
      t[a].resize(a + 1);
      t[a][0] = 1;
      t[a][a] = 1;
      for (int b = 1; b < a; ++b) t[a][b] = t[a - 1][b - 1] + t[a - 1][b];
    }
    return t;
  }();
  return table;
}

}  // namespace detail

/// C(a,b) with the convention C(a,b)=0 for b<0 or b>a, so degenerate terms
/// like C(n-4,k-4) at k<4 vanish instead of erroring.
inline BigInt binom(long long a, long long b) {
  if (a < 0) throw DomainError("binom: negative upper index " + std::to_string(a));
  if (b < 0 || b > a) return 0;
  if (a <= kMaxGroundSet) return detail::binom_table()[static_cast<int>(a)][static_cast<int>(b)];
  // Beyond the table: multiplicative form, exact at every step.
  long long m = std::min(b, a - b);
  BigInt r = 1;
  for (long long i = 1; i <= m; ++i) {
    r *= (a - m + i);
    r /= i;
  }
  return r;
}

}  // namespace kneserlab
