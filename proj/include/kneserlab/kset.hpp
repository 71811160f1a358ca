#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kneserlab/errors.hpp"
#include "kneserlab/types.hpp"

namespace kneserlab {

/// A subset of [1..n] as a fixed-width bit vector; element i sits at bit i-1.
/// Value type, totally ordered by the lexicographic order on sorted element
/// tuples (equivalently: the minimum of the symmetric difference decides).
class KSet {
 public:
  static constexpr int kWords = kMaxGroundSet / 64;

  constexpr KSet() : w_{} {}

  static KSet of(const std::vector<int>& elements, const Params& p) {
    p.validate();
    KSet s;
    for (int e : elements) {
      if (e < 1 || e > p.n) {
        throw DomainError("KSet: element " + std::to_string(e) +
                          " outside [1.." + std::to_string(p.n) + "]");
      }
      if (s.test(e)) throw DomainError("KSet: duplicate element " + std::to_string(e));
      s.set(e);
    }
    return s;
  }

  /// The interval [lo..hi] as a set (empty when lo > hi).
  static KSet interval(int lo, int hi) {
    KSet s;
    for (int e = lo; e <= hi; ++e) s.set(e);
    return s;
  }

  bool test(int element) const {
    return (w_[(element - 1) >> 6] >> ((element - 1) & 63)) & 1u;
  }
  void set(int element) { w_[(element - 1) >> 6] |= std::uint64_t{1} << ((element - 1) & 63); }
  void reset(int element) { w_[(element - 1) >> 6] &= ~(std::uint64_t{1} << ((element - 1) & 63)); }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  bool intersects(const KSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  int intersection_count(const KSet& o) const {
    int c = 0;
    for (int i = 0; i < kWords; ++i) c += std::popcount(w_[i] & o.w_[i]);
    return c;
  }
  bool is_subset_of(const KSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  KSet operator&(const KSet& o) const {
    KSet r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  KSet operator|(const KSet& o) const {
    KSet r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] | o.w_[i];
    return r;
  }
  /// Set difference (elements of *this not in o).
  KSet operator-(const KSet& o) const {
    KSet r;
    for (int i = 0; i < kWords; ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }

  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        out.push_back(64 * i + std::countr_zero(w) + 1);
        w &= w - 1;
      }
    }
    return out;
  }

  /// Smallest element, 0 when empty.
  int min_element() const {
    for (int i = 0; i < kWords; ++i)
      if (w_[i]) return 64 * i + std::countr_zero(w_[i]) + 1;
    return 0;
  }

  bool operator==(const KSet&) const = default;

  friend bool lex_less(const KSet& a, const KSet& b) {
    for (int i = 0; i < kWords; ++i) {
      const std::uint64_t diff = a.w_[i] ^ b.w_[i];
      if (diff) return (a.w_[i] >> std::countr_zero(diff)) & 1u;
    }
    return false;
  }

  std::string to_string() const {
    std::string out = "{";
    bool first = true;
    for (int e : elements()) {
      if (!first) out += ",";
      out += std::to_string(e);
      first = false;
    }
    return out + "}";
  }

  std::size_t hash() const {
    std::size_t h = 0;
    for (auto w : w_) h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return h;
  }

 private:
  std::array<std::uint64_t, kWords> w_;
};

struct LexLess {
  bool operator()(const KSet& a, const KSet& b) const { return lex_less(a, b); }
};

inline bool is_valid_kset(const KSet& s, const Params& p) {
  if (s.count() != p.k) return false;
  for (int e : s.elements())
    if (e > p.n) return false;
  return true;
}

inline void require_valid_kset(const KSet& s, const Params& p, const char* what) {
  if (!is_valid_kset(s, p)) {
    throw DomainError(std::string(what) + ": set " + s.to_string() +
                      " is not a " + std::to_string(p.k) + "-subset of [1.." +
                      std::to_string(p.n) + "]");
  }
}

/// Visits all r-subsets of `universe` (a duplicate-free element list) in
/// lexicographic order of the chosen positions.
template <typename Fn>
void for_each_combination(const std::vector<int>& universe, int r, Fn&& fn) {
  const int n = static_cast<int>(universe.size());
  if (r < 0 || r > n) return;
  std::vector<int> idx(r);
  for (int i = 0; i < r; ++i) idx[i] = i;
  std::vector<int> pick(r);
  while (true) {
    for (int i = 0; i < r; ++i) pick[i] = universe[idx[i]];
    fn(pick);
    int i = r - 1;
    while (i >= 0 && idx[i] == n - r + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace kneserlab
