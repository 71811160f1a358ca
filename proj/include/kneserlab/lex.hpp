#pragma once

#include <cstdint>
#include <vector>

#include "kneserlab/binom.hpp"
#include "kneserlab/family.hpp"
#include "kneserlab/kset.hpp"
#include "kneserlab/numeric.hpp"

namespace kneserlab {

/// Number of k-sets preceding s in lexicographic order: for each position j
/// (0-based) every admissible value below e_j contributes a block of
/// C(n - value, k - j - 1) completions.
inline BigInt lex_rank(const KSet& s, const Params& p) {
  require_valid_kset(s, p, "lex_rank");
  const auto elems = s.elements();
  BigInt r = 0;
  int prev = 0;
  for (int j = 0; j < p.k; ++j) {
    for (int v = prev + 1; v < elems[j]; ++v) r += binom(p.n - v, p.k - j - 1);
    prev = elems[j];
  }
  return r;
}

inline KSet lex_unrank(const BigInt& rank, const Params& p) {
  p.validate();
  if (rank < 0 || rank >= binom(p.n, p.k)) {
    throw DomainError("lex_unrank: rank " + rank.str() + " outside [0, C(n,k))");
  }
  BigInt r = rank;
  KSet s;
  int v = 1;
  for (int j = 0; j < p.k; ++j) {
    while (true) {
      const BigInt block = binom(p.n - v, p.k - j - 1);
      if (r < block) break;
      r -= block;
      ++v;
    }
    s.set(v);
    ++v;
  }
  return s;
}

/// In-place successor in lexicographic order; false at the last k-set.
/// Bumps the rightmost element that has room, then packs the tail tight.
inline bool lex_next(std::vector<int>& elems, const Params& p) {
  const int k = p.k;
  int i = k - 1;
  while (i >= 0 && elems[i] == p.n - (k - 1 - i)) --i;
  if (i < 0) return false;
  ++elems[i];
  for (int j = i + 1; j < k; ++j) elems[j] = elems[j - 1] + 1;
  return true;
}

/// Visits all C(n,k) k-sets in lexicographic order. Throws ResourceError
/// before doing any work if the count exceeds the budget.
template <typename Fn>
void for_each_kset(const Params& p, Fn&& fn, std::uint64_t budget = kDefaultEnumBudget) {
  p.validate();
  if (binom(p.n, p.k) > budget) {
    throw ResourceError("for_each_kset: C(" + std::to_string(p.n) + "," +
                        std::to_string(p.k) + ") exceeds budget " + std::to_string(budget));
  }
  std::vector<int> elems(p.k);
  for (int i = 0; i < p.k; ++i) elems[i] = i + 1;
  do {
    KSet s;
    for (int e : elems) s.set(e);
    fn(s);
  } while (lex_next(elems, p));
}

inline std::vector<KSet> enumerate_all(const Params& p, std::uint64_t budget = kDefaultEnumBudget) {
  std::vector<KSet> out;
  for_each_kset(p, [&](const KSet& s) { out.push_back(s); }, budget);
  return out;
}

/// First m k-sets in lexicographic order. For m = C(n,k) - C(n-l,k) this is
/// exactly the family of sets meeting [1..l].
inline Family lex_family(const BigInt& m, const Params& p,
                         std::uint64_t budget = kDefaultEnumBudget) {
  p.validate();
  if (m < 0 || m > binom(p.n, p.k)) {
    throw DomainError("lex_family: m=" + m.str() + " outside [0, C(n,k)]");
  }
  if (m > budget) {
    throw ResourceError("lex_family: m=" + m.str() + " exceeds budget " + std::to_string(budget));
  }
  const auto count = m.convert_to<std::uint64_t>();
  std::vector<KSet> sets;
  sets.reserve(count);
  std::vector<int> elems(p.k);
  for (int i = 0; i < p.k; ++i) elems[i] = i + 1;
  for (std::uint64_t taken = 0; taken < count; ++taken) {
    KSet s;
    for (int e : elems) s.set(e);
    sets.push_back(s);
    if (taken + 1 < count) lex_next(elems, p);
  }
  return Family::of(p, std::move(sets));
}

}  // namespace kneserlab
