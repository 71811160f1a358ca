#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "kneserlab/binom.hpp"
#include "kneserlab/family.hpp"
#include "kneserlab/numeric.hpp"

namespace kneserlab {

/// Number of members of f disjoint from a. For a member this is its degree
/// in the induced Kneser subgraph; a does not have to belong to f.
inline std::int64_t degree(const Family& f, const KSet& a) {
  require_valid_kset(a, f.params(), "degree");
  std::int64_t d = 0;
  for (const auto& m : f.members())
    if (!m.intersects(a)) ++d;
  return d;
}

struct DegreeProfile {
  std::vector<std::int64_t> degrees;  // aligned with f.members()
  std::int64_t max = 0;
  KSet witness;  // lexicographically least member attaining max
  std::map<std::int64_t, std::int64_t> histogram;
};

inline DegreeProfile max_degree(const Family& f) {
  if (f.empty()) throw DomainError("max_degree: empty family");
  DegreeProfile out;
  out.degrees.reserve(f.members().size());
  out.max = -1;
  for (const auto& m : f.members()) {
    std::int64_t d = 0;
    for (const auto& other : f.members())
      if (!other.intersects(m)) ++d;
    out.degrees.push_back(d);
    ++out.histogram[d];
    if (d > out.max) {
      out.max = d;
      out.witness = m;
    }
  }
  return out;
}

/// Number of disjoint pairs within f.
inline BigInt edge_count(const Family& f) {
  const auto& ms = f.members();
  std::int64_t e = 0;
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!ms[i].intersects(ms[j])) ++e;
  return e;
}

inline bool is_intersecting(const Family& f) {
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!ms[i].intersects(ms[j])) return false;
  return true;
}

/// Lexicographically least disjoint pair, if any.
inline std::optional<std::pair<KSet, KSet>> find_disjoint_pair(const Family& f) {
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j)
      if (!ms[i].intersects(ms[j])) return std::make_pair(ms[i], ms[j]);
  return std::nullopt;
}

/// Members of f disjoint from p (any nonempty p).
inline Family avoiders(const Family& f, const KSet& p) {
  if (p.empty()) throw DomainError("avoiders: empty restriction set");
  std::vector<KSet> out;
  for (const auto& m : f.members())
    if (!m.intersects(p)) out.push_back(m);
  return Family::of(f.params(), std::move(out));
}

struct Restriction {
  Family through;   // {F \ P : P subset of F in f}, a (k-|P|)-uniform family
  Family avoiding;  // {F in f : F disjoint from P}
};

/// Splits f along a set p of size 1..k-1 into the link f(P) and the
/// complement-side f(P-bar).
inline Restriction restrict(const Family& f, const KSet& p) {
  const int i = p.count();
  if (i < 1 || i >= f.params().k) {
    throw DomainError("restrict: |P| must be in [1, k-1], got " + std::to_string(i));
  }
  for (int e : p.elements()) {
    if (e > f.params().n) throw DomainError("restrict: P exceeds ground set");
  }
  std::vector<KSet> through;
  std::vector<KSet> avoiding;
  for (const auto& m : f.members()) {
    if (p.is_subset_of(m)) {
      through.push_back(m - p);
    } else if (!m.intersects(p)) {
      avoiding.push_back(m);
    }
  }
  Params q{f.params().n, f.params().k - i};
  return {Family::of(q, std::move(through)), Family::of(f.params(), std::move(avoiding))};
}

struct CProfile {
  int i = 0;
  Rational value;   // max over P of |f(P)| / C(n-i, k-i), in [0,1]
  KSet witness;     // lexicographically least attaining P
  BigInt max_count; // |f(P)| at the witness
};

/// Concentration at restriction size i: only sets P occurring inside some
/// member can score above zero, so candidates come from per-member subset
/// expansion rather than a C(n,i) scan.
inline CProfile c_profile(const Family& f, int i) {
  if (i < 1 || i >= f.params().k) {
    throw DomainError("c_profile: i must be in [1, k-1], got " + std::to_string(i));
  }
  if (f.empty()) throw DomainError("c_profile: empty family");
  std::map<KSet, std::int64_t, LexLess> counts;
  for (const auto& m : f.members()) {
    for_each_combination(m.elements(), i, [&](const std::vector<int>& pick) {
      KSet p;
      for (int e : pick) p.set(e);
      ++counts[p];
    });
  }
  CProfile out;
  out.i = i;
  std::int64_t best = 0;
  for (const auto& [p, c] : counts) {
    if (c > best) {
      best = c;
      out.witness = p;
    }
  }
  out.max_count = best;
  out.value = Rational(BigInt(best), binom(f.params().n - i, f.params().k - i));
  return out;
}

struct CoverResult {
  std::int64_t value = 0;
  KSet witness;
  bool empty_family = false;  // value 0 by convention when set
};

namespace detail {

// Hitting-set feasibility: can the members of f not yet hit by `chosen` be
// covered with at most `budget` further elements, all > `min_candidate`?
// Branches on the elements of the first uncovered member.
inline bool cover_exists(const std::vector<KSet>& members, const KSet& chosen, int budget,
                         int min_candidate) {
  const KSet* uncovered = nullptr;
  for (const auto& m : members) {
    if (!m.intersects(chosen)) {
      uncovered = &m;
      break;
    }
  }
  if (!uncovered) return true;
  if (budget == 0) return false;
  for (int e : uncovered->elements()) {
    if (e <= min_candidate) continue;
    KSet next = chosen;
    next.set(e);
    if (cover_exists(members, next, budget - 1, min_candidate)) return true;
  }
  return false;
}

inline void cover_branch(const std::vector<KSet>& members, const KSet& chosen, int depth,
                         std::int64_t& best) {
  const KSet* uncovered = nullptr;
  for (const auto& m : members) {
    if (!m.intersects(chosen)) {
      uncovered = &m;
      break;
    }
  }
  if (!uncovered) {
    if (depth < best) best = depth;
    return;
  }
  if (depth + 1 >= best) return;  // even one more element cannot improve
  for (int e : uncovered->elements()) {
    KSet next = chosen;
    next.set(e);
    cover_branch(members, next, depth + 1, best);
  }
}

}  // namespace detail

/// Covering number: minimum |S| with no member disjoint from S. Value by
/// branch and bound on elements of an uncovered member; witness is the
/// lexicographically smallest optimal S, rebuilt element by element with a
/// feasibility check per candidate.
inline CoverResult covering_number(const Family& f) {
  if (f.empty()) return {0, KSet{}, true};
  const auto& ms = f.members();

  // Greedy incumbent: repeatedly take the element hitting the most uncovered
  // members (ties toward the smaller element).
  KSet greedy;
  std::int64_t greedy_size = 0;
  while (detail::cover_exists(ms, greedy, 0, 0) == false) {
    std::vector<std::int64_t> gain(f.params().n + 1, 0);
    for (const auto& m : ms) {
      if (m.intersects(greedy)) continue;
      for (int e : m.elements()) ++gain[e];
    }
    int best_e = 1;
    for (int e = 1; e <= f.params().n; ++e)
      if (gain[e] > gain[best_e]) best_e = e;
    greedy.set(best_e);
    ++greedy_size;
  }

  std::int64_t best = greedy_size;
  detail::cover_branch(ms, KSet{}, 0, best);

  // Lexicographically smallest optimal witness: the first element is the
  // smallest that still allows a cover of size best, and later elements are
  // strictly increasing, so each slot scans candidates upward.
  KSet witness;
  int last = 0;
  for (std::int64_t slot = 0; slot < best; ++slot) {
    for (int e = last + 1; e <= f.params().n; ++e) {
      KSet trial = witness;
      trial.set(e);
      if (detail::cover_exists(ms, trial, static_cast<int>(best - slot - 1), e)) {
        witness = trial;
        last = e;
        break;
      }
    }
  }
  return {best, witness, false};
}

}  // namespace kneserlab
