#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kneserlab/binom.hpp"
#include "kneserlab/family.hpp"
#include "kneserlab/lex.hpp"
#include "kneserlab/rng.hpp"
#include "kneserlab/stats.hpp"

namespace kneserlab {

namespace detail {

/// Elements of [1..n] outside `excluded`, ascending.
inline std::vector<int> complement_elements(const KSet& excluded, int n) {
  std::vector<int> out;
  out.reserve(n);
  for (int e = 1; e <= n; ++e)
    if (!excluded.test(e)) out.push_back(e);
  return out;
}

}  // namespace detail

/// Size of the Hilton–Milner family: C(n-1,k-1) - C(n-k-1,k-1) + 1.
inline BigInt hm_size(const Params& p) {
  return binom(p.n - 1, p.k - 1) - binom(p.n - p.k - 1, p.k - 1) + 1;
}

/// Size of the one-edge extremal family: hm_size + 1.
inline BigInt d_family_size(const Params& p) { return hm_size(p) + 1; }

/// All k-sets containing x: the extremal intersecting family.
inline Family make_star(int x, const Params& p) {
  p.validate();
  if (x < 1 || x > p.n) throw DomainError("make_star: x outside [1..n]");
  KSet ex;
  ex.set(x);
  std::vector<KSet> sets;
  for_each_combination(detail::complement_elements(ex, p.n), p.k - 1,
                       [&](const std::vector<int>& pick) {
                         KSet s = ex;
                         for (int e : pick) s.set(e);
                         sets.push_back(s);
                       });
  return Family::of(p, std::move(sets));
}

/// Star at x plus one set t avoiding x; the smallest family forced to have
/// edges, all of them through t.
inline Family make_star_plus(int x, const KSet& t, const Params& p) {
  require_valid_kset(t, p, "make_star_plus");
  if (t.test(x)) throw DomainError("make_star_plus: x must not lie in t");
  Family star = make_star(x, p);
  std::vector<KSet> sets = star.members();
  sets.push_back(t);
  return Family::of(p, std::move(sets));
}

/// {f0} plus all k-sets containing x and meeting f0: the extremal
/// intersecting family with no common element (Hilton–Milner).
inline Family make_hilton_milner(int x, const KSet& f0, const Params& p) {
  p.validate();
  if (x < 1 || x > p.n) throw DomainError("make_hilton_milner: x outside [1..n]");
  require_valid_kset(f0, p, "make_hilton_milner");
  if (f0.test(x)) throw DomainError("make_hilton_milner: x must not lie in f0");
  KSet ex;
  ex.set(x);
  std::vector<KSet> sets{f0};
  for_each_combination(detail::complement_elements(ex, p.n), p.k - 1,
                       [&](const std::vector<int>& pick) {
                         KSet s = ex;
                         for (int e : pick) s.set(e);
                         if (s.intersects(f0)) sets.push_back(s);
                       });
  return Family::of(p, std::move(sets));
}

/// Hilton–Milner family plus one set fprime through x disjoint from f0;
/// has exactly one disjoint pair (f0, fprime).
inline Family make_D(int x, const KSet& f0, const KSet& fprime, const Params& p) {
  require_valid_kset(fprime, p, "make_D");
  if (!fprime.test(x)) throw DomainError("make_D: fprime must contain x");
  if (fprime.intersects(f0)) throw DomainError("make_D: fprime must be disjoint from f0");
  Family hm = make_hilton_milner(x, f0, p);
  std::vector<KSet> sets = hm.members();
  sets.push_back(fprime);
  return Family::of(p, std::move(sets));
}

/// Sets containing 1 and meeting the window [2, k+i+1], plus all k-sets
/// inside the window.
inline Family make_E(int i, const Params& p) {
  p.validate();
  if (i < 1 || p.k + i + 1 > p.n) {
    throw DomainError("make_E: need i >= 1 and k+i+1 <= n");
  }
  const KSet window = KSet::interval(2, p.k + i + 1);
  std::vector<KSet> sets;
  KSet one;
  one.set(1);
  for_each_combination(detail::complement_elements(one, p.n), p.k - 1,
                       [&](const std::vector<int>& pick) {
                         KSet s = one;
                         for (int e : pick) s.set(e);
                         if (s.intersects(window)) sets.push_back(s);
                       });
  for_each_combination(window.elements(), p.k, [&](const std::vector<int>& pick) {
    KSet s;
    for (int e : pick) s.set(e);
    sets.push_back(s);
  });
  return Family::of(p, std::move(sets));
}

/// Sets containing {1,2}, plus sets meeting {1,2} in one element and the
/// window [3, l+2] somewhere.
inline Family make_W(int l, const Params& p) {
  p.validate();
  if (l < 1 || l + 2 > p.n) throw DomainError("make_W: need l >= 1 and l+2 <= n");
  const KSet window = KSet::interval(3, l + 2);
  const KSet pair = KSet::interval(1, 2);
  std::vector<KSet> sets;
  if (p.k >= 2) {
    for_each_combination(detail::complement_elements(pair, p.n), p.k - 2,
                         [&](const std::vector<int>& pick) {
                           KSet s = pair;
                           for (int e : pick) s.set(e);
                           sets.push_back(s);
                         });
  }
  for (int x = 1; x <= 2; ++x) {
    KSet ex;
    ex.set(x);
    for_each_combination(detail::complement_elements(pair, p.n), p.k - 1,
                         [&](const std::vector<int>& pick) {
                           KSet s = ex;
                           for (int e : pick) s.set(e);
                           if (s.intersects(window)) sets.push_back(s);
                         });
  }
  return Family::of(p, std::move(sets));
}

/// Sets meeting the window [3, l+2] in at least lp elements.
inline Family make_W_prime(int l, int lp, const Params& p) {
  p.validate();
  if (l < 1 || l + 2 > p.n) throw DomainError("make_W_prime: need l >= 1 and l+2 <= n");
  if (lp < 1 || lp > std::min(l, p.k)) {
    throw DomainError("make_W_prime: need 1 <= lp <= min(l,k)");
  }
  const KSet window = KSet::interval(3, l + 2);
  std::vector<KSet> sets;
  const std::vector<int> rest = detail::complement_elements(window, p.n);
  for (int j = lp; j <= std::min(l, p.k); ++j) {
    for_each_combination(window.elements(), j, [&](const std::vector<int>& inside) {
      KSet base;
      for (int e : inside) base.set(e);
      for_each_combination(rest, p.k - j, [&](const std::vector<int>& outside) {
        KSet s = base;
        for (int e : outside) s.set(e);
        sets.push_back(s);
      });
    });
  }
  return Family::of(p, std::move(sets));
}

/// Sets containing {1,2}, plus sets meeting {1,2} in exactly one element and
/// the window [3, s+2] in exactly one element. Every member of the second
/// kind has degree (s-1)*C(n-s-k, k-2), which is the maximum degree.
inline Family make_tightness_G(int s, const Params& p) {
  p.validate();
  if (s < 2 || s + 2 > p.n || p.n - s - 2 < p.k - 2) {
    throw DomainError("make_tightness_G: need s >= 2, s+2 <= n, n-s-2 >= k-2");
  }
  const KSet pair = KSet::interval(1, 2);
  const KSet window = KSet::interval(3, s + 2);
  const std::vector<int> tail = detail::complement_elements(pair | window, p.n);
  std::vector<KSet> sets;
  if (p.k >= 2) {
    for_each_combination(detail::complement_elements(pair, p.n), p.k - 2,
                         [&](const std::vector<int>& pick) {
                           KSet a = pair;
                           for (int e : pick) a.set(e);
                           sets.push_back(a);
                         });
    for (int x = 1; x <= 2; ++x) {
      for (int w = 3; w <= s + 2; ++w) {
        KSet base;
        base.set(x);
        base.set(w);
        for_each_combination(tail, p.k - 2, [&](const std::vector<int>& pick) {
          KSet a = base;
          for (int e : pick) a.set(e);
          sets.push_back(a);
        });
      }
    }
  }
  return Family::of(p, std::move(sets));
}

/// Uniform sample of m distinct k-sets, drawn as distinct lexicographic
/// ranks via Floyd's algorithm, so the same seed reproduces the same family
/// on any platform. With require_non_intersecting the whole draw is repeated
/// (same stream) until the family has a disjoint pair.
inline Family make_random(const BigInt& m, const Params& p, std::uint64_t seed,
                          bool require_non_intersecting = false,
                          int max_attempts = 1000) {
  p.validate();
  const BigInt total_big = binom(p.n, p.k);
  if (m < 0 || m > total_big) throw DomainError("make_random: m outside [0, C(n,k)]");
  if (total_big > BigInt(std::uint64_t{1} << 62)) {
    throw ResourceError("make_random: C(n,k) too large for rank sampling");
  }
  const auto total = total_big.convert_to<std::uint64_t>();
  const auto count = m.convert_to<std::uint64_t>();
  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<KSet> sets;
    sets.reserve(count);
    for (std::uint64_t r : sample_distinct(rng, total, count)) {
      sets.push_back(lex_unrank(BigInt(r), p));
    }
    Family f = Family::of(p, std::move(sets));
    if (!require_non_intersecting || !is_intersecting(f)) return f;
  }
  throw ResourceError("make_random: no non-intersecting draw within " +
                      std::to_string(max_attempts) + " attempts");
}

}  // namespace kneserlab
