#pragma once

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "kneserlab/binom.hpp"
#include "kneserlab/families.hpp"
#include "kneserlab/family.hpp"
#include "kneserlab/lex.hpp"
#include "kneserlab/stats.hpp"

namespace kneserlab {

struct SearchBudget {
  std::uint64_t max_nodes = 100'000'000;
  std::uint64_t max_millis = 0;  // 0 disables the wall clock limit

  /// Default budget, with KNESERLAB_BUDGET_NODES overriding the node limit.
  static SearchBudget from_env() {
    SearchBudget b;
    if (const char* v = std::getenv("KNESERLAB_BUDGET_NODES")) {
      char* end = nullptr;
      const unsigned long long parsed = std::strtoull(v, &end, 10);
      if (end && *end == '\0' && parsed > 0) b.max_nodes = parsed;
    }
    return b;
  }
};

struct SearchResult {
  std::int64_t optimum = 0;
  Family witness;
  std::uint64_t nodes = 0;
  bool proven_optimal = false;
  SearchBudget budget;
  std::uint64_t elapsed_ms = 0;
};

enum class Objective { MaxDegree, MinEdges };

namespace detail {

struct SearchContext {
  std::vector<KSet> vertices;
  std::int64_t m = 0;
  Objective objective{};
  bool need_disjoint_pair = false;   // leaf eligibility for the degree objective
  bool intersecting_impossible = false;  // m > C(n-1,k-1): every leaf eligible
  bool symmetry = false;             // root choices restricted to sets containing 1
  SearchBudget budget;
  std::chrono::steady_clock::time_point start;
  std::uint64_t nodes = 0;
  bool budget_hit = false;
  std::int64_t incumbent = 0;
  std::vector<KSet> chosen;
  std::vector<std::int64_t> degrees;  // degree of chosen[i] within chosen
  std::int64_t cur_edges = 0;
  std::int64_t cur_max_degree = 0;
  std::optional<std::vector<KSet>> best;

  bool out_of_budget() {
    if (nodes >= budget.max_nodes) return true;
    if (budget.max_millis != 0 && (nodes & 1023) == 0) {
      const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                               std::chrono::steady_clock::now() - start)
                               .count();
      if (static_cast<std::uint64_t>(elapsed) >= budget.max_millis) return true;
    }
    return false;
  }

  std::int64_t objective_value() const {
    return objective == Objective::MaxDegree ? cur_max_degree : cur_edges;
  }
};

// Include/exclude DFS over vertices in lexicographic order. Pruning rules:
// (a) the partial objective is monotone under vertex additions, so any
//     partial value >= incumbent dies;
// (b) remaining vertices cannot fill the family to size m;
// (c) the global floor (1 for the degree objective over non-intersecting
//     families, 0 for edges) stops the search once the incumbent matches it.
inline void search_dfs(SearchContext& ctx, std::size_t idx) {
  if (ctx.budget_hit) return;
  ++ctx.nodes;
  if (ctx.out_of_budget()) {
    ctx.budget_hit = true;
    return;
  }
  const std::int64_t floor_value = ctx.objective == Objective::MaxDegree ? 1 : 0;
  if (ctx.incumbent <= floor_value) return;
  if (ctx.objective_value() >= ctx.incumbent) return;
  const auto chosen_count = static_cast<std::int64_t>(ctx.chosen.size());
  if (chosen_count == ctx.m) {
    if (ctx.objective == Objective::MaxDegree && !ctx.intersecting_impossible &&
        ctx.cur_max_degree == 0) {
      return;  // intersecting leaf, not eligible
    }
    ctx.incumbent = ctx.objective_value();
    ctx.best = ctx.chosen;
    return;
  }
  if (idx >= ctx.vertices.size()) return;
  const auto remaining = static_cast<std::int64_t>(ctx.vertices.size() - idx);
  if (chosen_count + remaining < ctx.m) return;

  // Include vertices[idx].
  if (!(ctx.symmetry && ctx.chosen.empty() && !ctx.vertices[idx].test(1))) {
    const KSet& v = ctx.vertices[idx];
    std::int64_t v_degree = 0;
    std::vector<std::size_t> bumped;
    for (std::size_t i = 0; i < ctx.chosen.size(); ++i) {
      if (!ctx.chosen[i].intersects(v)) {
        ++v_degree;
        ++ctx.degrees[i];
        bumped.push_back(i);
      }
    }
    const std::int64_t old_max = ctx.cur_max_degree;
    ctx.cur_edges += v_degree;
    ctx.chosen.push_back(v);
    ctx.degrees.push_back(v_degree);
    ctx.cur_max_degree = std::max(old_max, v_degree);
    for (std::size_t i : bumped) ctx.cur_max_degree = std::max(ctx.cur_max_degree, ctx.degrees[i]);

    search_dfs(ctx, idx + 1);

    ctx.chosen.pop_back();
    ctx.degrees.pop_back();
    for (std::size_t i : bumped) --ctx.degrees[i];
    ctx.cur_edges -= v_degree;
    ctx.cur_max_degree = old_max;
  }

  // Exclude vertices[idx].
  search_dfs(ctx, idx + 1);
}

/// Greedy upper-bound families used to seed the incumbent. Each candidate is
/// a genuine family of size m, so the returned value is attained.
inline std::vector<Family> seed_candidates(std::int64_t m, const Params& p,
                                           Objective objective) {
  std::vector<Family> out;
  out.push_back(lex_family(BigInt(m), p));
  if (objective == Objective::MaxDegree && p.n >= 2 * p.k) {
    // One disjoint pair plus fill sets through 1 meeting f0: a single edge,
    // available whenever m <= |D|.
    const KSet f0 = KSet::interval(2, p.k + 1);
    KSet fprime;
    fprime.set(1);
    for (int e = p.k + 2; e <= 2 * p.k; ++e) fprime.set(e);
    if (BigInt(m) <= d_family_size(p)) {
      std::vector<KSet> sets{f0, fprime};
      KSet one;
      one.set(1);
      for_each_combination(detail::complement_elements(one, p.n), p.k - 1,
                           [&](const std::vector<int>& pick) {
                             if (static_cast<std::int64_t>(sets.size()) >= m) return;
                             KSet s = one;
                             for (int e : pick) s.set(e);
                             if (s == fprime || !s.intersects(f0)) return;
                             sets.push_back(s);
                           });
      if (static_cast<std::int64_t>(sets.size()) == m) {
        out.push_back(Family::of(p, std::move(sets)));
      }
    }
    // Fallback eligible family for any m >= 2: a disjoint pair plus the
    // lexicographic prefix of everything else.
    std::vector<KSet> sets{f0, fprime};
    for_each_kset(p, [&](const KSet& s) {
      if (static_cast<std::int64_t>(sets.size()) >= m) return;
      if (s == f0 || s == fprime) return;
      sets.push_back(s);
    });
    if (static_cast<std::int64_t>(sets.size()) == m) {
      out.push_back(Family::of(p, std::move(sets)));
    }
  }
  return out;
}

}  // namespace detail

namespace detail {

inline SearchResult run_search(std::int64_t m, const Params& p, Objective objective,
                               SearchBudget budget, bool symmetry) {
  p.validate();
  const BigInt total = binom(p.n, p.k);
  if (BigInt(m) > total) throw DomainError("search: m exceeds C(n,k)");
  if (objective == Objective::MaxDegree) {
    if (m < 2) throw DomainError("search: degree objective needs m >= 2");
    if (p.n < 2 * p.k) {
      throw DomainError("search: no disjoint pair exists for n < 2k, infeasible");
    }
  } else if (m < 1) {
    throw DomainError("search: edge objective needs m >= 1");
  }

  SearchContext ctx;
  ctx.vertices = enumerate_all(p);
  ctx.m = m;
  ctx.objective = objective;
  ctx.intersecting_impossible = BigInt(m) > binom(p.n - 1, p.k - 1);
  ctx.symmetry = symmetry;
  ctx.budget = budget;
  ctx.start = std::chrono::steady_clock::now();

  // Seed the incumbent with constructed families; the DFS then only has to
  // prove there is nothing strictly better.
  std::optional<Family> seed_witness;
  std::int64_t seed_value = 0;
  for (const Family& cand : seed_candidates(m, p, objective)) {
    if (cand.size() != m) continue;
    std::int64_t value;
    if (objective == Objective::MaxDegree) {
      value = max_degree(cand).max;
      if (value == 0) continue;  // intersecting, not eligible
    } else {
      value = edge_count(cand).convert_to<std::int64_t>();
    }
    if (!seed_witness || value < seed_value) {
      seed_witness = cand;
      seed_value = value;
    }
  }
  ctx.incumbent = std::numeric_limits<std::int64_t>::max();
  if (seed_witness) {
    ctx.best = seed_witness->members();
    ctx.incumbent = seed_value;
  }

  search_dfs(ctx, 0);

  SearchResult res;
  res.budget = budget;
  res.nodes = ctx.nodes;
  res.elapsed_ms = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                            ctx.start)
          .count());
  res.proven_optimal = !ctx.budget_hit;
  if (!ctx.best) {
    if (ctx.budget_hit) {
      throw ResourceError("search: budget exhausted before any incumbent was found");
    }
    throw DomainError("search: no eligible family of size m exists");
  }
  res.optimum = ctx.incumbent;
  res.witness = Family::of(p, *ctx.best);
  return res;
}

}  // namespace detail

/// Minimum of the maximum degree over non-intersecting families of size m.
inline SearchResult min_max_degree(std::int64_t m, const Params& p,
                                   SearchBudget budget = SearchBudget::from_env(),
                                   bool symmetry = false) {
  return detail::run_search(m, p, Objective::MaxDegree, budget, symmetry);
}

/// Minimum number of disjoint pairs over families of size m.
inline SearchResult min_edges(std::int64_t m, const Params& p,
                              SearchBudget budget = SearchBudget::from_env(),
                              bool symmetry = false) {
  return detail::run_search(m, p, Objective::MinEdges, budget, symmetry);
}

struct CoverStructure {
  std::vector<int> elements;  // the set S, ascending
  std::int64_t residual = 0;  // members avoiding S
  std::vector<std::pair<int, std::int64_t>> member_counts;  // |f(x)| per x in S
};

/// For each size s = 0..t_max, a size-s set S (from elements occurring in f)
/// minimizing the number of members avoiding S, ties toward the
/// lexicographically smallest S. Exact scan; t_max is capped to keep the
/// candidate count sane.
inline std::vector<CoverStructure> find_cover_structure(const Family& f, int t_max) {
  if (t_max < 0) throw DomainError("find_cover_structure: negative t_max");
  if (t_max > 6) throw ResourceError("find_cover_structure: t_max above the exact-scan cap 6");
  const std::vector<int> support = f.support();
  Rational work = 0;
  for (int s = 0; s <= t_max; ++s) {
    work += Rational(binom(static_cast<long long>(support.size()), s)) * f.size();
  }
  if (work > 200'000'000) {
    throw ResourceError("find_cover_structure: candidate scan too large for this family");
  }
  std::vector<CoverStructure> out;
  for (int s = 0; s <= t_max; ++s) {
    const int take = std::min<int>(s, static_cast<int>(support.size()));
    std::optional<std::vector<int>> best_set;
    std::int64_t best_residual = 0;
    for_each_combination(support, take, [&](const std::vector<int>& pick) {
      KSet sset;
      for (int e : pick) sset.set(e);
      std::int64_t residual = 0;
      for (const auto& m : f.members())
        if (!m.intersects(sset)) ++residual;
      if (!best_set || residual < best_residual) {
        best_set = pick;
        best_residual = residual;
      }
    });
    CoverStructure cs;
    cs.elements = best_set.value_or(std::vector<int>{});
    cs.residual = best_residual;
    for (int e : cs.elements) {
      std::int64_t through = 0;
      for (const auto& m : f.members())
        if (m.test(e)) ++through;
      cs.member_counts.emplace_back(e, through);
    }
    out.push_back(std::move(cs));
  }
  return out;
}

}  // namespace kneserlab
