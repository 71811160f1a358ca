#pragma once

#include <cstdint>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "kneserlab/binom.hpp"
#include "kneserlab/families.hpp"
#include "kneserlab/family.hpp"
#include "kneserlab/lex.hpp"
#include "kneserlab/numeric.hpp"
#include "kneserlab/stats.hpp"

namespace kneserlab {

/// One inequality instantiated on concrete data, normalized so the claim is
/// always lhs >= rhs. `assertable` marks claims that hold unconditionally on
/// every valid input (safe to enforce in tests); the rest are evaluators for
/// regimes the hypotheses note describes.
struct BoundReport {
  std::string name;
  Params params{1, 1};
  std::string extra;  // auxiliary parameters, "i=2;s=4" style
  bool hypotheses_met = true;
  std::string note;
  Rational lhs;
  Rational rhs;
  bool assertable = false;

  Rational slack() const { return lhs - rhs; }
  bool holds() const { return lhs >= rhs; }
};

/// Concentration value c(i) extended past the c_profile range: an i-set with
/// i = k is contained in exactly one member or none, and nothing contains a
/// set larger than k.
inline Rational c_value(const Family& f, int i) {
  if (i < 1) throw DomainError("c_value: i must be positive");
  if (i < f.params().k) return c_profile(f, i).value;
  if (i == f.params().k) return f.empty() ? Rational(0) : Rational(1);
  return Rational(0);
}

/// Independence number of KG(n,k) and the extremal size of an intersecting
/// family with no common element, as closed forms.
inline std::pair<BigInt, BigInt> ekr_hm_sizes(const Params& p) {
  p.validate();
  if (p.n < 2 * p.k) throw DomainError("ekr_hm_sizes: requires n >= 2k");
  const BigInt alpha = binom(p.n - 1, p.k - 1);
  const BigInt hm = alpha - binom(p.n - p.k - 1, p.k - 1) + 1;
  return {alpha, hm};
}

/// Edge floor for a family of given size: at size C(n-1,k-1)+1 the floor is
/// C(n-k-1,k-1); inside the window m <= C(n-1,k-1) + (n-2k)/n*C(n-k-1,k-1)
/// (n > 2k) the floor is e(L(m)). Both are proven at every scale; outside
/// the windows e(L(m)) is reported as a reference value only.
inline BoundReport edge_floor_check(const Family& f) {
  const Params p = f.params();
  const BigInt m = f.size();
  const BigInt alpha = binom(p.n - 1, p.k - 1);
  const BigInt kkk_rhs = binom(p.n - p.k - 1, p.k - 1);
  const bool in_kkk = (m == alpha + 1) && p.n >= 2 * p.k;
  const Rational window = Rational(alpha) + Rational(BigInt(p.n - 2 * p.k), BigInt(p.n)) * Rational(kkk_rhs);
  const bool in_window = p.n > 2 * p.k && Rational(m) <= window;

  BoundReport r;
  r.name = "edge_floor";
  r.params = p;
  r.extra = "m=" + m.str();
  r.lhs = Rational(edge_count(f));
  if (in_window) {
    r.rhs = Rational(edge_count(lex_family(m, p)));
    r.assertable = true;
    r.note = "lex-prefix floor, inside the proven window";
  } else if (in_kkk) {
    r.rhs = Rational(kkk_rhs);
    r.assertable = true;
    r.note = "floor at size C(n-1,k-1)+1";
  } else {
    r.rhs = Rational(edge_count(lex_family(m, p)));
    r.hypotheses_met = false;
    r.assertable = false;
    r.note = "outside both proven windows; lex-prefix value for reference";
  }
  return r;
}

/// d(f) >= (1/2)(1 - c(2) k^3 / (gamma n)) |f| for non-intersecting f,
/// where gamma = |f| / C(n-1,k-1). Counting through a fixed disjoint pair;
/// holds at every scale.
inline BoundReport disjoint_pair_degree_bound(const Family& f) {
  const Params p = f.params();
  if (p.n <= 2 * p.k) throw DomainError("disjoint_pair_degree_bound: requires n > 2k");
  if (is_intersecting(f)) {
    throw DomainError("disjoint_pair_degree_bound: requires a non-intersecting family");
  }
  const Rational gamma(BigInt(f.size()), binom(p.n - 1, p.k - 1));
  const Rational c2 = c_value(f, 2);
  const Rational k3(BigInt(p.k) * p.k * p.k);
  BoundReport r;
  r.name = "disjoint_pair_degree";
  r.params = p;
  r.extra = "m=" + std::to_string(f.size());
  r.lhs = Rational(BigInt(max_degree(f).max));
  r.rhs = Rational(1, 2) * (Rational(1) - c2 * k3 / (gamma * p.n)) * f.size();
  r.assertable = true;
  return r;
}

struct RestrictionEdgeBounds {
  BoundReport per_member;  // min over H in f(P-bar) of e(f(P), H) vs the floor
  BoundReport aggregate;   // e(f(P), f(P-bar)) vs the density floor
};

/// Edge floors between the link at the c(i) witness P and the members
/// avoiding P. Pure counting, holds at every scale.
inline RestrictionEdgeBounds restriction_edge_bounds(const Family& f, int i) {
  const Params p = f.params();
  if (i < 1 || i >= p.k) throw DomainError("restriction_edge_bounds: i must be in [1, k-1]");
  if (f.empty()) throw DomainError("restriction_edge_bounds: empty family");
  const CProfile cp = c_profile(f, i);
  const Restriction res = restrict(f, cp.witness);
  const Rational c_next = c_value(f, i + 1);
  const BigInt link_size = res.through.size();
  const BigInt bar_size = res.avoiding.size();

  RestrictionEdgeBounds out;
  out.per_member.name = "restriction_edge_min";
  out.per_member.params = p;
  out.per_member.extra = "i=" + std::to_string(i) + ";P=" + cp.witness.to_string();
  out.per_member.assertable = true;
  out.aggregate = out.per_member;
  out.aggregate.name = "restriction_edge_total";

  BigInt total = 0;
  if (res.avoiding.empty()) {
    out.per_member.lhs = 0;
    out.per_member.rhs = 0;
    out.per_member.note = "vacuous: no member avoids P";
    out.aggregate.lhs = 0;
    out.aggregate.rhs = 0;
    out.aggregate.note = "vacuous: no member avoids P";
    return out;
  }

  std::int64_t min_cross = -1;
  for (const auto& h : res.avoiding.members()) {
    std::int64_t cross = 0;
    for (const auto& g : res.through.members())
      if (!g.intersects(h)) ++cross;
    total += cross;
    if (min_cross < 0 || cross < min_cross) min_cross = cross;
  }
  out.per_member.lhs = Rational(BigInt(min_cross));
  out.per_member.rhs =
      Rational(link_size) - c_next * p.k * Rational(binom(p.n - i - 1, p.k - i - 1));
  out.aggregate.lhs = Rational(total);
  const Rational ci = cp.value;  // positive: f is nonempty
  out.aggregate.rhs =
      (Rational(1) - c_next * p.k * p.k / (ci * p.n)) * Rational(link_size * bar_size);
  return out;
}

/// d(f) >= max{1/2, 1-c(1)} (1 - c(2) k^2 / (c(1) n)) |f| for
/// non-intersecting f, splitting at the c(1) witness element.
inline BoundReport element_split_degree_bound(const Family& f) {
  const Params p = f.params();
  if (is_intersecting(f)) {
    throw DomainError("element_split_degree_bound: requires a non-intersecting family");
  }
  const Rational c1 = c_value(f, 1);
  const Rational c2 = c_value(f, 2);
  const Rational factor = std::max(Rational(1, 2), Rational(1) - c1);
  BoundReport r;
  r.name = "element_split_degree";
  r.params = p;
  r.extra = "m=" + std::to_string(f.size());
  r.lhs = Rational(BigInt(max_degree(f).max));
  r.rhs = factor * (Rational(1) - c2 * p.k * p.k / (c1 * p.n)) * f.size();
  r.assertable = true;
  return r;
}

/// Either d(f) >= |f|/2, or the concentration c(1) exceeds
/// |f| / (2k C(n-1,k-1)). The report carries whichever branch holds.
inline BoundReport degree_or_concentration_bound(const Family& f) {
  if (f.empty()) throw DomainError("degree_or_concentration_bound: empty family");
  const Params p = f.params();
  const std::int64_t d = max_degree(f).max;
  BoundReport r;
  r.name = "degree_or_concentration";
  r.params = p;
  r.extra = "m=" + std::to_string(f.size());
  r.assertable = true;
  if (2 * d >= f.size()) {
    r.lhs = Rational(BigInt(d));
    r.rhs = Rational(BigInt(f.size()), 2);
    r.note = "degree branch";
  } else {
    r.lhs = c_value(f, 1);
    r.rhs = Rational(BigInt(f.size()), 2 * p.k * binom(p.n - 1, p.k - 1));
    r.note = "concentration branch";
  }
  return r;
}

/// Exact number of k-sets meeting every one of the given pairwise disjoint
/// sets, by inclusion-exclusion over which of them are missed.
inline BigInt transversal_count(const std::vector<KSet>& sets, const Params& p) {
  p.validate();
  for (std::size_t a = 0; a < sets.size(); ++a) {
    if (sets[a].empty() || sets[a].count() > p.k) {
      throw DomainError("transversal_count: each set must have size in [1, k]");
    }
    for (int e : sets[a].elements())
      if (e > p.n) throw DomainError("transversal_count: element outside ground set");
    for (std::size_t b = a + 1; b < sets.size(); ++b) {
      if (sets[a].intersects(sets[b])) {
        throw DomainError("transversal_count: sets must be pairwise disjoint");
      }
    }
  }
  const std::size_t s = sets.size();
  BigInt count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << s); ++mask) {
    int missed = 0;
    int sign = 1;
    for (std::size_t a = 0; a < s; ++a) {
      if (mask & (std::uint64_t{1} << a)) {
        missed += sets[a].count();
        sign = -sign;
      }
    }
    count += sign * binom(p.n - missed, p.k);
  }
  return count;
}

/// The count above is at most (k^2/n)^s C(n,k) once n >= k^2; exact rational
/// comparison.
inline BoundReport transversal_proportion_check(const std::vector<KSet>& sets, const Params& p) {
  if (p.n < p.k * p.k) throw DomainError("transversal_proportion_check: requires n >= k^2");
  const BigInt count = transversal_count(sets, p);
  const auto s = static_cast<unsigned>(sets.size());
  BoundReport r;
  r.name = "transversal_proportion";
  r.params = p;
  r.extra = "s=" + std::to_string(s);
  r.lhs = rational_pow(Rational(BigInt(p.k) * p.k, BigInt(p.n)), s) * Rational(binom(p.n, p.k));
  r.rhs = Rational(count);
  r.assertable = true;
  return r;
}

/// Second largest absolute eigenvalue of KG(n,k) in closed form.
inline BigInt kneser_lambda(const Params& p) {
  p.validate();
  return binom(p.n - p.k - 1, p.k - 1);
}

/// C(n-2,k-2) * C(n-k-1,k-1) / C(n-2,k-1) equals ((k-1)/(n-k)) C(n-k-1,k-1)
/// and is strictly below C(n-k-2,k-2); the ratio identity behind the
/// two-element-cover degree bounds. Exact at every n >= 2k, k >= 2.
inline BoundReport degree_ratio_identity(const Params& p) {
  p.validate();
  if (p.k < 2 || p.n < 2 * p.k) throw DomainError("degree_ratio_identity: requires k >= 2, n >= 2k");
  const Rational lhs_ratio =
      Rational(binom(p.n - 2, p.k - 2) * binom(p.n - p.k - 1, p.k - 1), binom(p.n - 2, p.k - 1));
  const Rational middle =
      Rational(BigInt(p.k - 1), BigInt(p.n - p.k)) * Rational(binom(p.n - p.k - 1, p.k - 1));
  if (lhs_ratio != middle) {
    throw std::logic_error("degree_ratio_identity: algebraic forms disagree");
  }
  BoundReport r;
  r.name = "degree_ratio_identity";
  r.params = p;
  r.note = "both closed forms verified equal; claim is the strict upper bound";
  r.lhs = Rational(binom(p.n - p.k - 2, p.k - 2));
  r.rhs = lhs_ratio;
  r.assertable = true;
  return r;
}

/// A family split along a two-element set {x,y}: the two shadow families in
/// KG(n-2,k-1) (ground set relabeled to [1..n-2]), the members containing
/// both elements and the members avoiding both, plus the spectral constants
/// of KG(n-2,k-1).
struct SplitFamily {
  Family base;
  int x = 1;
  int y = 2;
  Family side1;  // shadows of members meeting {x,y} exactly in x
  Family side2;  // shadows of members meeting {x,y} exactly in y
  Family containing_both;
  Family avoiding_both;
  BigInt vertex_count;  // N = C(n-2,k-1)
  BigInt reg_degree;    // degree of KG(n-2,k-1) = C(n-k-1,k-1)
  BigInt lambda;        // C(n-k-2,k-2)
  Rational b;           // |side1| / N
  Rational c;           // |side2| / N
  Rational delta1;      // cross-side average degree of side1
  Rational delta2;
};

inline SplitFamily make_split(const Family& f, int x, int y) {
  const Params p = f.params();
  if (p.k < 2) throw DomainError("make_split: requires k >= 2");
  if (x == y || x < 1 || y < 1 || x > p.n || y > p.n) {
    throw DomainError("make_split: {x,y} must be two distinct ground-set elements");
  }
  std::vector<int> map(p.n + 1, 0);
  int next = 0;
  for (int e = 1; e <= p.n; ++e)
    if (e != x && e != y) map[e] = ++next;

  KSet pair;
  pair.set(x);
  pair.set(y);
  const Params shadow_params{p.n - 2, p.k - 1};
  std::vector<KSet> s1, s2, both, neither;
  for (const auto& m : f.members()) {
    const int t = m.intersection_count(pair);
    if (t == 2) {
      both.push_back(m);
    } else if (t == 0) {
      neither.push_back(m);
    } else {
      KSet shadow;
      for (int e : (m - pair).elements()) shadow.set(map[e]);
      (m.test(x) ? s1 : s2).push_back(shadow);
    }
  }
  SplitFamily out{f,
                  x,
                  y,
                  Family::of(shadow_params, std::move(s1)),
                  Family::of(shadow_params, std::move(s2)),
                  Family::of(p, std::move(both)),
                  Family::of(p, std::move(neither)),
                  binom(p.n - 2, p.k - 1),
                  binom(p.n - p.k - 1, p.k - 1),
                  binom(p.n - p.k - 2, p.k - 2),
                  Rational(0),
                  Rational(0),
                  Rational(0),
                  Rational(0)};
  out.b = Rational(BigInt(out.side1.size()), out.vertex_count);
  out.c = Rational(BigInt(out.side2.size()), out.vertex_count);
  BigInt cross = 0;
  for (const auto& a : out.side1.members())
    for (const auto& b2 : out.side2.members())
      if (!a.intersects(b2)) ++cross;
  if (!out.side1.empty()) out.delta1 = Rational(cross, BigInt(out.side1.size()));
  if (!out.side2.empty()) out.delta2 = Rational(cross, BigInt(out.side2.size()));
  return out;
}

struct SplitBounds {
  BoundReport avg_degree_side1;  // delta_1 against the mixing floor
  BoundReport avg_degree_side2;
  BoundReport degree;          // d(base) against the averaged-sides floor
  BoundReport ratio_identity;  // the exact ratio identity at these params
};

/// Mixing-style floors on the cross-side average degrees and the resulting
/// floor on d(base). The per-side and degree forms depend on size hypotheses
/// of the asymptotic regime, so they are evaluators, not assertions. The
/// square roots in the per-side floors are approximated in double precision
/// (the only non-exact arithmetic in this module).
inline SplitBounds split_degree_bound(const SplitFamily& s) {
  if (s.side1.empty() || s.side2.empty()) {
    throw DomainError("split_degree_bound: both sides must be nonempty");
  }
  const Params p = s.base.params();
  const Rational dn(s.reg_degree, s.vertex_count);

  SplitBounds out;
  auto side = [&](const char* name, const Rational& delta, std::int64_t mine,
                  std::int64_t other) {
    BoundReport r;
    r.name = name;
    r.params = p;
    r.extra = "x=" + std::to_string(s.x) + ";y=" + std::to_string(s.y);
    r.lhs = delta;
    const double root = std::sqrt(static_cast<double>(other) / static_cast<double>(mine));
    r.rhs = Rational(BigInt(other)) * dn - Rational(s.lambda) * Rational(root);
    r.assertable = false;
    r.note = "sqrt term approximated in double";
    r.hypotheses_met = false;
    return r;
  };
  out.avg_degree_side1 = side("split_avg_degree_1", s.delta1, s.side1.size(), s.side2.size());
  out.avg_degree_side2 = side("split_avg_degree_2", s.delta2, s.side2.size(), s.side1.size());

  out.degree.name = "split_degree";
  out.degree.params = p;
  out.degree.extra = out.avg_degree_side1.extra;
  out.degree.lhs = Rational(BigInt(max_degree(s.base).max));
  out.degree.rhs =
      Rational(BigInt(s.side1.size() + s.side2.size()), 2) * dn - Rational(s.lambda);
  out.degree.assertable = false;
  const BigInt dsize = d_family_size(p);
  out.degree.hypotheses_met = BigInt(s.base.size()) >= dsize;
  out.degree.note = out.degree.hypotheses_met
                        ? "size hypothesis |f| >= |D| holds; asymptotic step still unproven here"
                        : "size hypothesis |f| >= |D| fails";

  out.ratio_identity = degree_ratio_identity(p);
  return out;
}

/// The two closed-form floors on d(f) for families whose members all meet a
/// fixed pair {x,y}: the sharp ratio form and its relaxed k^2/n form.
/// Valid in the asymptotic regime only; hypotheses are recorded, values are
/// exact rationals.
inline std::pair<BoundReport, BoundReport> cover_pair_degree_bounds(const Family& f, int x,
                                                                    int y) {
  const Params p = f.params();
  if (p.k < 2) throw DomainError("cover_pair_degree_bounds: requires k >= 2");
  KSet pair;
  pair.set(x);
  pair.set(y);
  std::int64_t avoid_both = 0;
  for (const auto& m : f.members())
    if (!m.intersects(pair)) ++avoid_both;

  const BigInt lam = binom(p.n - p.k - 2, p.k - 2);
  const Rational d_actual(BigInt(max_degree(f).max));
  const bool regime_n = p.n >= 64 * p.k * p.k;
  const bool regime_size = BigInt(f.size()) >= 4 * d_family_size(p);
  const bool regime_cover = (avoid_both == 0);
  const std::string note =
      std::string("n>=64k^2: ") + (regime_n ? "yes" : "no") +
      "; |f|>=4|D|: " + (regime_size ? "yes" : "no") +
      "; all members meet {x,y}: " + (regime_cover ? "yes" : "no") +
      "; large-k hypothesis not checkable";

  BoundReport form1;
  form1.name = "cover_pair_form1";
  form1.params = p;
  form1.extra = "x=" + std::to_string(x) + ";y=" + std::to_string(y);
  form1.lhs = d_actual;
  form1.rhs = Rational((BigInt(f.size()) - binom(p.n - 2, p.k - 2)) * binom(p.n - p.k - 1, p.k - 1),
                       2 * binom(p.n - 2, p.k - 1)) -
              Rational(lam);
  form1.assertable = false;
  form1.hypotheses_met = regime_n && regime_size && regime_cover;
  form1.note = note;

  BoundReport form2 = form1;
  form2.name = "cover_pair_form2";
  form2.rhs = Rational(1, 2) * (Rational(1) - Rational(BigInt(p.k) * p.k, BigInt(p.n))) * f.size() -
              Rational(3, 2) * Rational(lam);
  return {form1, form2};
}

/// Exact degree of the window family at its closed form.
inline BigInt ei_degree(const Params& p, int i) {
  p.validate();
  if (i < 1 || i >= p.k) throw DomainError("ei_degree: i must be in [1, k-1]");
  return binom(p.n - p.k - 1, p.k - 1) - binom(p.n - p.k - i - 1, p.k - 1);
}

/// Exact degree of the two-cover tightness family at its closed form.
inline BigInt tightness_degree(const Params& p, int s) {
  p.validate();
  if (s < 2 || s + 2 > p.n || p.n - s - 2 < p.k - 2) {
    throw DomainError("tightness_degree: need s >= 2, s+2 <= n, n-s-2 >= k-2");
  }
  return (s - 1) * binom(p.n - s - p.k, p.k - 2);
}

/// Dashboard bundle for families close to the structured minimizers: the
/// one-element sandwich around u, and the two-element-cover chain at the
/// best pair through x. These floors bound the minimizer d(m,n,k), not an
/// arbitrary family, so every report is an evaluator.
inline std::vector<BoundReport> cover_regime_report(const Family& f, int x, const KSet& u) {
  const Params p = f.params();
  require_valid_kset(u, p, "cover_regime_report");
  if (u.test(x) || !f.contains(u)) {
    throw DomainError("cover_regime_report: u must be a member avoiding x");
  }
  const Rational d_actual(BigInt(max_degree(f).max));
  const BigInt hm = hm_size(p);
  const Rational sandwich_upper = Rational(BigInt(f.size()) - hm);

  std::vector<BoundReport> out;
  BoundReport lower;
  lower.name = "cover_regime_lower";
  lower.params = p;
  lower.extra = "x=" + std::to_string(x);
  lower.lhs = d_actual;
  lower.rhs = sandwich_upper - Rational(binom(p.n - 4, p.k - 4));
  lower.assertable = false;
  lower.note = "floor applies to minimizers with a one-element near-cover";
  out.push_back(lower);

  BoundReport upper;
  upper.name = "cover_regime_upper";
  upper.params = p;
  upper.extra = lower.extra;
  upper.lhs = sandwich_upper;
  upper.rhs = d_actual;
  upper.assertable = false;
  upper.note = "ceiling applies to the minimizer d(m,n,k); rhs shows d(f) for reference";
  out.push_back(upper);

  // Best pair {x,y}: the y minimizing the number of members avoiding both.
  int best_y = 0;
  std::int64_t best_avoid = -1;
  for (int y : f.support()) {
    if (y == x) continue;
    KSet pair;
    pair.set(x);
    pair.set(y);
    std::int64_t avoid = 0;
    for (const auto& m : f.members())
      if (!m.intersects(pair)) ++avoid;
    if (best_avoid < 0 || avoid < best_avoid) {
      best_avoid = avoid;
      best_y = y;
    }
  }
  if (best_y != 0) {
    KSet pair;
    pair.set(x);
    pair.set(best_y);
    std::int64_t in_both = 0;
    for (const auto& m : f.members())
      if (pair.is_subset_of(m)) ++in_both;
    const Rational dn(binom(p.n - p.k - 1, p.k - 1), binom(p.n - 2, p.k - 1));
    const Rational lam(binom(p.n - p.k - 2, p.k - 2));

    BoundReport step;
    step.name = "cover_regime_pair_step";
    step.params = p;
    step.extra = "x=" + std::to_string(x) + ";y=" + std::to_string(best_y);
    step.lhs = d_actual;
    step.rhs = Rational(BigInt(f.size() - best_avoid - in_both), 2) * dn - lam;
    step.assertable = false;
    step.note = "two-element-cover chain, exact sizes";
    out.push_back(step);

    BoundReport relaxed = step;
    relaxed.name = "cover_regime_pair_relaxed";
    relaxed.rhs = Rational(BigInt(f.size()), 2) * dn - Rational(3, 2) * lam -
                  Rational(binom(p.n - 4, p.k - 4), 2);
    relaxed.note = "chain with worst-case member-location counts";
    out.push_back(relaxed);

    BoundReport final_form = step;
    final_form.name = "cover_regime_pair_final";
    final_form.rhs = Rational(2, 5) * f.size();
    final_form.note = "chain endpoint; regime of validity not explicit";
    out.push_back(final_form);
  }
  return out;
}

/// C(n,k) * sum over l in [lmin, lmax] of (2 e t k^2 / n)^l, with Euler's
/// constant as the documented rational 2718282/10^6. Evaluator for the
/// heavy-intersector count ceiling. Pure arithmetic, so n is not capped by
/// the bit-vector width here.
inline Rational heavy_intersector_bound(int t, const Params& p, int lmin, int lmax) {
  if (p.k < 1 || p.n < p.k) throw DomainError("heavy_intersector_bound: need 1 <= k <= n");
  if (lmin > lmax) return Rational(0);
  if (lmin < 0) throw DomainError("heavy_intersector_bound: lmin must be nonnegative");
  const Rational euler(2718282, 1000000);
  const Rational base = 2 * euler * t * p.k * p.k / Rational(BigInt(p.n));
  Rational sum = 0;
  Rational term = rational_pow(base, static_cast<unsigned>(lmin));
  for (int l = lmin; l <= lmax; ++l) {
    sum += term;
    term *= base;
  }
  return sum * Rational(binom(p.n, p.k));
}

}  // namespace kneserlab
