#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <vector>

#include "kneserlab/binom.hpp"
#include "kneserlab/families.hpp"
#include "kneserlab/lex.hpp"
#include "kneserlab/stats.hpp"

using namespace kneserlab;

namespace {

KSet canonical_f0(const Params& p) { return KSet::interval(2, p.k + 1); }

KSet canonical_fprime(const Params& p) {
  KSet s;
  s.set(1);
  for (int e = p.k + 2; e <= 2 * p.k; ++e) s.set(e);
  return s;
}

Family canonical_D(const Params& p) {
  return make_D(1, canonical_f0(p), canonical_fprime(p), p);
}

}  // namespace

TEST_CASE("star: size, membership, no edges") {
  const Params p{5, 2};
  const Family s = make_star(1, p);
  REQUIRE(s.size() == 4);
  for (const auto& m : s.members()) CHECK(m.test(1));
  CHECK(s.contains(KSet::of({1, 5}, p)));
  CHECK(edge_count(s) == 0);
  CHECK(BigInt(make_star(p.n, p).size()) == binom(p.n - 1, p.k - 1));
  CHECK_THROWS_AS(make_star(6, p), DomainError);
}

TEST_CASE("star_plus: e = d = C(n-k-1,k-1)") {
  for (auto [n, k] : std::vector<std::pair<int, int>>{{5, 2}, {6, 2}, {7, 3}}) {
    const Params p{n, k};
    const Family f = make_star_plus(1, canonical_f0(p), p);
    CHECK(BigInt(f.size()) == binom(n - 1, k - 1) + 1);
    const BigInt expect = binom(n - k - 1, k - 1);
    CHECK(edge_count(f) == expect);
    CHECK(BigInt(max_degree(f).max) == expect);
  }
  const Params p{5, 2};
  CHECK_THROWS_AS(make_star_plus(2, canonical_f0(p), p), DomainError);
}

TEST_CASE("hilton_milner: membership, size, intersecting") {
  const Params p{5, 2};
  const Family hm = make_hilton_milner(1, KSet::of({2, 3}, p), p);
  REQUIRE(hm.size() == 3);
  CHECK(hm.contains(KSet::of({2, 3}, p)));
  CHECK(hm.contains(KSet::of({1, 2}, p)));
  CHECK(hm.contains(KSet::of({1, 3}, p)));
  CHECK(is_intersecting(hm));

  const Params p10{10, 3};
  CHECK(make_hilton_milner(1, canonical_f0(p10), p10).size() == 22);
  CHECK_THROWS_AS(make_hilton_milner(2, KSet::of({2, 3}, p), p), DomainError);
}

TEST_CASE("D: golden members, exactly one edge") {
  const Params p{5, 2};
  const Family d = canonical_D(p);
  REQUIRE(d.size() == 4);
  CHECK(d.contains(KSet::of({2, 3}, p)));
  CHECK(d.contains(KSet::of({1, 2}, p)));
  CHECK(d.contains(KSet::of({1, 3}, p)));
  CHECK(d.contains(KSet::of({1, 4}, p)));
  CHECK(max_degree(d).max == 1);
  CHECK(edge_count(d) == 1);

  const Params p6{6, 2};
  CHECK(canonical_D(p6).size() == 4);  // 5 - 3 + 2

  // the one edge is exactly (f0, fprime)
  const auto pair = find_disjoint_pair(d);
  REQUIRE(pair.has_value());
  CHECK(((pair->first == canonical_f0(p) && pair->second == canonical_fprime(p)) ||
         (pair->second == canonical_f0(p) && pair->first == canonical_fprime(p))));

  CHECK_THROWS_AS(make_D(1, KSet::of({1, 2}, p), KSet::of({1, 4}, p), p), DomainError);
  CHECK_THROWS_AS(make_D(1, KSet::of({2, 3}, p), KSet::of({2, 4}, p), p), DomainError);
  CHECK_THROWS_AS(make_D(1, KSet::of({2, 3}, p), KSet::of({1, 3}, p), p), DomainError);
}

TEST_CASE("D size dominates k*C(n-k,k-2) at k >= 4") {
  const Params p{12, 4};
  CHECK(BigInt(canonical_D(p).size()) == binom(11, 3) - binom(7, 3) + 2);
  CHECK(BigInt(canonical_D(p).size()) >= 4 * binom(8, 2));
}

TEST_CASE("E family: golden small case") {
  const Params p{6, 2};
  const Family e1 = make_E(1, p);
  REQUIRE(e1.size() == 6);
  for (const auto& elems :
       std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}) {
    CHECK(e1.contains(KSet::of(elems, p)));
  }
  CHECK(max_degree(e1).max == 1);

  const Params p10{10, 3};
  CHECK(make_E(2, p10).size() == 40);  // C(9,2) - C(4,2) + C(5,3)

  CHECK_THROWS_AS(make_E(0, p), DomainError);
  CHECK_THROWS_AS(make_E(4, p), DomainError);  // k+i+1 > n
}

TEST_CASE("E family avoiders of 1 are exactly the window k-sets") {
  for (auto [n, k, i] : std::vector<std::array<int, 3>>{{8, 3, 1}, {10, 3, 2}, {12, 4, 2}}) {
    const Params p{n, k};
    const Family e = make_E(i, p);
    KSet one;
    one.set(1);
    const Family bar = avoiders(e, one);
    CHECK(BigInt(bar.size()) == binom(k + i, k));
    const KSet window = KSet::interval(2, k + i + 1);
    for (const auto& m : bar.members()) CHECK(m.is_subset_of(window));
  }
}

TEST_CASE("W and W': golden small case, boundary W'") {
  const Params p{6, 2};
  const Family w2 = make_W(2, p);
  REQUIRE(w2.size() == 5);
  for (const auto& elems :
       std::vector<std::vector<int>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}) {
    CHECK(w2.contains(KSet::of(elems, p)));
  }

  // boundary case lp = k: W' is all k-sets inside the window
  const Params p93{9, 3};
  const Family wp = make_W_prime(4, 3, p93);
  CHECK(BigInt(wp.size()) == binom(4, 3));
  const KSet window = KSet::interval(3, 6);
  for (const auto& m : wp.members()) CHECK(m.is_subset_of(window));

  CHECK_THROWS_AS(make_W(0, p), DomainError);
  CHECK_THROWS_AS(make_W(5, p), DomainError);
  CHECK_THROWS_AS(make_W_prime(2, 3, p93), DomainError);
}

TEST_CASE("tightness G: sizes, degrees, orbit structure") {
  const Params p{12, 3};
  const Family g = make_tightness_G(4, p);
  REQUIRE(BigInt(g.size()) == binom(10, 1) + 8 * binom(6, 1));
  REQUIRE(g.size() == 58);
  const auto prof = max_degree(g);
  CHECK(prof.max == 15);  // (s-1) * C(n-s-k, k-2) = 3 * 5

  const Params p13{13, 4};
  const Family g13 = make_tightness_G(3, p13);
  REQUIRE(BigInt(g13.size()) == binom(11, 2) + 6 * binom(8, 2));
  REQUIRE(g13.size() == 223);
  CHECK(max_degree(g13).max == 30);  // 2 * C(6,2)

  // members containing {1,2} have degree 0; the one-element orbit all share
  // the max degree, and the witness lies in that orbit
  const KSet pair = KSet::interval(1, 2);
  for (std::size_t i = 0; i < g.members().size(); ++i) {
    const auto& m = g.members()[i];
    if (pair.is_subset_of(m)) {
      CHECK(prof.degrees[i] == 0);
    } else {
      CHECK(m.intersection_count(pair) == 1);
      CHECK(prof.degrees[i] == prof.max);
    }
  }
  CHECK(prof.witness.intersection_count(pair) == 1);

  CHECK_THROWS_AS(make_tightness_G(1, p), DomainError);
  CHECK_THROWS_AS(make_tightness_G(11, p), DomainError);
}

TEST_CASE("random families: determinism, bounds, flags") {
  const Params p{10, 3};
  const Family a = make_random(30, p, 42, false);
  const Family b = make_random(30, p, 42, false);
  CHECK(a == b);
  const Family c = make_random(30, p, 43, false);
  CHECK(a != c);  // pinned by the fixed seeds

  CHECK(make_random(binom(10, 3), p, 7, false).size() == 120);
  CHECK(make_random(1, p, 7, false).size() == 1);
  CHECK(is_intersecting(make_random(1, p, 7, false)));
  CHECK_FALSE(is_intersecting(make_random(50, p, 9, true)));
  CHECK_THROWS_AS(make_random(121, p, 7, false), DomainError);
  // non-intersecting draws are impossible when no disjoint pair exists
  CHECK_THROWS_AS(make_random(2, Params{4, 3}, 7, true, 50), ResourceError);
}

TEST_CASE("cardinality postconditions across the desk grid") {
  for (int n = 2; n <= 14; ++n) {
    for (int k = 1; k <= 4 && k <= n; ++k) {
      const Params p{n, k};
      CHECK(BigInt(make_star(1, p).size()) == binom(n - 1, k - 1));

      if (n >= k + 1) {
        const KSet f0 = canonical_f0(p);
        CHECK(BigInt(make_star_plus(1, f0, p).size()) == binom(n - 1, k - 1) + 1);
        CHECK(BigInt(make_hilton_milner(1, f0, p).size()) ==
              binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 1);
        if (n >= 2 * k) {
          CHECK(BigInt(canonical_D(p).size()) ==
                binom(n - 1, k - 1) - binom(n - k - 1, k - 1) + 2);
        }
      }

      for (int i = 1; k + i + 1 <= n && i <= 5; ++i) {
        CHECK(BigInt(make_E(i, p).size()) ==
              binom(n - 1, k - 1) - binom(n - k - i - 1, k - 1) + binom(k + i, k));
      }

      for (int l = 1; l + 2 <= n; ++l) {
        CHECK(BigInt(make_W(l, p).size()) ==
              binom(n - 2, k - 2) + 2 * (binom(n - 2, k - 1) - binom(n - l - 2, k - 1)));
        for (int lp = 1; lp <= std::min(l, k); ++lp) {
          BigInt expect = 0;
          for (int j = lp; j <= std::min(l, k); ++j) expect += binom(l, j) * binom(n - l, k - j);
          CHECK(BigInt(make_W_prime(l, lp, p).size()) == expect);
        }
      }

      for (int s = 2; s + 2 <= n && n - s - 2 >= k - 2; ++s) {
        CHECK(BigInt(make_tightness_G(s, p).size()) ==
              binom(n - 2, k - 2) + 2 * s * binom(n - s - 2, k - 2));
      }
    }
  }
}

TEST_CASE("statistics are invariant under relabeling") {
  const Params p{9, 3};
  const Family g = make_tightness_G(3, p);
  const std::vector<int> perm{4, 7, 1, 9, 2, 8, 3, 5, 6};
  const Family h = relabel(g, perm);
  CHECK(h.size() == g.size());
  CHECK(max_degree(h).max == max_degree(g).max);
  CHECK(edge_count(h) == edge_count(g));
  CHECK(covering_number(h).value == covering_number(g).value);
}
