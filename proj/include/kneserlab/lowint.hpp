#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kneserlab/binom.hpp"
#include "kneserlab/family.hpp"
#include "kneserlab/lex.hpp"
#include "kneserlab/numeric.hpp"
#include "kneserlab/rng.hpp"

namespace kneserlab {

/// Arithmetic mod a prime q. Prime moduli suffice for the spread
/// construction on this scale, so there is no extension-field machinery.
class PrimeField {
 public:
  explicit PrimeField(std::int64_t q) : q_(q) {
    if (!is_prime(q)) throw DomainError("PrimeField: modulus " + std::to_string(q) + " is not prime");
  }

  std::int64_t modulus() const { return q_; }
  std::int64_t add(std::int64_t a, std::int64_t b) const { return (a + b) % q_; }
  std::int64_t sub(std::int64_t a, std::int64_t b) const { return ((a - b) % q_ + q_) % q_; }
  std::int64_t mul(std::int64_t a, std::int64_t b) const { return (a * b) % q_; }

  std::int64_t pow(std::int64_t base, std::int64_t exp) const {
    std::int64_t r = 1 % q_;
    base %= q_;
    while (exp > 0) {
      if (exp & 1) r = mul(r, base);
      base = mul(base, base);
      exp >>= 1;
    }
    return r;
  }

  std::int64_t inv(std::int64_t a) const {
    a %= q_;
    if (a == 0) throw DomainError("PrimeField: zero has no inverse");
    return pow(a, q_ - 2);
  }

  /// Horner evaluation of the polynomial with coefficients c0..cd.
  std::int64_t eval_poly(const std::vector<std::int64_t>& coeffs, std::int64_t x) const {
    std::int64_t v = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = add(mul(v, x), *it);
    return v;
  }

  static bool is_prime(std::int64_t q) {
    if (q < 2) return false;
    for (std::int64_t d = 2; d * d <= q; ++d)
      if (q % d == 0) return false;
    return true;
  }

 private:
  std::int64_t q_;
};

struct SpreadMeta {
  std::string mode;           // "monte-carlo" | "polynomial"
  std::uint64_t seed = 0;
  std::int64_t q = 0;         // 0 when not applicable
  int poly_degree = -1;       // -1 when not applicable
};

/// A family together with its certified maximum pairwise intersection; the
/// certificate is recomputed from the members at construction time.
struct SpreadFamily {
  Family family;
  int spread = 0;
  SpreadMeta meta;
  std::vector<int> injection;  // cell -> ground element, polynomial mode only
};

struct PairwiseIntersection {
  int value = 0;
  std::pair<KSet, KSet> witness;
  bool defined = false;  // false when |f| < 2
};

inline PairwiseIntersection max_pairwise_intersection(const Family& f) {
  PairwiseIntersection out;
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      const int c = ms[i].intersection_count(ms[j]);
      if (!out.defined || c > out.value) {
        out.value = c;
        out.witness = {ms[i], ms[j]};
        out.defined = true;
      }
    }
  }
  return out;
}

/// Union of all pairwise intersections.
inline KSet intersection_union(const Family& f) {
  KSet u;
  const auto& ms = f.members();
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) u = u | (ms[i] & ms[j]);
  return u;
}

inline SpreadFamily certify_spread(Family f, SpreadMeta meta, std::vector<int> injection = {}) {
  const auto mpi = max_pairwise_intersection(f);
  return {std::move(f), mpi.defined ? mpi.value : 0, std::move(meta), std::move(injection)};
}

inline std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

/// floor(log2 k), the pairwise-intersection target of the sampled draw.
inline int spread_target(int k) {
  int t = 0;
  while ((1 << (t + 1)) <= k) ++t;
  return t;
}

struct SampleSpreadResult {
  bool success = false;
  SpreadFamily result;  // best attempt when !success
  int attempts = 0;
  std::int64_t target_size = 0;
  int target_spread = 0;
};

/// Bernoulli subsampling of g at rate 2 k^c / |g| until a draw has at least
/// k^c members and pairwise intersections at most floor(log2 k). Failure
/// after max_retries is an outcome, not an error: the success guarantee is
/// asymptotic. Deterministic for a fixed seed; each Bernoulli decision
/// accepts when draw * |g| < 2 k^c * 2^64, evaluated exactly.
inline SampleSpreadResult sample_spread(const Family& g, int c, std::uint64_t seed,
                                        int max_retries) {
  if (c < 1) throw DomainError("sample_spread: c must be positive");
  if (max_retries < 1) throw DomainError("sample_spread: max_retries must be positive");
  const BigInt want = boost::multiprecision::pow(BigInt(g.params().k), static_cast<unsigned>(c));
  if (2 * want > BigInt(g.size())) {
    throw DomainError("sample_spread: 2 k^c exceeds |g|, inclusion probability above 1");
  }
  const BigInt accept_bar = 2 * want << 64;  // accept iff draw * |g| < 2 k^c * 2^64
  SampleSpreadResult out;
  out.target_size = want.convert_to<std::int64_t>();
  out.target_spread = spread_target(g.params().k);

  SplitMix64 rng(seed);
  std::optional<SpreadFamily> best;
  for (int attempt = 1; attempt <= max_retries; ++attempt) {
    std::vector<KSet> picked;
    for (const auto& m : g.members()) {
      if (BigInt(rng.next()) * g.size() < accept_bar) picked.push_back(m);
    }
    SpreadFamily cand = certify_spread(Family::of(g.params(), std::move(picked)),
                                       {"monte-carlo", seed, 0, -1});
    const bool size_ok = cand.family.size() >= out.target_size;
    const bool spread_ok = cand.spread <= out.target_spread;
    if (size_ok && spread_ok) {
      out.success = true;
      out.result = std::move(cand);
      out.attempts = attempt;
      return out;
    }
    // Best attempt: prefer size feasibility, then smaller spread, then size.
    auto better = [&](const SpreadFamily& a, const SpreadFamily& b) {
      const bool a_size = a.family.size() >= out.target_size;
      const bool b_size = b.family.size() >= out.target_size;
      if (a_size != b_size) return a_size;
      if (a.spread != b.spread) return a.spread < b.spread;
      return a.family.size() > b.family.size();
    };
    if (!best || better(cand, *best)) best = std::move(cand);
    out.attempts = attempt;
  }
  out.result = std::move(*best);
  return out;
}

/// Largest prime q with k <= q < n/k (so that k*q <= n cells inject into
/// [n]); error when the range contains no prime.
inline std::int64_t choose_spread_prime(const Params& p) {
  std::int64_t best = 0;
  for (std::int64_t q = p.k; q * p.k <= p.n; ++q) {
    if (PrimeField::is_prime(q)) best = q;
  }
  if (best == 0) {
    throw DomainError("choose_spread_prime: no prime q with k <= q and k*q <= n (n=" +
                      std::to_string(p.n) + ", k=" + std::to_string(p.k) + ")");
  }
  return best;
}

/// Graphs of all q^(d+1) polynomials of degree at most d over GF(q),
/// restricted to k sample points and embedded in [n] by a seeded injection.
/// Two distinct polynomials agree on at most d points, so the pairwise
/// intersections are at most d; d < k keeps the graphs distinct.
inline SpreadFamily polynomial_spread(const Params& p, int d, std::uint64_t seed) {
  p.validate();
  if (d < 0 || d >= p.k) throw DomainError("polynomial_spread: need 0 <= d < k");
  const std::int64_t q = choose_spread_prime(p);
  const PrimeField field(q);
  const std::int64_t cells = q * p.k;

  // Seeded injection of the k x q evaluation grid into [n]: a partial
  // Fisher-Yates prefix of [1..n].
  SplitMix64 rng(seed);
  std::vector<int> pool(p.n);
  for (int i = 0; i < p.n; ++i) pool[i] = i + 1;
  for (std::int64_t i = 0; i < cells; ++i) {
    const auto j = i + static_cast<std::int64_t>(rng.below(p.n - i));
    std::swap(pool[i], pool[j]);
  }
  std::vector<int> phi(pool.begin(), pool.begin() + cells);  // cell (x,v) -> phi[x*q+v]

  const std::int64_t total = ipow(q, d + 1);
  std::vector<KSet> sets;
  sets.reserve(total);
  std::vector<std::int64_t> coeffs(d + 1, 0);
  for (std::int64_t id = 0; id < total; ++id) {
    std::int64_t rest = id;
    for (int j = 0; j <= d; ++j) {
      coeffs[j] = rest % q;
      rest /= q;
    }
    KSet s;
    for (int x = 0; x < p.k; ++x) {
      const std::int64_t v = field.eval_poly(coeffs, x);
      s.set(phi[static_cast<std::size_t>(x) * q + v]);
    }
    sets.push_back(s);
  }
  SpreadFamily out = certify_spread(Family::of(p, std::move(sets)),
                                    {"polynomial", seed, q, d}, std::move(phi));
  if (out.family.size() != total) {
    throw std::logic_error("polynomial_spread: duplicate graphs, size != q^(d+1)");
  }
  if (out.spread > d) {
    throw std::logic_error("polynomial_spread: certified spread exceeds degree");
  }
  return out;
}

/// Number of k-sets meeting at least `threshold` members of gprime, by full
/// enumeration of C(n,k).
inline BigInt heavy_intersectors(const Family& gprime, std::int64_t threshold,
                                 std::uint64_t budget = kDefaultEnumBudget) {
  BigInt count = 0;
  for_each_kset(
      gprime.params(),
      [&](const KSet& a) {
        std::int64_t hits = 0;
        for (const auto& b : gprime.members())
          if (a.intersects(b)) ++hits;
        if (hits >= threshold) ++count;
      },
      budget);
  return count;
}

}  // namespace kneserlab
