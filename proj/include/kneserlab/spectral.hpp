#pragma once

#include <Eigen/Dense>

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include "kneserlab/bounds.hpp"
#include "kneserlab/family.hpp"
#include "kneserlab/lex.hpp"
#include "kneserlab/numeric.hpp"

namespace kneserlab {

/// Dense adjacency of KG(n,k) as per-vertex neighborhood bitsets, for small
/// vertex counts only. Vertices are the k-sets in lexicographic order.
struct KneserGraph {
  Params params{1, 1};
  std::vector<KSet> vertices;
  std::vector<std::vector<std::uint64_t>> adj;  // row bitsets over vertex ids
  BigInt reg_degree;                            // C(n-k,k)

  std::int64_t order() const { return static_cast<std::int64_t>(vertices.size()); }

  bool adjacent(std::size_t u, std::size_t v) const {
    return (adj[u][v >> 6] >> (v & 63)) & 1u;
  }
};

inline KneserGraph build_kneser_graph(const Params& p, std::uint64_t max_vertices = 2048) {
  p.validate();
  if (binom(p.n, p.k) > max_vertices) {
    throw ResourceError("build_kneser_graph: C(n,k) exceeds vertex budget " +
                        std::to_string(max_vertices));
  }
  KneserGraph g;
  g.params = p;
  g.vertices = enumerate_all(p, max_vertices);
  const std::size_t n = g.vertices.size();
  const std::size_t words = (n + 63) / 64;
  g.adj.assign(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!g.vertices[u].intersects(g.vertices[v])) {
        g.adj[u][v >> 6] |= std::uint64_t{1} << (v & 63);
        g.adj[v][u >> 6] |= std::uint64_t{1} << (u & 63);
      }
    }
  }
  g.reg_degree = binom(p.n - p.k, p.k);
  return g;
}

/// All eigenvalues of the adjacency matrix, ascending (dense symmetric
/// solver). The independent route against the closed-form lambda.
inline std::vector<double> spectrum(const KneserGraph& g) {
  const auto n = static_cast<Eigen::Index>(g.order());
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index u = 0; u < n; ++u)
    for (Eigen::Index v = 0; v < n; ++v)
      if (g.adjacent(u, v)) a(u, v) = 1.0;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  std::vector<double> out(n);
  for (Eigen::Index i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
  return out;
}

/// Second largest absolute eigenvalue read off the computed spectrum: drop
/// one copy of the principal eigenvalue (= regularity degree), take the max
/// absolute value of the rest, and round to the nearest integer (Kneser
/// spectra are integral).
inline BigInt lambda_from_spectrum(const KneserGraph& g) {
  const std::vector<double> eig = spectrum(g);
  const double principal = static_cast<double>(g.reg_degree.convert_to<long long>());
  bool dropped = false;
  double best = 0.0;
  for (double v : eig) {
    if (!dropped && std::abs(v - principal) < 1e-6) {
      dropped = true;
      continue;
    }
    best = std::max(best, std::abs(v));
  }
  if (!dropped) throw std::logic_error("lambda_from_spectrum: principal eigenvalue missing");
  const double rounded = std::round(best);
  if (std::abs(best - rounded) > 1e-6) {
    throw std::logic_error("lambda_from_spectrum: non-integral eigenvalue");
  }
  return BigInt(static_cast<long long>(rounded));
}

/// Ordered count of edges between vertex subsets (pairs (u,v) with u in B,
/// v in C, uv an edge); B = C double-counts each internal edge, which is the
/// convention the mixing inequality uses.
inline BigInt ordered_edges_between(const KneserGraph& g, const std::vector<std::int64_t>& b,
                                    const std::vector<std::int64_t>& c) {
  const std::size_t words = g.adj.empty() ? 0 : g.adj[0].size();
  std::vector<std::uint64_t> cmask(words, 0);
  for (auto v : c) cmask[v >> 6] |= std::uint64_t{1} << (v & 63);
  BigInt e = 0;
  for (auto u : b) {
    std::int64_t row = 0;
    for (std::size_t w = 0; w < words; ++w) row += std::popcount(g.adj[u][w] & cmask[w]);
    e += row;
  }
  return e;
}

/// |e(B,C) - bc D N| <= lambda sqrt(bc) N with b=|B|/N, c=|C|/N, checked
/// exactly: both sides are squared, which clears the square root because
/// the right side is nonnegative.
inline BoundReport mixing_check(const KneserGraph& g, const std::vector<std::int64_t>& b,
                                const std::vector<std::int64_t>& c) {
  const BigInt n = g.order();
  if (n == 0) throw DomainError("mixing_check: empty graph");
  const BigInt e = ordered_edges_between(g, b, c);
  const BigInt bs = static_cast<std::int64_t>(b.size());
  const BigInt cs = static_cast<std::int64_t>(c.size());
  const BigInt lam = kneser_lambda(g.params);

  const Rational deviation = Rational(e) - Rational(bs * cs * g.reg_degree, n);
  const Rational lhs_sq = Rational(lam * lam * bs * cs);  // (lambda sqrt(bc) N)^2
  const Rational rhs_sq = deviation * deviation;

  BoundReport r;
  r.name = "mixing";
  r.params = g.params;
  r.extra = "|B|=" + bs.str() + ";|C|=" + cs.str();
  r.lhs = lhs_sq;
  r.rhs = rhs_sq;
  r.assertable = true;
  r.note = "both sides squared for exact comparison";
  return r;
}

/// Mixing check on the two shadow sides of a split family, inside
/// KG(n-2, k-1).
inline BoundReport mixing_check(const SplitFamily& s, std::uint64_t max_vertices = 2048) {
  const Params sp = s.side1.params();
  const KneserGraph g = build_kneser_graph(sp, max_vertices);
  auto ids = [&](const Family& side) {
    std::vector<std::int64_t> out;
    out.reserve(side.members().size());
    for (const auto& m : side.members()) {
      out.push_back(lex_rank(m, sp).convert_to<std::int64_t>());
    }
    return out;
  };
  return mixing_check(g, ids(s.side1), ids(s.side2));
}

}  // namespace kneserlab
