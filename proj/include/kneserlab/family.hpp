#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kneserlab/kset.hpp"
#include "kneserlab/types.hpp"

namespace kneserlab {

/// Deduplicated k-uniform set family over [1..n], members kept in
/// lexicographic order. Immutable after construction.
class Family {
 public:
  /// Default: empty family over the trivial ground set, a placeholder for
  /// result structs that are always overwritten before use.
  Family() : params_{1, 1} {}

  explicit Family(Params p) : params_(p) { p.validate(); }

  static Family of(Params p, std::vector<KSet> members) {
    Family f(p);
    for (const auto& s : members) require_valid_kset(s, p, "Family");
    std::sort(members.begin(), members.end(), LexLess{});
    members.erase(std::unique(members.begin(), members.end()), members.end());
    f.members_ = std::move(members);
    return f;
  }

  const Params& params() const { return params_; }
  std::int64_t size() const { return static_cast<std::int64_t>(members_.size()); }
  bool empty() const { return members_.empty(); }
  const std::vector<KSet>& members() const { return members_; }
  const KSet& operator[](std::size_t i) const { return members_[i]; }

  bool contains(const KSet& s) const {
    return std::binary_search(members_.begin(), members_.end(), s, LexLess{});
  }

  /// Elements occurring in at least one member, ascending.
  std::vector<int> support() const {
    KSet u;
    for (const auto& m : members_) u = u | m;
    return u.elements();
  }

  bool operator==(const Family&) const = default;

 private:
  Params params_;
  std::vector<KSet> members_;
};

/// Relabels the ground set by a permutation of [1..n] (perm[i-1] is the image
/// of element i). All induced-subgraph statistics are invariant under this.
inline Family relabel(const Family& f, const std::vector<int>& perm) {
  const int n = f.params().n;
  if (static_cast<int>(perm.size()) != n) throw DomainError("relabel: permutation size != n");
  std::vector<bool> seen(n + 1, false);
  for (int v : perm) {
    if (v < 1 || v > n || seen[v]) throw DomainError("relabel: not a permutation of [1..n]");
    seen[v] = true;
  }
  std::vector<KSet> out;
  out.reserve(f.members().size());
  for (const auto& m : f.members()) {
    KSet img;
    for (int e : m.elements()) img.set(perm[e - 1]);
    out.push_back(img);
  }
  return Family::of(f.params(), std::move(out));
}

}  // namespace kneserlab
