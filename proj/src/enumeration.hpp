#pragma once

// Internal machinery shared by the serial and OpenMP subset enumerations.

#include <cstdint>
#include <optional>
#include <vector>

#include "pdd/instance.hpp"

namespace pdd::detail {

/// Read-only view of an instance prepared for exact-size enumeration.
/// Viability is reduced to integer form: taxon x is satisfied when the weights
/// of its saved prey edges sum to at least threshold[x].
///
/// Candidates are the taxa of the largest viable set. Viable sets are closed
/// under union, and any viable set inside it extends one taxon at a time (add
/// the topologically first missing candidate), so sets of exactly
/// min(k, #candidates) candidates suffice.
class Evaluator {
 public:
  Evaluator(const Instance& inst, bool prune);

  const PhyloTree& tree() const { return tree_; }
  std::size_t taxa() const { return n_; }
  std::size_t pool() const { return candidates_.size(); }
  TaxonIndex candidate(std::size_t pos) const { return candidates_[pos]; }
  std::size_t subset_size() const { return kk_; }
  Weight target() const { return D_; }

  bool viable(const std::vector<char>& in, const std::vector<TaxonIndex>& chosen) const;

  /// Whether a prefix with diversity `prefix_pd` that still needs `missing`
  /// candidates from positions >= start cannot reach the target. Bounds the
  /// completion by subadditivity of pd over singletons.
  bool hopeless(Weight prefix_pd, std::size_t start, std::size_t missing) const;

 private:
  const PhyloTree& tree_;
  std::size_t n_;
  Weight D_;
  std::vector<std::vector<std::pair<TaxonIndex, Weight>>> prey_;
  std::vector<Weight> threshold_;
  std::vector<TaxonIndex> candidates_;
  std::size_t kk_ = 0;
  bool prune_ = false;
  std::vector<Weight> tail_;  // tail_[j * (kk_ + 1) + r]: top-r singleton pd among positions >= j
};

/// Mutable enumeration state owned by one worker.
class Cursor {
 public:
  explicit Cursor(const Evaluator& ev);

  void push(TaxonIndex x);
  void pop();

  Weight pd() const { return pd_; }
  const std::vector<TaxonIndex>& chosen() const { return chosen_; }
  const std::vector<char>& members() const { return in_; }
  std::uint64_t explored = 0;

 private:
  const PhyloTree& tree_;
  std::vector<std::uint32_t> cover_;  // leaves of the current set below each node
  std::vector<char> in_;
  std::vector<TaxonIndex> chosen_;
  Weight pd_ = 0;
};

/// Depth-first lexicographic search for the first passing completion of the
/// cursor's current prefix using candidate positions >= start. `stop()` is polled at every
/// node. The cursor is restored on return.
template <class Stop>
std::optional<std::vector<TaxonIndex>> search(const Evaluator& ev, Cursor& cur, std::size_t start, Stop&& stop) {
  const std::size_t have = cur.chosen().size();
  if (have == ev.subset_size()) {
    ++cur.explored;
    if (cur.pd() >= ev.target() && ev.viable(cur.members(), cur.chosen())) return cur.chosen();
    return std::nullopt;
  }
  const std::size_t missing = ev.subset_size() - have;
  if (stop() || ev.hopeless(cur.pd(), start, missing)) return std::nullopt;
  for (std::size_t pos = start; pos + missing <= ev.pool(); ++pos) {
    cur.push(ev.candidate(pos));
    auto found = search(ev, cur, pos + 1, stop);
    cur.pop();
    if (found) return found;
  }
  return std::nullopt;
}

/// OpenMP enumeration partitioned by the first chosen candidate. Returns the same
/// witness as the serial search.
std::optional<std::vector<TaxonIndex>> search_parallel(const Evaluator& ev, int jobs, std::uint64_t& explored);

}  // namespace pdd::detail
