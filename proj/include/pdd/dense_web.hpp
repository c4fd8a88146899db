#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pdd/common.hpp"
#include "pdd/food_web.hpp"

namespace pdd {

/// Food web stored as two bit matrices (prey -> predator rows and their
/// transpose). Meant for webs that are close to complete, where adjacency
/// lists would not fit in memory: a 10^5-taxon tournament has ~5e9 edges but
/// only needs 2 * 1.25 GB here.
///
/// Every taxon carries a topological rank fixed at construction, and edges
/// must point from lower to higher rank, so the web is acyclic by construction.
class DenseWeb {
 public:
  /// `taxa` must be sorted and unique; `rank` is a permutation of 0..n-1.
  DenseWeb(std::vector<std::string> taxa, std::vector<std::uint32_t> rank);

  std::size_t size() const { return taxa_.size(); }
  std::size_t words_per_row() const { return words_; }
  const std::vector<std::string>& taxa() const { return taxa_; }
  const std::string& name(TaxonIndex x) const { return taxa_[x]; }
  std::uint32_t rank(TaxonIndex x) const { return rank_[x]; }

  void add_edge(TaxonIndex prey, TaxonIndex predator);

  /// Adds u -> v for every pair of members u < v (by index). Ranks of the
  /// members must increase with their index.
  void add_transitive_tournament(const Membership& members);

  bool has_edge(TaxonIndex prey, TaxonIndex predator) const {
    return (out_[prey * words_ + predator / 64] >> (predator % 64)) & 1U;
  }

  /// Bit row of the predators of x.
  std::span<const std::uint64_t> predator_row(TaxonIndex x) const { return {out_.data() + x * words_, words_}; }
  /// Bit row of the prey of x.
  std::span<const std::uint64_t> prey_row(TaxonIndex x) const { return {in_.data() + x * words_, words_}; }

  std::size_t edge_count() const;

  /// Sparse copy. Only sensible for small webs.
  FoodWeb to_food_web() const;

 private:
  std::vector<std::string> taxa_;
  std::vector<std::uint32_t> rank_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

}  // namespace pdd
