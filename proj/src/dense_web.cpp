#include "pdd/dense_web.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pdd {

DenseWeb::DenseWeb(std::vector<std::string> taxa, std::vector<std::uint32_t> rank)
    : taxa_(std::move(taxa)), rank_(std::move(rank)) {
  if (!std::is_sorted(taxa_.begin(), taxa_.end()) ||
      std::adjacent_find(taxa_.begin(), taxa_.end()) != taxa_.end()) {
    throw std::invalid_argument("dense web taxa must be sorted and unique");
  }
  if (rank_.size() != taxa_.size()) throw std::invalid_argument("dense web needs one rank per taxon");
  std::vector<char> used(rank_.size(), 0);
  for (auto r : rank_) {
    if (r >= rank_.size() || used[r]) throw std::invalid_argument("dense web ranks must be a permutation");
    used[r] = 1;
  }
  words_ = (taxa_.size() + 63) / 64;
  out_.assign(taxa_.size() * words_, 0);
  in_.assign(taxa_.size() * words_, 0);
}

void DenseWeb::add_edge(TaxonIndex prey, TaxonIndex predator) {
  if (prey >= size() || predator >= size()) throw std::invalid_argument("dense web edge out of range");
  if (rank_[prey] >= rank_[predator]) {
    throw std::invalid_argument("dense web edge " + taxa_[prey] + "->" + taxa_[predator] +
                                " goes against the topological rank");
  }
  out_[prey * words_ + predator / 64] |= std::uint64_t{1} << (predator % 64);
  in_[predator * words_ + prey / 64] |= std::uint64_t{1} << (prey % 64);
}

void DenseWeb::add_transitive_tournament(const Membership& members) {
  if (members.size() != size()) throw std::invalid_argument("membership size mismatch");
  std::vector<std::uint64_t> mask(words_, 0);
  std::int64_t last_rank = -1;
  for (TaxonIndex v = 0; v < size(); ++v) {
    if (!members[v]) continue;
    if (static_cast<std::int64_t>(rank_[v]) <= last_rank) {
      throw std::invalid_argument("tournament members must have ranks increasing with their index");
    }
    last_rank = rank_[v];
    mask[v / 64] |= std::uint64_t{1} << (v % 64);
  }

  // For member v: predators are the members above v, prey the members below.
  for (TaxonIndex v = 0; v < size(); ++v) {
    if (!members[v]) continue;
    std::uint64_t* out = out_.data() + v * words_;
    std::uint64_t* in = in_.data() + v * words_;
    const std::size_t w = v / 64;
    const std::uint64_t below = (std::uint64_t{1} << (v % 64)) - 1;
    for (std::size_t i = 0; i < w; ++i) in[i] |= mask[i];
    in[w] |= mask[w] & below;
    out[w] |= mask[w] & ~below & ~(std::uint64_t{1} << (v % 64));
    for (std::size_t i = w + 1; i < words_; ++i) out[i] |= mask[i];
  }
}

std::size_t DenseWeb::edge_count() const {
  std::size_t count = 0;
  for (auto word : out_) count += static_cast<std::size_t>(std::popcount(word));
  return count;
}

FoodWeb DenseWeb::to_food_web() const {
  std::vector<WebEdge> edges;
  for (TaxonIndex p = 0; p < size(); ++p) {
    for (std::size_t i = 0; i < words_; ++i) {
      for (std::uint64_t word = out_[p * words_ + i]; word != 0; word &= word - 1) {
        auto q = static_cast<TaxonIndex>(i * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        edges.push_back({taxa_[p], taxa_[q], std::nullopt});
      }
    }
  }
  return FoodWeb::from_edges(taxa_, edges);
}

}  // namespace pdd
