#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pdd/common.hpp"
#include "pdd/rational.hpp"

namespace pdd {

/// A prey -> predator dependency, optionally weighted by gamma in (0,1].
struct WebEdge {
  std::string prey;
  std::string predator;
  std::optional<Rational> gamma;

  friend bool operator==(const WebEdge&, const WebEdge&) = default;
};

/// Acyclic food web over a sorted taxon set. Adjacency lists are sorted by
/// taxon index. Immutable after construction.
class FoodWeb {
 public:
  /// Checks the taxa (unique tokens) and edges (known endpoints, no duplicates,
  /// acyclic, gamma on all or no edges and inside (0,1]); throws InvalidInstance.
  static FoodWeb from_edges(std::vector<std::string> taxa, const std::vector<WebEdge>& edges);

  /// Web on the given taxa with no edges.
  static FoodWeb edgeless(std::vector<std::string> taxa);

  std::size_t size() const { return taxa_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const std::vector<std::string>& taxa() const { return taxa_; }
  const std::string& name(TaxonIndex x) const { return taxa_[x]; }

  std::optional<TaxonIndex> find(std::string_view name) const;
  /// Throws std::invalid_argument naming the taxon when unknown.
  TaxonIndex index(std::string_view name) const;

  std::span<const TaxonIndex> prey(TaxonIndex x) const { return prey_[x]; }
  std::span<const TaxonIndex> predators(TaxonIndex x) const { return predators_[x]; }
  /// Gamma of each prey edge, parallel to prey(x). Empty unless has_gamma().
  std::span<const Rational> prey_gamma(TaxonIndex x) const;

  bool has_gamma() const { return has_gamma_; }
  bool is_source(TaxonIndex x) const { return prey_[x].empty(); }
  bool has_edge(TaxonIndex prey, TaxonIndex predator) const;
  std::size_t max_in_degree() const;

  /// Edges sorted by (prey, predator) name.
  std::vector<WebEdge> edges() const;

  friend bool operator==(const FoodWeb& a, const FoodWeb& b) {
    return a.taxa_ == b.taxa_ && a.edges() == b.edges();
  }

 private:
  std::vector<std::string> taxa_;
  std::vector<std::vector<TaxonIndex>> prey_;
  std::vector<std::vector<TaxonIndex>> predators_;
  std::vector<std::vector<Rational>> gamma_;
  std::size_t edge_count_ = 0;
  bool has_gamma_ = false;
};

std::vector<std::string> web_violations(const std::vector<std::string>& taxa, const std::vector<WebEdge>& edges);

/// Taxa with a directed path to x, x included.
std::vector<TaxonIndex> reach_up(const FoodWeb& web, TaxonIndex x);
TaxonSet reach_up(const FoodWeb& web, std::string_view x);

/// Taxa reachable from x, x included.
std::vector<TaxonIndex> reach_down(const FoodWeb& web, TaxonIndex x);
TaxonSet reach_down(const FoodWeb& web, std::string_view x);

/// True iff no taxon has both prey and predators.
bool is_directed_bipartite(const FoodWeb& web);

/// True iff the underlying undirected graph is 2-colourable. When it is and
/// `side` is given, fills it with a colouring (0/1) that puts the smallest
/// index of every component on side 0.
bool is_bipartite(const FoodWeb& web, std::vector<char>* side = nullptr);

/// Unique topological order of the web with `modulator` removed, which must
/// leave an acyclic tournament. Throws std::invalid_argument otherwise.
std::vector<std::string> topological_order_clique(const FoodWeb& web, const TaxonSet& modulator);

}  // namespace pdd
