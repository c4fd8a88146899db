#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "pdd/common.hpp"

namespace pdd {

using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = std::numeric_limits<NodeId>::max();

/// A parent -> child tree edge as it appears in files and edge lists.
struct TreeEdge {
  std::string parent;
  std::string child;
  Weight weight = 1;

  friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
  friend auto operator<=>(const TreeEdge&, const TreeEdge&) = default;
};

/// Rooted, edge-weighted phylogenetic X-tree. Leaves are the taxa.
///
/// Node ids are assigned in preorder with children visited in name order, so
/// two trees with the same edge set have identical ids. The edge into a node
/// is identified by that node; weight(v) is the weight of the edge parent(v)->v.
/// Instances are immutable after construction.
class PhyloTree {
 public:
  /// Builds a tree and checks every X-tree invariant; throws InvalidInstance.
  static PhyloTree from_edges(std::vector<TreeEdge> edges);

  /// Star with the given root name and (taxon, weight) leaves.
  static PhyloTree star(std::string root, const std::vector<std::pair<std::string, Weight>>& leaves);

  NodeId root() const { return 0; }
  std::size_t node_count() const { return names_.size(); }
  std::size_t taxon_count() const { return taxa_.size(); }

  const std::string& name(NodeId v) const { return names_[v]; }
  NodeId parent(NodeId v) const { return parent_[v]; }
  Weight weight(NodeId v) const { return weight_[v]; }
  std::span<const NodeId> children(NodeId v) const { return children_[v]; }
  bool is_leaf(NodeId v) const { return children_[v].empty(); }

  /// Taxa in ascending name order; position is the TaxonIndex.
  const std::vector<std::string>& taxa() const { return taxa_; }
  NodeId leaf(TaxonIndex t) const { return leaf_of_[t]; }
  TaxonIndex taxon_of(NodeId leaf) const { return taxon_of_[leaf]; }

  std::optional<TaxonIndex> find_taxon(std::string_view name) const;
  std::optional<NodeId> find_node(std::string_view name) const;
  /// Throws std::invalid_argument naming the taxon when it is not a leaf.
  TaxonIndex taxon_index(std::string_view name) const;

  /// All edges, sorted.
  std::vector<TreeEdge> edges() const;

  /// Every non-root vertex is a leaf.
  bool is_star() const;

  /// Sum over all edge weights, i.e. pd(X).
  Weight total_weight() const;

  friend bool operator==(const PhyloTree& a, const PhyloTree& b) { return a.edges() == b.edges(); }

 private:
  PhyloTree() = default;
  static PhyloTree build_unchecked(const std::vector<TreeEdge>& edges);

  std::vector<std::string> names_;
  std::vector<NodeId> parent_;
  std::vector<Weight> weight_;
  std::vector<std::vector<NodeId>> children_;
  std::vector<std::string> taxa_;
  std::vector<NodeId> leaf_of_;
  std::vector<TaxonIndex> taxon_of_;
  std::unordered_map<std::string, NodeId> node_by_name_;

  friend PhyloTree suppress_degree2(std::vector<TreeEdge> edges);
};

/// Lists every X-tree invariant violated by an edge list. Empty iff valid.
std::vector<std::string> tree_violations(const std::vector<TreeEdge>& edges);

/// Phylogenetic diversity: total weight of the union of root-to-leaf paths.
Weight pd(const PhyloTree& tree, const TaxonSet& taxa);
Weight pd(const PhyloTree& tree, std::span<const TaxonIndex> taxa);

/// The edges on the root paths of the given taxa, sorted.
std::vector<TreeEdge> path_edges(const PhyloTree& tree, const TaxonSet& taxa);

/// Leaves below the edge parent->child.
TaxonSet offspring(const PhyloTree& tree, std::string_view parent, std::string_view child);

/// Takes any rooted weighted tree and replaces every non-root vertex with one
/// parent and one child by a single edge of the summed weight.
PhyloTree suppress_degree2(std::vector<TreeEdge> edges);

/// Removes every edge whose offspring meets `removed`, then re-roots and
/// suppresses. Requires a nonempty proper subset of the taxa.
PhyloTree contract_some(const PhyloTree& tree, const TaxonSet& removed);
PhyloTree contract_some(const PhyloTree& tree, const Membership& removed);

/// Removes every edge whose offspring lies inside `removed`, then cleans up
/// like contract_some.
PhyloTree contract_all(const PhyloTree& tree, const TaxonSet& removed);
PhyloTree contract_all(const PhyloTree& tree, const Membership& removed);

/// Name of the vertex created when contraction leaves several roots.
inline constexpr std::string_view kFreshRootName = "__root";

}  // namespace pdd
