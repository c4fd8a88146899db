#include "pdd/phylo_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace pdd {

InvalidInstance::InvalidInstance(std::vector<std::string> violations)
    : std::runtime_error([&] {
        std::string msg = "invalid instance:";
        for (const auto& v : violations) msg += "\n  " + v;
        return msg;
      }()),
      violations_(std::move(violations)) {}

namespace {

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

// Violations of the rooted-tree shape. The out-degree rule for internal
// vertices is optional so that suppress_degree2 can accept unary vertices.
std::vector<std::string> shape_violations(const std::vector<TreeEdge>& edges, bool allow_unary) {
  std::vector<std::string> out;
  if (edges.empty()) {
    out.emplace_back("tree has no edges");
    return out;
  }

  std::map<std::string, std::vector<std::string>> children;
  std::map<std::string, std::vector<std::string>> parents;
  std::set<std::pair<std::string, std::string>> seen;
  for (const auto& e : edges) {
    std::string label = "edge " + e.parent + "->" + e.child;
    if (!valid_token(e.parent) || !valid_token(e.child)) {
      out.push_back(label + ": vertex names must be nonempty tokens without whitespace");
    }
    if (e.weight < 1) {
      out.push_back(label + " has weight " + std::to_string(e.weight) + "; weights are positive integers");
    }
    if (e.parent == e.child) {
      out.push_back(label + " is a self-loop");
      continue;
    }
    if (!seen.emplace(e.parent, e.child).second) {
      out.push_back("duplicate " + label);
      continue;
    }
    children[e.parent].push_back(e.child);
    children[e.child];
    parents[e.child].push_back(e.parent);
    parents[e.parent];
  }

  std::vector<std::string> roots;
  for (const auto& [v, ps] : parents) {
    if (ps.empty()) roots.push_back(v);
    if (ps.size() > 1) {
      out.push_back("vertex " + v + " has in-degree " + std::to_string(ps.size()) + " (expected 1)");
    }
  }
  if (roots.size() != 1) {
    std::string msg = "tree has " + std::to_string(roots.size()) +
                      " vertices of in-degree 0 (expected exactly one root)";
    for (const auto& r : roots) msg += " " + r;
    out.push_back(msg);
    return out;
  }

  std::set<std::string> reached{roots.front()};
  std::vector<std::string> stack{roots.front()};
  while (!stack.empty()) {
    std::string v = std::move(stack.back());
    stack.pop_back();
    for (const auto& c : children[v]) {
      if (reached.insert(c).second) stack.push_back(c);
    }
  }
  for (const auto& [v, cs] : children) {
    if (!reached.count(v)) out.push_back("vertex " + v + " is not reachable from the root");
  }

  if (!allow_unary) {
    for (const auto& [v, cs] : children) {
      if (v != roots.front() && cs.size() == 1) {
        out.push_back("vertex " + v +
                      " has in-degree 1 and out-degree 1 (internal vertices need out-degree >= 2)");
      }
    }
  }
  return out;
}

std::string fresh_name(const PhyloTree& tree) {
  std::string name(kFreshRootName);
  for (int i = 1; tree.find_node(name); ++i) name = std::string(kFreshRootName) + std::to_string(i);
  return name;
}

Membership membership_of(const PhyloTree& tree, const TaxonSet& taxa) {
  Membership m(tree.taxon_count(), 0);
  for (const auto& t : taxa) m[tree.taxon_index(t)] = 1;
  return m;
}

enum class Contraction { Some, All };

PhyloTree contract(const PhyloTree& tree, const Membership& removed, Contraction kind) {
  const std::size_t n = tree.node_count();
  if (removed.size() != tree.taxon_count()) throw std::invalid_argument("membership size mismatch");
  auto count = static_cast<std::size_t>(std::count(removed.begin(), removed.end(), 1));
  if (count == 0) throw std::invalid_argument("contraction set is empty");
  if (count == tree.taxon_count()) throw std::invalid_argument("contraction set covers every taxon");

  // Preorder ids: children always have larger ids than their parent.
  std::vector<std::size_t> leaves(n, 0), hit(n, 0);
  for (NodeId v = static_cast<NodeId>(n); v-- > 0;) {
    if (tree.is_leaf(v)) {
      leaves[v] = 1;
      hit[v] = removed[tree.taxon_of(v)] ? 1 : 0;
    }
    if (v != tree.root()) {
      leaves[tree.parent(v)] += leaves[v];
      hit[tree.parent(v)] += hit[v];
    }
  }
  auto edge_removed = [&](NodeId v) {
    return kind == Contraction::Some ? hit[v] > 0 : hit[v] == leaves[v];
  };

  std::vector<char> keep(n, 0);
  for (NodeId v = static_cast<NodeId>(n); v-- > 0;) {
    if (tree.is_leaf(v)) {
      keep[v] = removed[tree.taxon_of(v)] ? 0 : 1;
    }
    if (keep[v] && v != tree.root() && !edge_removed(v)) keep[tree.parent(v)] = 1;
  }

  std::vector<NodeId> roots;
  for (NodeId v = 0; v < n; ++v) {
    if (keep[v] && (v == tree.root() || edge_removed(v))) roots.push_back(v);
  }
  std::vector<char> is_root(n, 0);
  for (NodeId r : roots) is_root[r] = 1;
  const std::string merged = roots.size() == 1 ? tree.name(roots.front()) : fresh_name(tree);

  std::vector<TreeEdge> edges;
  for (NodeId v = 0; v < n; ++v) {
    if (!keep[v] || is_root[v]) continue;
    NodeId p = tree.parent(v);
    edges.push_back({is_root[p] ? merged : tree.name(p), tree.name(v), tree.weight(v)});
  }
  return suppress_degree2(std::move(edges));
}

}  // namespace

std::vector<std::string> tree_violations(const std::vector<TreeEdge>& edges) {
  return shape_violations(edges, false);
}

PhyloTree PhyloTree::build_unchecked(const std::vector<TreeEdge>& edges) {
  std::map<std::string, std::vector<std::pair<std::string, Weight>>> children;
  std::set<std::string> has_parent;
  for (const auto& e : edges) {
    children[e.parent].emplace_back(e.child, e.weight);
    children[e.child];
    has_parent.insert(e.child);
  }
  std::string root;
  for (const auto& [v, cs] : children) {
    if (!has_parent.count(v)) root = v;
  }
  for (auto& [v, cs] : children) std::sort(cs.begin(), cs.end());

  PhyloTree t;
  const std::size_t n = children.size();
  t.names_.reserve(n);
  t.parent_.reserve(n);
  t.weight_.reserve(n);
  t.children_.reserve(n);

  struct Frame {
    std::string name;
    NodeId parent;
    Weight weight;
  };
  std::vector<Frame> stack{{root, kNoNode, 0}};
  while (!stack.empty()) {
    Frame f = std::move(stack.back());
    stack.pop_back();
    auto id = static_cast<NodeId>(t.names_.size());
    t.names_.push_back(f.name);
    t.parent_.push_back(f.parent);
    t.weight_.push_back(f.weight);
    t.children_.emplace_back();
    if (f.parent != kNoNode) t.children_[f.parent].push_back(id);
    const auto& cs = children[f.name];
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) stack.push_back({it->first, id, it->second});
  }

  for (NodeId v = 0; v < n; ++v) {
    t.node_by_name_.emplace(t.names_[v], v);
    if (t.children_[v].empty()) t.taxa_.push_back(t.names_[v]);
  }
  std::sort(t.taxa_.begin(), t.taxa_.end());
  t.leaf_of_.resize(t.taxa_.size());
  t.taxon_of_.assign(n, std::numeric_limits<TaxonIndex>::max());
  for (TaxonIndex i = 0; i < t.taxa_.size(); ++i) {
    NodeId v = t.node_by_name_.at(t.taxa_[i]);
    t.leaf_of_[i] = v;
    t.taxon_of_[v] = i;
  }
  return t;
}

PhyloTree PhyloTree::from_edges(std::vector<TreeEdge> edges) {
  auto violations = tree_violations(edges);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
  return build_unchecked(edges);
}

PhyloTree PhyloTree::star(std::string root, const std::vector<std::pair<std::string, Weight>>& leaves) {
  std::vector<TreeEdge> edges;
  edges.reserve(leaves.size());
  for (const auto& [name, w] : leaves) edges.push_back({root, name, w});
  return from_edges(std::move(edges));
}

std::optional<TaxonIndex> PhyloTree::find_taxon(std::string_view name) const {
  auto it = std::lower_bound(taxa_.begin(), taxa_.end(), name);
  if (it == taxa_.end() || *it != name) return std::nullopt;
  return static_cast<TaxonIndex>(it - taxa_.begin());
}

std::optional<NodeId> PhyloTree::find_node(std::string_view name) const {
  auto it = node_by_name_.find(std::string(name));
  if (it == node_by_name_.end()) return std::nullopt;
  return it->second;
}

TaxonIndex PhyloTree::taxon_index(std::string_view name) const {
  auto t = find_taxon(name);
  if (!t) throw std::invalid_argument("unknown taxon '" + std::string(name) + "'");
  return *t;
}

std::vector<TreeEdge> PhyloTree::edges() const {
  std::vector<TreeEdge> out;
  out.reserve(node_count());
  for (NodeId v = 1; v < node_count(); ++v) out.push_back({names_[parent_[v]], names_[v], weight_[v]});
  std::sort(out.begin(), out.end());
  return out;
}

bool PhyloTree::is_star() const {
  return std::all_of(children_[root()].begin(), children_[root()].end(),
                     [&](NodeId c) { return is_leaf(c); });
}

Weight PhyloTree::total_weight() const {
  Weight sum = 0;
  for (NodeId v = 1; v < node_count(); ++v) sum = checked_add(sum, weight_[v]);
  return sum;
}

Weight pd(const PhyloTree& tree, std::span<const TaxonIndex> taxa) {
  std::vector<char> seen(tree.node_count(), 0);
  Weight sum = 0;
  for (TaxonIndex t : taxa) {
    if (t >= tree.taxon_count()) throw std::invalid_argument("taxon index out of range");
    for (NodeId v = tree.leaf(t); v != tree.root() && !seen[v]; v = tree.parent(v)) {
      seen[v] = 1;
      sum = checked_add(sum, tree.weight(v));
    }
  }
  return sum;
}

Weight pd(const PhyloTree& tree, const TaxonSet& taxa) {
  std::vector<TaxonIndex> idx;
  idx.reserve(taxa.size());
  for (const auto& t : taxa) idx.push_back(tree.taxon_index(t));
  return pd(tree, idx);
}

std::vector<TreeEdge> path_edges(const PhyloTree& tree, const TaxonSet& taxa) {
  std::vector<char> seen(tree.node_count(), 0);
  std::vector<TreeEdge> out;
  for (const auto& name : taxa) {
    for (NodeId v = tree.leaf(tree.taxon_index(name)); v != tree.root() && !seen[v]; v = tree.parent(v)) {
      seen[v] = 1;
      out.push_back({tree.name(tree.parent(v)), tree.name(v), tree.weight(v)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TaxonSet offspring(const PhyloTree& tree, std::string_view parent, std::string_view child) {
  auto c = tree.find_node(child);
  auto p = tree.find_node(parent);
  if (!c || !p || tree.parent(*c) != *p) {
    throw std::invalid_argument("unknown edge " + std::string(parent) + "->" + std::string(child));
  }
  TaxonSet out;
  std::vector<NodeId> stack{*c};
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    if (tree.is_leaf(v)) out.insert(tree.name(v));
    for (NodeId w : tree.children(v)) stack.push_back(w);
  }
  return out;
}

PhyloTree suppress_degree2(std::vector<TreeEdge> edges) {
  auto violations = shape_violations(edges, true);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
  PhyloTree raw = PhyloTree::build_unchecked(edges);

  auto unary = [&](NodeId v) { return v != raw.root() && raw.children(v).size() == 1; };
  std::vector<TreeEdge> out;
  for (NodeId v = 1; v < raw.node_count(); ++v) {
    if (unary(v)) continue;
    Weight w = raw.weight(v);
    NodeId p = raw.parent(v);
    while (unary(p)) {
      w = checked_add(w, raw.weight(p));
      p = raw.parent(p);
    }
    out.push_back({raw.name(p), raw.name(v), w});
  }
  return PhyloTree::from_edges(std::move(out));
}

PhyloTree contract_some(const PhyloTree& tree, const Membership& removed) {
  return contract(tree, removed, Contraction::Some);
}

PhyloTree contract_some(const PhyloTree& tree, const TaxonSet& removed) {
  return contract(tree, membership_of(tree, removed), Contraction::Some);
}

PhyloTree contract_all(const PhyloTree& tree, const Membership& removed) {
  return contract(tree, removed, Contraction::All);
}

PhyloTree contract_all(const PhyloTree& tree, const TaxonSet& removed) {
  return contract(tree, membership_of(tree, removed), Contraction::All);
}

}  // namespace pdd
