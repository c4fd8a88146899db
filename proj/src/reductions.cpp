#include "pdd/reductions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <sstream>
#include <stdexcept>

#include "pdd/solver.hpp"

namespace pdd {

std::string NameFactory::fresh(std::string_view base) {
  std::string name(base);
  for (std::size_t n = 1; taken_.count(name) != 0; ++n) name = std::string(base) + "~" + std::to_string(n);
  taken_.insert(name);
  return name;
}

std::size_t ceil_log2(std::size_t t) {
  if (t == 0) throw std::invalid_argument("ceil_log2 needs t >= 1");
  std::size_t l = 0;
  while ((std::size_t{1} << l) < t) ++l;
  return l;
}

namespace {

Weight floor_div(Weight a, Weight b) { return a / b; }
Weight ceil_div(Weight a, Weight b) { return a / b + (a % b != 0 ? 1 : 0); }

void require_star(const Instance& inst) {
  if (!inst.tree().is_star()) throw std::invalid_argument("the construction needs a star tree");
}

void require_enough_taxa(const Instance& inst) {
  if (static_cast<Weight>(inst.taxon_count()) < inst.k()) {
    throw std::invalid_argument("the construction needs |X| >= k, got |X| = " + std::to_string(inst.taxon_count()) +
                                " and k = " + std::to_string(inst.k()));
  }
}

std::set<std::string, std::less<>> node_names(const PhyloTree& tree) {
  std::set<std::string, std::less<>> out;
  for (NodeId v = 0; v < tree.node_count(); ++v) out.insert(tree.name(v));
  return out;
}

// Starting point for the star constructions: the input without gamma labels.
InstanceSpec base_spec(const Instance& inst) {
  auto spec = inst.to_spec();
  for (auto& e : spec.web) e.gamma.reset();
  return spec;
}

Weight count_of(std::size_t n) { return static_cast<Weight>(n); }

Weight choose2(Weight k) { return k * (k - 1) / 2; }

void validate_graph(const CliqueInput& g) {
  for (const auto& [u, v] : g.edges) {
    if (!(u < v)) throw std::invalid_argument("graph edge " + u + " " + v + " is not stored as an ordered pair");
    if (!g.vertices.count(u) || !g.vertices.count(v)) {
      throw std::invalid_argument("graph edge " + u + " " + v + " has an endpoint outside the vertex set");
    }
  }
  if (g.vertices.empty()) throw std::invalid_argument("the gadget needs at least one vertex");
}

std::set<std::string, std::less<>> graph_names(const std::set<std::string>& vertices) {
  return {vertices.begin(), vertices.end()};
}

}  // namespace

Reduction one_to_alpha_variant_a(const Instance& inst, const Rational& alpha) {
  if (!inst.mode().is_one()) throw std::invalid_argument("input must use mode alpha 1");
  const auto mode = ViabilityMode::alpha(alpha);
  require_star(inst);
  require_enough_taxa(inst);

  const auto& web = inst.web();
  const auto& root = inst.tree().name(inst.tree().root());
  auto spec = base_spec(inst);
  NameFactory names(node_names(inst.tree()));
  ReductionReceipt receipt{"one-to-alpha-a", {}, Parameters::of(inst), {}, std::nullopt, {}};
  for (TaxonIndex x = 0; x < web.size(); ++x) {
    const Weight deg = count_of(web.prey(x).size());
    const Weight a_x = floor_div(checked_mul(alpha.den() - alpha.num(), deg), alpha.num());
    for (Weight i = 0; i < a_x; ++i) {
      auto y = names.fresh("__pad." + web.name(x) + "." + std::to_string(i));
      spec.tree.push_back({root, y, 1});
      spec.web.push_back({y, web.name(x), std::nullopt});
      receipt.added_taxa.insert(y);
    }
  }
  spec.mode = mode;
  if (!is_directed_bipartite(web)) {
    receipt.caveats.emplace_back("the input web is not directed bipartite; variant a is only equivalent on directed "
                                 "bipartite webs");
  }
  Instance out = Instance::from_spec(spec);
  receipt.after = Parameters::of(out);
  return {std::move(out), std::move(receipt)};
}

Weight variant_b_added(Weight max_prey, Weight k, const Rational& alpha) {
  return 2 * (floor_div(checked_mul(max_prey, alpha.den()), alpha.num()) +
              ceil_div(checked_mul(k, alpha.den()), alpha.num()));
}

Reduction one_to_alpha_variant_b(const Instance& inst, const Rational& alpha) {
  if (!inst.mode().is_one()) throw std::invalid_argument("input must use mode alpha 1");
  const auto mode = ViabilityMode::alpha(alpha);
  require_star(inst);
  require_enough_taxa(inst);

  const auto& web = inst.web();
  const auto& root = inst.tree().name(inst.tree().root());
  const Weight pool = floor_div(checked_mul(count_of(web.max_in_degree()), alpha.den()), alpha.num());
  const Weight guards = ceil_div(checked_mul(inst.k(), alpha.den()), alpha.num());

  auto spec = base_spec(inst);
  NameFactory names(node_names(inst.tree()));
  ReductionReceipt receipt{"one-to-alpha-b", {}, Parameters::of(inst), {}, std::nullopt, {}};
  auto add_taxon = [&](const std::string& base) {
    auto y = names.fresh(base);
    spec.tree.push_back({root, y, 1});
    receipt.added_taxa.insert(y);
    return y;
  };
  std::vector<std::string> A[2], B[2];
  for (int i = 0; i < 2; ++i) {
    const auto tag = std::to_string(i + 1);
    for (Weight j = 0; j < pool; ++j) A[i].push_back(add_taxon("__A" + tag + "." + std::to_string(j)));
    for (Weight j = 0; j < guards; ++j) B[i].push_back(add_taxon("__B" + tag + "." + std::to_string(j)));
    for (const auto& b : B[i]) {
      for (const auto& a : A[i]) spec.web.push_back({b, a, std::nullopt});
    }
  }

  std::vector<char> side;
  if (!is_bipartite(web, &side)) side.assign(web.size(), 0);
  for (TaxonIndex x = 0; x < web.size(); ++x) {
    const Weight deg = count_of(web.prey(x).size());
    const Weight a_x = floor_div(checked_mul(alpha.den() - alpha.num(), deg), alpha.num());
    const auto& padding = A[side[x] ? 1 : 0];
    for (Weight j = 0; j < a_x; ++j) spec.web.push_back({padding[static_cast<std::size_t>(j)], web.name(x), std::nullopt});
  }
  spec.mode = mode;
  Instance out = Instance::from_spec(spec);
  receipt.after = Parameters::of(out);
  return {std::move(out), std::move(receipt)};
}

Reduction eps_to_alpha(const Instance& inst, const Rational& alpha) {
  if (inst.mode().kind() != ViabilityMode::Kind::Epsilon) throw std::invalid_argument("input must use mode epsilon");
  if (!(Rational(0) < alpha && alpha < Rational(1))) {
    throw std::invalid_argument("alpha must lie strictly between 0 and 1, got " + alpha.to_string());
  }
  require_star(inst);

  const auto& tree = inst.tree();
  const auto& web = inst.web();
  Weight m = 0;
  for (TaxonIndex x = 0; x < tree.taxon_count(); ++x) m = std::max(m, tree.weight(tree.leaf(x)));
  const Weight heavy = checked_mul(2, m);

  auto spec = base_spec(inst);
  NameFactory names(node_names(tree));
  ReductionReceipt receipt{"eps-to-alpha", {}, Parameters::of(inst), {}, std::nullopt, {}};
  Weight added = 0;
  for (TaxonIndex x = 0; x < web.size(); ++x) {
    if (web.is_source(x)) continue;
    const Weight deg = count_of(web.prey(x).size());
    const Weight a_x = ceil_div(checked_mul(deg, alpha.num()), alpha.den() - alpha.num()) - 1;
    for (Weight i = 0; i < a_x; ++i) {
      auto y = names.fresh("__eps." + web.name(x) + "." + std::to_string(i));
      spec.tree.push_back({tree.name(tree.root()), y, heavy});
      spec.web.push_back({y, web.name(x), std::nullopt});
      receipt.added_taxa.insert(y);
    }
    added += a_x;
  }
  spec.k = checked_add(inst.k(), added);
  spec.D = checked_add(inst.D(), checked_mul(heavy, added));
  spec.mode = ViabilityMode::alpha(alpha);
  Instance out = Instance::from_spec(spec);
  receipt.after = Parameters::of(out);
  return {std::move(out), std::move(receipt)};
}

Reduction clique_gadget_d(const CliqueInput& g) {
  validate_graph(g);
  NameFactory names(graph_names(g.vertices));
  const auto root = names.fresh("__root");
  const Weight k = count_of(g.k);
  ReductionReceipt receipt{"clique-d", {}, std::nullopt, {}, std::nullopt, {}};

  InstanceSpec spec;
  for (const auto& v : g.vertices) spec.tree.push_back({root, v, 1});
  for (const auto& [u, v] : g.edges) {
    auto e = names.fresh("__e." + u + "." + v);
    spec.tree.push_back({root, e, 2});
    spec.web.push_back({u, e, std::nullopt});
    spec.web.push_back({v, e, std::nullopt});
    receipt.added_taxa.insert(e);
  }
  spec.k = choose2(k) + k;
  spec.D = k * k;
  spec.mode = ViabilityMode::alpha(Rational(1));
  Instance out = Instance::from_spec(spec);
  receipt.after = Parameters::of(out);
  return {std::move(out), std::move(receipt)};
}

Reduction clique_gadget_dbar(const CliqueInput& g) {
  validate_graph(g);
  const Weight k = count_of(g.k);
  const Weight nv = count_of(g.vertices.size()), ne = count_of(g.edges.size());
  const Weight k_out = nv + ne - choose2(k) - k;
  if (k_out < 0) {
    throw std::invalid_argument("k = " + std::to_string(k) + " is too large for a graph with " + std::to_string(nv) +
                                " vertices and " + std::to_string(ne) + " edges (k' would be negative)");
  }
  NameFactory names(graph_names(g.vertices));
  const auto root = names.fresh("__root");
  ReductionReceipt receipt{"clique-dbar", {}, std::nullopt, {}, std::nullopt, {}};

  InstanceSpec spec;
  for (const auto& v : g.vertices) spec.tree.push_back({root, v, 2});
  for (const auto& [u, v] : g.edges) {
    auto e = names.fresh("__e." + u + "." + v);
    spec.tree.push_back({root, e, 1});
    spec.web.push_back({e, u, std::nullopt});
    spec.web.push_back({e, v, std::nullopt});
    receipt.added_taxa.insert(e);
  }
  spec.k = k_out;
  spec.D = 2 * nv + ne - choose2(k) - 2 * k;
  spec.mode = ViabilityMode::alpha(Rational(1));
  Instance out = Instance::from_spec(spec);
  receipt.after = Parameters::of(out);
  return {std::move(out), std::move(receipt)};
}

Reduction cross_compose(const std::vector<CliqueInput>& inputs) {
  if (inputs.empty()) throw std::invalid_argument("cross composition needs at least one instance");
  const auto& first = inputs.front();
  for (const auto& g : inputs) {
    validate_graph(g);
    if (g.vertices != first.vertices) throw std::invalid_argument("all composed graphs must share one vertex set");
    if (g.k != first.k) throw std::invalid_argument("all composed graphs must share one k");
  }
  if (first.k < 2) throw std::invalid_argument("cross composition needs k >= 2 so that D' > k'");

  const std::size_t t = inputs.size();
  const std::size_t l = ceil_log2(t);
  const Weight k = count_of(first.k);
  const Weight block = k * k;

  NameFactory names(graph_names(first.vertices));
  const auto root = names.fresh("__root");
  ReductionReceipt receipt{"cross-composition", {}, std::nullopt, {}, TaxonSet{}, {}};
  InstanceSpec spec;
  auto add_taxon = [&](const std::string& base, Weight weight) {
    auto y = names.fresh(base);
    spec.tree.push_back({root, y, weight});
    receipt.added_taxa.insert(y);
    return y;
  };

  for (const auto& v : first.vertices) {
    spec.tree.push_back({root, v, 1});
    receipt.vertex_cover->insert(v);
  }
  // bit[j][value] is the vertex value_j.
  std::vector<std::array<std::string, 2>> bit(l);
  for (std::size_t j = 0; j < l; ++j) {
    for (int value = 0; value < 2; ++value) {
      const auto base = "__bit" + std::to_string(value) + "_" + std::to_string(j);
      bit[j][value] = add_taxon(base, 1);
      receipt.vertex_cover->insert(bit[j][value]);
      for (Weight i = 0; i + 1 < block; ++i) {
        spec.web.push_back({add_taxon(base + "." + std::to_string(i), 1), bit[j][value], std::nullopt});
      }
    }
  }
  for (std::size_t b = 0; b < t; ++b) {
    for (const auto& [u, v] : inputs[b].edges) {
      auto e = add_taxon("__e" + std::to_string(b) + "." + u + "." + v, 2);
      spec.web.push_back({u, e, std::nullopt});
      spec.web.push_back({v, e, std::nullopt});
      for (std::size_t j = 0; j < l; ++j) spec.web.push_back({bit[j][(b >> j) & 1U], e, std::nullopt});
    }
  }
  const Weight lw = count_of(l);
  spec.k = block * (lw + 1) - choose2(k);
  spec.D = block * (lw + 1);
  spec.mode = ViabilityMode::alpha(Rational(1));
  Instance out = Instance::from_spec(spec);
  receipt.after = Parameters::of(out);
  return {std::move(out), std::move(receipt)};
}

bool verify_equivalent(const Instance& a, const Instance& b) {
  return brute_force_oracle(a).yes == brute_force_oracle(b).yes;
}

namespace {

bool extend_clique(const std::vector<std::vector<char>>& adj, std::vector<std::size_t>& clique, std::size_t next,
                   std::size_t target) {
  if (clique.size() == target) return true;
  for (std::size_t v = next; v < adj.size(); ++v) {
    if (std::all_of(clique.begin(), clique.end(), [&](std::size_t u) { return adj[u][v]; })) {
      clique.push_back(v);
      if (extend_clique(adj, clique, v + 1, target)) return true;
      clique.pop_back();
    }
  }
  return false;
}

}  // namespace

bool has_clique(const CliqueInput& g) {
  std::vector<std::string> names(g.vertices.begin(), g.vertices.end());
  std::map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < names.size(); ++i) index[names[i]] = i;
  std::vector<std::vector<char>> adj(names.size(), std::vector<char>(names.size(), 0));
  for (const auto& [u, v] : g.edges) adj[index.at(u)][index.at(v)] = adj[index.at(v)][index.at(u)] = 1;
  std::vector<std::size_t> clique;
  return extend_clique(adj, clique, 0, g.k);
}

std::string format_receipt(const ReductionReceipt& receipt) {
  std::ostringstream out;
  auto params = [&](const char* label, const Parameters& p) {
    out << label << ": k=" << p.k << " D=" << p.D << " k_bar=" << p.k_bar << " D_bar=" << p.D_bar << "\n";
  };
  out << "construction: " << receipt.construction << "\n";
  out << "added taxa: " << receipt.added_taxa.size() << "\n";
  if (receipt.before) params("before", *receipt.before);
  params("after", receipt.after);
  if (receipt.vertex_cover) {
    out << "vertex cover (" << receipt.vertex_cover->size() << "):";
    for (const auto& v : *receipt.vertex_cover) out << ' ' << v;
    out << "\n";
  }
  for (const auto& c : receipt.caveats) out << "caveat: " << c << "\n";
  return out.str();
}

}  // namespace pdd
