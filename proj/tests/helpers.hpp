#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "pdd/instance.hpp"
#include "pdd/random_instance.hpp"
#include "pdd/solver.hpp"

namespace testing {

inline pdd::Instance make_instance(std::vector<pdd::TreeEdge> tree, std::vector<pdd::WebEdge> web, pdd::Weight k,
                                   pdd::Weight D, pdd::ViabilityMode mode) {
  return pdd::Instance::from_spec({std::move(tree), std::move(web), k, D, mode});
}

inline pdd::Instance star_instance(const std::vector<std::pair<std::string, pdd::Weight>>& leaves,
                                   std::vector<pdd::WebEdge> web, pdd::Weight k, pdd::Weight D,
                                   pdd::ViabilityMode mode) {
  std::vector<pdd::TreeEdge> tree;
  for (const auto& [name, w] : leaves) tree.push_back({"r", name, w});
  return make_instance(std::move(tree), std::move(web), k, D, mode);
}

inline pdd::WebEdge edge(std::string prey, std::string predator) { return {std::move(prey), std::move(predator), {}}; }

inline pdd::ViabilityMode one() { return pdd::ViabilityMode::alpha(pdd::Rational(1)); }

// Random instance with a random DAG density. D is drawn from the upper half
// of the reachable range so that both verdicts are common.
inline pdd::Instance random_small(pdd::Rng& rng, std::size_t max_taxa, pdd::ViabilityMode mode, bool star,
                                  std::uint64_t seed) {
  pdd::RandomParams p;
  p.taxa = rng.uniform(1, max_taxa);
  p.edges = p.taxa < 2 ? 0 : rng.uniform(0, p.taxa * (p.taxa - 1) / 2);
  p.star = star;
  p.gamma = mode.kind() == pdd::ViabilityMode::Kind::Gamma;
  p.mode = mode;
  auto spec = pdd::random_instance(p, seed).to_spec();
  auto tree = pdd::PhyloTree::from_edges(spec.tree);
  const auto cap = static_cast<std::uint64_t>(pdd::pd(tree, pdd::greedy_max_pd(tree, spec.k)));
  spec.D = static_cast<pdd::Weight>(rng.uniform(cap / 2, cap));
  return pdd::Instance::from_spec(spec);
}

// Star instance with a sparse web and k <= max_k, for reductions whose output
// grows with k and the largest prey count.
inline pdd::Instance random_star(pdd::Rng& rng, std::size_t max_taxa, pdd::ViabilityMode mode, pdd::Weight max_k,
                                 std::uint64_t seed) {
  pdd::RandomParams p;
  p.taxa = rng.uniform(1, max_taxa);
  p.edges = p.taxa < 2 ? 0 : rng.uniform(0, std::min(p.taxa * (p.taxa - 1) / 2, p.taxa + 2));
  p.mode = mode;
  p.k = static_cast<pdd::Weight>(rng.uniform(1, std::min<std::size_t>(p.taxa, static_cast<std::size_t>(max_k))));
  auto spec = pdd::random_instance(p, seed).to_spec();
  auto tree = pdd::PhyloTree::from_edges(spec.tree);
  const auto cap = static_cast<std::uint64_t>(pdd::pd(tree, pdd::greedy_max_pd(tree, spec.k)));
  spec.D = static_cast<pdd::Weight>(rng.uniform(cap / 2, cap));
  return pdd::Instance::from_spec(spec);
}

// Drops every web edge whose prey also eats something, which leaves a
// directed bipartite web.
inline pdd::Instance directed_bipartite_part(const pdd::Instance& inst) {
  auto spec = inst.to_spec();
  std::set<std::string> predators;
  for (const auto& e : spec.web) predators.insert(e.predator);
  std::erase_if(spec.web, [&](const pdd::WebEdge& e) { return predators.count(e.prey) > 0; });
  return pdd::Instance::from_spec(spec);
}

// Phylogeny over n taxa; the food web is a transitive tournament on X \ Z
// plus random edges touching Z, all oriented along one random order.
struct ModulatedInstance {
  pdd::Instance inst;
  pdd::TaxonSet z;
};

inline ModulatedInstance modulated_instance(pdd::Rng& rng, std::size_t n, std::size_t z_count, bool star,
                                            std::uint64_t seed) {
  pdd::RandomParams p;
  p.taxa = n;
  p.star = star;
  auto base = pdd::random_instance(p, seed);
  auto spec = base.to_spec();
  const auto& taxa = base.taxa();

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<char> in_z(n, 0);
  pdd::TaxonSet z;
  for (std::size_t i = 0; i < std::min(z_count, n); ++i) {
    in_z[order[i]] = 1;
    z.insert(taxa[order[i]]);
  }
  rng.shuffle(order);
  spec.web.clear();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto u = order[i], v = order[j];
      if ((!in_z[u] && !in_z[v]) || rng.coin()) spec.web.push_back(edge(taxa[u], taxa[v]));
    }
  }
  spec.mode = one();
  spec.k = static_cast<pdd::Weight>(rng.uniform(0, n));
  const auto cap = static_cast<std::uint64_t>(pdd::pd(base.tree(), pdd::greedy_max_pd(base.tree(), spec.k)));
  spec.D = static_cast<pdd::Weight>(rng.uniform(cap / 3, cap));
  return {pdd::Instance::from_spec(spec), std::move(z)};
}

}  // namespace testing
