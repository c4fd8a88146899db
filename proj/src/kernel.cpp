#include "pdd/kernel.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "pdd/web_ops.hpp"

namespace pdd {

namespace {

Membership modulator_mask(const std::vector<std::string>& taxa, const TaxonSet& modulator) {
  Membership mask(taxa.size(), 0);
  for (const auto& z : modulator) {
    auto it = std::lower_bound(taxa.begin(), taxa.end(), z);
    if (it == taxa.end() || *it != z) throw std::invalid_argument("modulator taxon " + z + " is not in the instance");
    mask[static_cast<std::size_t>(it - taxa.begin())] = 1;
  }
  return mask;
}

Instance trivial_instance(bool yes) {
  auto tree = PhyloTree::star(std::string(kFreshRootName), {{std::string(kTrivialTaxon), 1}});
  auto web = FoodWeb::edgeless({std::string(kTrivialTaxon)});
  return Instance(std::move(tree), std::move(web), 0, yes ? 0 : 1, ViabilityMode::alpha(Rational(1)));
}

template <class Web>
KernelResult run_rules(const PhyloTree& tree, const Web& web, Weight k, Weight D, const TaxonSet& modulator,
                       bool rule1, bool rule2) {
  if (tree.taxa() != web.taxa()) throw std::invalid_argument("tree leaves and food-web taxa differ");
  const std::size_t n = web.size();
  const auto zmask = modulator_mask(web.taxa(), modulator);

  KernelTrace trace;
  trace.modulator = modulator;
  trace.original_size = n;

  Membership alive(n, 1);
  auto order = clique_order(web, alive, zmask);
  trace.tau.reserve(order.size());
  for (auto v : order) trace.tau.push_back(web.name(v));

  Membership removed1(n, 0), removed2(n, 0);
  std::size_t removed1_count = 0;
  if (rule1 && k >= 0 && static_cast<std::size_t>(k) < order.size()) {
    const TaxonIndex z = order[static_cast<std::size_t>(k)];
    trace.rr1_pivot = web.name(z);
    for (auto v : reach_down(web, z)) {
      removed1[v] = 1;
      alive[v] = 0;
      trace.removed_by_rr1.insert(web.name(v));
    }
    removed1_count = trace.removed_by_rr1.size();
    order = clique_order(web, alive, zmask);
  }

  Weight z_alive = 0;
  for (std::size_t v = 0; v < n; ++v) z_alive += (zmask[v] && alive[v]) ? 1 : 0;
  const Weight position = k - z_alive;
  Weight new_k = k, new_D = D;
  if (rule2 && position >= 1 && static_cast<std::size_t>(position) <= order.size()) {
    const TaxonIndex x = order[static_cast<std::size_t>(position - 1)];
    trace.rr2_pivot = web.name(x);
    std::vector<TaxonIndex> closure = reach_up(web, x);
    for (auto v : closure) {
      // Rule 1 leaves an upward-closed set, so the closure is still alive.
      assert(alive[v]);
      removed2[v] = 1;
      alive[v] = 0;
      trace.removed_by_rr2.insert(web.name(v));
    }
    trace.k_delta = static_cast<Weight>(closure.size());
    trace.D_delta = pd(tree, closure);
    assert(trace.k_delta <= k);
    new_k = k - trace.k_delta;
    new_D = std::max<Weight>(0, D - trace.D_delta);
  }

  const std::size_t survivors = n - removed1_count - trace.removed_by_rr2.size();
  if (survivors == 0) {
    trace.trivial = true;
    trace.kernel_size = 1;
    return {trivial_instance(new_D <= 0), std::move(trace)};
  }

  PhyloTree out_tree = removed1_count > 0 ? contract_all(tree, removed1) : tree;
  if (!trace.removed_by_rr2.empty()) out_tree = contract_some(out_tree, trace.removed_by_rr2);

  std::vector<std::string> names;
  names.reserve(survivors);
  for (std::size_t v = 0; v < n; ++v) {
    if (alive[v]) names.push_back(web.name(static_cast<TaxonIndex>(v)));
  }
  auto out_web = FoodWeb::from_edges(std::move(names), edges_within(web, alive));
  trace.kernel_size = survivors;
  return {Instance(std::move(out_tree), std::move(out_web), new_k, new_D, ViabilityMode::alpha(Rational(1))),
          std::move(trace)};
}

void require_one_viability(const Instance& inst) {
  if (!inst.mode().is_one()) {
    throw std::invalid_argument("the distance-to-clique kernel needs mode alpha 1, got " + inst.mode().to_string());
  }
}

}  // namespace

KernelResult kernelize(const Instance& inst, const TaxonSet& modulator) {
  require_one_viability(inst);
  return run_rules(inst.tree(), inst.web(), inst.k(), inst.D(), modulator, true, true);
}

KernelResult kernelize(const PhyloTree& tree, const DenseWeb& web, Weight k, Weight D, const TaxonSet& modulator) {
  if (k < 0 || D < 0) throw std::invalid_argument("k and D must be non-negative");
  return run_rules(tree, web, k, D, modulator, true, true);
}

std::optional<KernelResult> apply_rr1(const Instance& inst, const TaxonSet& modulator) {
  require_one_viability(inst);
  auto result = run_rules(inst.tree(), inst.web(), inst.k(), inst.D(), modulator, true, false);
  if (!result.trace.rr1_pivot) return std::nullopt;
  return result;
}

std::optional<KernelResult> apply_rr2(const Instance& inst, const TaxonSet& modulator) {
  require_one_viability(inst);
  auto result = run_rules(inst.tree(), inst.web(), inst.k(), inst.D(), modulator, false, true);
  if (!result.trace.rr2_pivot) return std::nullopt;
  return result;
}

namespace {

using Pair = std::pair<TaxonIndex, TaxonIndex>;

std::vector<Pair> non_adjacent_pairs(const FoodWeb& web) {
  std::vector<Pair> out;
  for (TaxonIndex u = 0; u < web.size(); ++u) {
    for (TaxonIndex v = u + 1; v < web.size(); ++v) {
      if (!web.has_edge(u, v) && !web.has_edge(v, u)) out.emplace_back(u, v);
    }
  }
  return out;
}

// Minimum vertex cover by branching on an uncovered pair.
void branch_cover(const std::vector<Pair>& pairs, Membership& chosen, std::size_t size, Membership& best,
                  std::size_t& best_size) {
  if (size >= best_size) return;
  auto open = std::find_if(pairs.begin(), pairs.end(), [&](const Pair& p) { return !chosen[p.first] && !chosen[p.second]; });
  if (open == pairs.end()) {
    best = chosen;
    best_size = size;
    return;
  }
  for (TaxonIndex v : {open->first, open->second}) {
    chosen[v] = 1;
    branch_cover(pairs, chosen, size + 1, best, best_size);
    chosen[v] = 0;
  }
}

}  // namespace

TaxonSet find_clique_modulator(const FoodWeb& web) {
  const auto pairs = non_adjacent_pairs(web);
  Membership cover(web.size(), 0);
  if (web.size() <= kExactModulatorMaxTaxa) {
    Membership chosen(web.size(), 0);
    std::size_t best_size = web.size() + 1;
    branch_cover(pairs, chosen, 0, cover, best_size);
  } else {
    for (const auto& [u, v] : pairs) {
      if (!cover[u] && !cover[v]) cover[u] = cover[v] = 1;
    }
  }
  TaxonSet out;
  for (TaxonIndex v = 0; v < web.size(); ++v) {
    if (cover[v]) out.insert(web.name(v));
  }
  clique_order(web, Membership(web.size(), 1), cover);  // throws if the cover is wrong
  return out;
}

std::string format_trace(const KernelTrace& trace) {
  auto join = [](const auto& names) {
    std::string s;
    for (const auto& n : names) s += (s.empty() ? "" : " ") + n;
    return s.empty() ? std::string("-") : s;
  };
  std::ostringstream out;
  out << "modulator: " << join(trace.modulator) << "\n";
  out << "taxa: " << trace.original_size << " -> " << trace.kernel_size << (trace.trivial ? " (trivial)" : "") << "\n";
  out << "rule 1 pivot: " << trace.rr1_pivot.value_or("none") << "\n";
  out << "rule 1 removed: " << join(trace.removed_by_rr1) << "\n";
  out << "rule 2 pivot: " << trace.rr2_pivot.value_or("none") << "\n";
  out << "rule 2 removed: " << join(trace.removed_by_rr2) << "\n";
  out << "k reduced by: " << trace.k_delta << "\n";
  out << "D reduced by: " << trace.D_delta << "\n";
  out << "size bound 2|Z|: " << 2 * trace.modulator.size()
      << (trace.both_pivots() ? "" : " (not guaranteed: a pivot is missing)") << "\n";
  return out.str();
}

}  // namespace pdd
