#pragma once

// Reference computations for the tests. They work on raw edge lists and
// follow the definitions directly, sharing no code with the library beyond
// the plain data types.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "pdd/instance.hpp"
#include "pdd/io.hpp"

namespace oracle {

using Names = std::set<std::string>;

// Leaves below `node` following child pointers in the edge list.
inline Names leaves_below(const std::vector<pdd::TreeEdge>& edges, const std::string& node) {
  Names out;
  bool internal = false;
  for (const auto& e : edges) {
    if (e.parent != node) continue;
    internal = true;
    auto sub = leaves_below(edges, e.child);
    out.insert(sub.begin(), sub.end());
  }
  if (!internal) out.insert(node);
  return out;
}

// Sum of edge weights whose offspring meets `saved`.
inline pdd::Weight pd(const std::vector<pdd::TreeEdge>& edges, const Names& saved) {
  pdd::Weight total = 0;
  for (const auto& e : edges) {
    auto below = leaves_below(edges, e.child);
    if (std::any_of(below.begin(), below.end(), [&](const std::string& t) { return saved.count(t); })) {
      total += e.weight;
    }
  }
  return total;
}

inline Names taxa_of(const std::vector<pdd::TreeEdge>& edges) {
  Names parents, out;
  for (const auto& e : edges) parents.insert(e.parent);
  for (const auto& e : edges) {
    if (!parents.count(e.child)) out.insert(e.child);
  }
  return out;
}

// Direct reading of the viability definitions on the edge list.
inline bool viable(const pdd::InstanceSpec& spec, const Names& saved) {
  using pdd::Rational;
  for (const auto& x : saved) {
    std::size_t prey = 0, hit = 0;
    Rational gamma_sum(0);
    for (const auto& e : spec.web) {
      if (e.predator != x) continue;
      ++prey;
      if (saved.count(e.prey)) {
        ++hit;
        if (e.gamma) gamma_sum += *e.gamma;
      }
    }
    if (prey == 0) continue;
    switch (spec.mode.kind()) {
      case pdd::ViabilityMode::Kind::Epsilon:
        if (hit == 0) return false;
        break;
      case pdd::ViabilityMode::Kind::Alpha:
        if (Rational(static_cast<std::int64_t>(hit)) <
            spec.mode.alpha_value() * Rational(static_cast<std::int64_t>(prey))) {
          return false;
        }
        break;
      case pdd::ViabilityMode::Kind::Gamma:
        if (gamma_sum < Rational(1)) return false;
        break;
    }
  }
  return true;
}

// Every subset of size <= k, checked with the definitions above.
inline bool solvable(const pdd::InstanceSpec& spec) {
  const auto taxa_set = taxa_of(spec.tree);
  const std::vector<std::string> taxa(taxa_set.begin(), taxa_set.end());
  const std::size_t n = taxa.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<pdd::Weight>(__builtin_popcountll(mask)) > spec.k) continue;
    Names saved;
    for (std::size_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) saved.insert(taxa[i]);
    }
    if (pd(spec.tree, saved) >= spec.D && viable(spec, saved)) return true;
  }
  return false;
}

// Largest pd over sets of exactly k taxa.
inline pdd::Weight max_pd(const std::vector<pdd::TreeEdge>& edges, std::size_t k) {
  const auto taxa_set = taxa_of(edges);
  const std::vector<std::string> taxa(taxa_set.begin(), taxa_set.end());
  pdd::Weight best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << taxa.size()); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != k) continue;
    Names saved;
    for (std::size_t i = 0; i < taxa.size(); ++i) {
      if ((mask >> i) & 1U) saved.insert(taxa[i]);
    }
    best = std::max(best, pd(edges, saved));
  }
  return best;
}

// Prey-closure test: every web edge into a saved taxon starts at a saved taxon,
// iterated over ancestors.
inline bool one_viable(const std::vector<pdd::WebEdge>& web, const Names& saved) {
  for (const auto& e : web) {
    if (saved.count(e.predator) && !saved.count(e.prey)) return false;
  }
  return true;
}

// All vertices from which `x` is reachable, `x` included.
inline Names ancestors(const std::vector<pdd::WebEdge>& web, const std::string& x) {
  Names out{x};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& e : web) {
      if (out.count(e.predator) && out.insert(e.prey).second) grew = true;
    }
  }
  return out;
}

inline Names descendants(const std::vector<pdd::WebEdge>& web, const std::string& x) {
  Names out{x};
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& e : web) {
      if (out.count(e.prey) && out.insert(e.predator).second) grew = true;
    }
  }
  return out;
}

// k-clique by bitmask enumeration.
inline bool has_clique(const pdd::CliqueInput& g) {
  const std::vector<std::string> v(g.vertices.begin(), g.vertices.end());
  const std::size_t n = v.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcountll(mask)) != g.k) continue;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) {
      for (std::size_t j = i + 1; j < n && ok; ++j) {
        if (((mask >> i) & 1U) && ((mask >> j) & 1U)) ok = g.edges.count({v[i], v[j]}) > 0;
      }
    }
    if (ok) return true;
  }
  return false;
}

inline bool is_vertex_cover(const std::vector<pdd::WebEdge>& web, const std::set<std::string, std::less<>>& cover) {
  return std::all_of(web.begin(), web.end(),
                     [&](const pdd::WebEdge& e) { return cover.count(e.prey) || cover.count(e.predator); });
}

// Whether there are sets L, R with every edge from L to R (directed bipartite).
inline bool directed_bipartite(const std::vector<pdd::WebEdge>& web) {
  Names preys, predators;
  for (const auto& e : web) {
    preys.insert(e.prey);
    predators.insert(e.predator);
  }
  return std::none_of(preys.begin(), preys.end(), [&](const std::string& x) { return predators.count(x); });
}

// Undirected 2-colourability by exhaustive colouring of small vertex sets.
inline bool bipartite(const Names& taxa, const std::vector<pdd::WebEdge>& web) {
  const std::vector<std::string> v(taxa.begin(), taxa.end());
  std::map<std::string, std::size_t> idx;
  for (std::size_t i = 0; i < v.size(); ++i) idx[v[i]] = i;
  for (std::uint64_t colour = 0; colour < (std::uint64_t{1} << v.size()); ++colour) {
    if (std::all_of(web.begin(), web.end(), [&](const pdd::WebEdge& e) {
          return ((colour >> idx[e.prey]) & 1U) != ((colour >> idx[e.predator]) & 1U);
        })) {
      return true;
    }
  }
  return false;
}

}  // namespace oracle
