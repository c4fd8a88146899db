#pragma once

#include <vector>

#include "pdd/dense_web.hpp"
#include "pdd/food_web.hpp"

namespace pdd {

// Graph primitives the kernelization needs, for both web representations.

/// Topological order of the alive, non-modulator taxa, which must form an
/// acyclic tournament. Throws std::invalid_argument("not a clique after
/// removing Z") or ("... cyclic") otherwise.
std::vector<TaxonIndex> clique_order(const FoodWeb& web, const Membership& alive, const Membership& modulator);
std::vector<TaxonIndex> clique_order(const DenseWeb& web, const Membership& alive, const Membership& modulator);

std::vector<TaxonIndex> reach_up(const DenseWeb& web, TaxonIndex x);
std::vector<TaxonIndex> reach_down(const DenseWeb& web, TaxonIndex x);

/// Edges with both endpoints in `keep`.
std::vector<WebEdge> edges_within(const FoodWeb& web, const Membership& keep);
std::vector<WebEdge> edges_within(const DenseWeb& web, const Membership& keep);

}  // namespace pdd
