#pragma once

#include <string>
#include <vector>

#include "pdd/food_web.hpp"
#include "pdd/instance.hpp"
#include "pdd/rational.hpp"

namespace pdd {

/// One taxon's viability requirement and what the saved set achieves for it.
/// For counting predicates `achieved` is the number of saved prey; for gamma
/// it is the summed gamma of saved prey.
struct ViabilityCheck {
  std::string taxon;
  Rational required;
  Rational achieved;

  bool ok() const { return achieved >= required; }
  friend bool operator==(const ViabilityCheck&, const ViabilityCheck&) = default;
};

struct ViabilityReport {
  bool viable = true;
  std::vector<ViabilityCheck> violators;
};

// All comparisons are exact. Sources pass every predicate.

/// Every saved non-source has at least one saved prey.
ViabilityReport is_eps_viable(const FoodWeb& web, const TaxonSet& saved);
ViabilityReport is_eps_viable(const FoodWeb& web, const Membership& saved);

/// |saved ∩ prey(x)| >= alpha * |prey(x)| for every saved x.
ViabilityReport is_alpha_viable(const FoodWeb& web, const Rational& alpha, const TaxonSet& saved);
ViabilityReport is_alpha_viable(const FoodWeb& web, const Rational& alpha, const Membership& saved);

/// Saved-prey gamma sum >= 1 for every saved non-source. Requires gamma.
ViabilityReport is_gamma_viable(const FoodWeb& web, const TaxonSet& saved);
ViabilityReport is_gamma_viable(const FoodWeb& web, const Membership& saved);

/// 1-viability through ancestor closure: every saved x has all of reach_up(x)
/// saved. Violators report |reach_up(x)| as required and the saved part of it.
ViabilityReport is_one_viable_closure(const FoodWeb& web, const TaxonSet& saved);
ViabilityReport is_one_viable_closure(const FoodWeb& web, const Membership& saved);

/// Smallest 1-viable superset: the union of reach_up over `saved`.
TaxonSet one_viable_closure(const FoodWeb& web, const TaxonSet& saved);

/// Dispatches on the instance mode.
ViabilityReport check_viability(const Instance& inst, const Membership& saved);

/// One check per saved taxon, in name order, under the instance mode.
std::vector<ViabilityCheck> viability_certificate(const Instance& inst, const Membership& saved);

Membership to_membership(const FoodWeb& web, const TaxonSet& taxa);

}  // namespace pdd
