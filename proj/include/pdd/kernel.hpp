#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pdd/dense_web.hpp"
#include "pdd/instance.hpp"

namespace pdd {

struct KernelTrace {
  TaxonSet modulator;
  /// Topological order of X \ Z before any rule fires.
  std::vector<std::string> tau;
  std::optional<std::string> rr1_pivot;  // tau position k+1
  std::optional<std::string> rr2_pivot;  // tau position k-|Z| after rule 1
  TaxonSet removed_by_rr1;
  TaxonSet removed_by_rr2;
  Weight k_delta = 0;  // |X_{<=x}|
  Weight D_delta = 0;  // pd of X_{<=x}; D is clamped at 0 after subtracting it
  std::size_t original_size = 0;
  std::size_t kernel_size = 0;
  /// Every taxon was removed; the output is the canonical one-taxon instance.
  bool trivial = false;

  bool both_pivots() const { return rr1_pivot && rr2_pivot; }
};

struct KernelResult {
  Instance instance;
  KernelTrace trace;
};

/// Name of the single taxon of the instance returned when the rules remove
/// every taxon. Its D is 0 for a yes-remainder and 1 otherwise, with k = 0.
inline constexpr std::string_view kTrivialTaxon = "__trivial";

/// Distance-to-clique kernel for 1-viability: rule 1 then rule 2, each at most
/// once, with tau recomputed in between. Requires mode alpha 1 and that
/// web - Z is an acyclic tournament. Output has at most 2|Z| taxa whenever both
/// pivots exist.
KernelResult kernelize(const Instance& inst, const TaxonSet& modulator);

/// Same rules on a bit-matrix web; the tree's taxa must equal the web's.
KernelResult kernelize(const PhyloTree& tree, const DenseWeb& web, Weight k, Weight D, const TaxonSet& modulator);

/// Rule 1 alone: drops X_{>=z} for the taxon z at tau position k+1 and takes
/// the all-contraction of the tree. nullopt when there is no pivot.
std::optional<KernelResult> apply_rr1(const Instance& inst, const TaxonSet& modulator);

/// Rule 2 alone: drops X_{<=x} for the taxon x at tau position k-|Z|, takes the
/// some-contraction, lowers k by |X_{<=x}| and D by its pd. nullopt when there
/// is no pivot.
std::optional<KernelResult> apply_rr2(const Instance& inst, const TaxonSet& modulator);

/// A set Z whose removal leaves a tournament: a minimum vertex cover of the
/// non-adjacent pairs by branching when |X| <= 20, a matching-based
/// 2-approximation otherwise.
TaxonSet find_clique_modulator(const FoodWeb& web);

inline constexpr std::size_t kExactModulatorMaxTaxa = 20;

std::string format_trace(const KernelTrace& trace);

}  // namespace pdd
