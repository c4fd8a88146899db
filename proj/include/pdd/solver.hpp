#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdd/instance.hpp"
#include "pdd/viability.hpp"

namespace pdd {

/// A saved set with its diversity and per-taxon viability certificate.
struct Solution {
  std::vector<std::string> saved;  // sorted by name
  Weight pd_value = 0;
  std::vector<ViabilityCheck> certificate;
};

struct SolveOutcome {
  bool yes = false;
  std::optional<Solution> witness;
  std::uint64_t explored = 0;  // candidate sets evaluated
  std::chrono::nanoseconds elapsed{0};
};

struct SolveOptions {
  /// Skip prefixes whose subadditive completion bound falls below D.
  bool prune = true;
  /// Worker threads; 1 runs the serial reference enumeration.
  int jobs = 1;
};

/// Restricts to the largest viable set M, enumerates all sets of exactly
/// min(k, |M|) of its taxa in lexicographic order, and returns the least one
/// with pd >= D. Verdict and witness do not depend on `jobs` or `prune`.
SolveOutcome solve_exact(const Instance& inst, const SolveOptions& options = {});

/// Size guard of the brute-force oracle: at most kOracleMaxTaxa taxa and at
/// most kOracleMaxSubsets candidate sets of size <= k.
inline constexpr std::size_t kOracleMaxTaxa = 63;
inline constexpr std::uint64_t kOracleMaxSubsets = std::uint64_t{1} << 25;

/// Number of sets of at most k taxa, saturating at kOracleMaxSubsets + 1.
std::uint64_t oracle_workload(const Instance& inst);

/// Unpruned reference: tests every set of at most k taxa with the rational
/// viability predicates. Witness is the lexicographically least passing set.
/// Throws std::invalid_argument when the size guard is exceeded.
SolveOutcome brute_force_oracle(const Instance& inst);

/// Max-PD greedy without dependencies: repeatedly adds the taxon of largest
/// marginal gain, ties to the smaller name. Requires 0 <= k <= |X|.
TaxonSet greedy_max_pd(const PhyloTree& tree, Weight k);

/// pd of greedy_max_pd(tree, k); bounds pd(S) for every |S| <= k.
Weight pd_upper_bound(const PhyloTree& tree, Weight k);

/// Builds a Solution (pd and certificate recomputed) for a saved set.
Solution make_solution(const Instance& inst, const Membership& saved);

}  // namespace pdd
