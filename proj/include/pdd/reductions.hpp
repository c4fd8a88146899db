#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "pdd/instance.hpp"
#include "pdd/io.hpp"

namespace pdd {

/// Hands out names that avoid a set of taken names. A base name already taken
/// gets a "~n" suffix with the smallest free n.
class NameFactory {
 public:
  explicit NameFactory(std::set<std::string, std::less<>> taken) : taken_(std::move(taken)) {}
  std::string fresh(std::string_view base);

 private:
  std::set<std::string, std::less<>> taken_;
};

struct Parameters {
  Weight k = 0;
  Weight D = 0;
  Weight k_bar = 0;
  Weight D_bar = 0;

  static Parameters of(const Instance& inst) { return {inst.k(), inst.D(), inst.k_bar(), inst.D_bar()}; }
  friend bool operator==(const Parameters&, const Parameters&) = default;
};

struct ReductionReceipt {
  std::string construction;
  TaxonSet added_taxa;
  std::optional<Parameters> before;  // absent when the input is a graph
  Parameters after;
  std::optional<TaxonSet> vertex_cover;
  /// Conditions under which the output is not guaranteed equivalent.
  std::vector<std::string> caveats;
};

struct Reduction {
  Instance instance;
  ReductionReceipt receipt;
};

/// 1-viability on a star to alpha-viability: each x gets
/// floor((1/alpha - 1)|prey(x)|) fresh source prey of weight 1. k and D are
/// unchanged. Equivalent when the web is directed bipartite.
Reduction one_to_alpha_variant_a(const Instance& inst, const Rational& alpha);

/// As variant a, but padding prey come from two shared pools A_1, A_2 of
/// floor(maxprey/alpha) taxa, each guarded by ceil(k/alpha) predators in B_1,
/// B_2. X is split along a bipartition of the web, or (X, {}) if none exists.
Reduction one_to_alpha_variant_b(const Instance& inst, const Rational& alpha);

/// Exact number of taxa variant b adds: 2(floor(maxprey/alpha) + ceil(k/alpha)).
Weight variant_b_added(Weight max_prey, Weight k, const Rational& alpha);

/// epsilon-viability on a star to alpha-viability for 0 < alpha < 1: each
/// non-source x gets ceil(|prey(x)| alpha/(1-alpha)) - 1 fresh source prey of
/// weight 2m, m the largest leaf weight. k' = k + A and D' = D + 2mA for A
/// added taxa, which keeps D-bar unchanged.
Reduction eps_to_alpha(const Instance& inst, const Rational& alpha);

/// Clique to 1-viability, parameter D: subdivision vertices are predators of
/// both endpoints; weights 1 on V and 2 on subdivisions; k' = C(k,2) + k,
/// D' = k^2.
Reduction clique_gadget_d(const CliqueInput& g);

/// Clique to 1-viability, parameter D-bar: subdivision vertices are prey of
/// both endpoints; weights 2 on V and 1 on subdivisions;
/// k' = |V| + |E| - C(k,2) - k, D' = 2|V| + |E| - C(k,2) - 2k.
Reduction clique_gadget_dbar(const CliqueInput& g);

/// OR-composition of t clique instances on one vertex set with one k >= 2.
/// l = ceil(log2 t) bit pairs 0_j, 1_j with k^2 - 1 private prey each; an edge
/// of instance b becomes a taxon preying on its endpoints and on the bit
/// vertices spelling b. k' = k^2 (l+1) - C(k,2), D' = k^2 (l+1).
Reduction cross_compose(const std::vector<CliqueInput>& inputs);

/// Ceil(log2 t) for t >= 1.
std::size_t ceil_log2(std::size_t t);

/// Whether the brute-force oracle gives both instances the same verdict.
/// Throws std::invalid_argument when either exceeds the oracle's guard.
bool verify_equivalent(const Instance& a, const Instance& b);

/// Whether g has a clique of size g.k, by exhaustive search.
bool has_clique(const CliqueInput& g);

std::string format_receipt(const ReductionReceipt& receipt);

}  // namespace pdd
