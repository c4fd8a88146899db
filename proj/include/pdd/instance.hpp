#pragma once

#include <string>
#include <vector>

#include "pdd/food_web.hpp"
#include "pdd/phylo_tree.hpp"
#include "pdd/rational.hpp"

namespace pdd {

/// Which viability predicate an instance asks for.
class ViabilityMode {
 public:
  enum class Kind { Epsilon, Alpha, Gamma };

  static ViabilityMode epsilon() { return ViabilityMode(Kind::Epsilon, Rational(1)); }
  /// Throws std::invalid_argument unless 0 < alpha <= 1.
  static ViabilityMode alpha(Rational alpha);
  static ViabilityMode gamma() { return ViabilityMode(Kind::Gamma, Rational(1)); }

  Kind kind() const { return kind_; }
  /// Only meaningful for Kind::Alpha.
  const Rational& alpha_value() const { return alpha_; }
  bool is_one() const { return kind_ == Kind::Alpha && alpha_ == Rational(1); }

  /// "epsilon", "alpha p/q" or "gamma".
  std::string to_string() const;

  friend bool operator==(const ViabilityMode&, const ViabilityMode&) = default;

 private:
  ViabilityMode(Kind kind, Rational alpha) : kind_(kind), alpha_(alpha) {}
  Kind kind_;
  Rational alpha_;
};

/// Raw content of an instance before any checking: what a file describes.
struct InstanceSpec {
  std::vector<TreeEdge> tree;
  std::vector<WebEdge> web;
  Weight k = 0;
  Weight D = 0;
  ViabilityMode mode = ViabilityMode::epsilon();
};

/// Every invariant violation of the described instance, human readable.
std::vector<std::string> validate_instance(const InstanceSpec& spec);

/// A checked problem instance (tree, food web, k, D, mode).
class Instance {
 public:
  /// Throws InvalidInstance when the tree and web disagree on taxa, k or D is
  /// negative, or gamma mode lacks gamma weights.
  Instance(PhyloTree tree, FoodWeb web, Weight k, Weight D, ViabilityMode mode);

  /// Validates the description first; throws InvalidInstance with all violations.
  static Instance from_spec(const InstanceSpec& spec);
  InstanceSpec to_spec() const;

  const PhyloTree& tree() const { return tree_; }
  const FoodWeb& web() const { return web_; }
  Weight k() const { return k_; }
  Weight D() const { return D_; }
  const ViabilityMode& mode() const { return mode_; }

  std::size_t taxon_count() const { return web_.size(); }
  const std::vector<std::string>& taxa() const { return web_.taxa(); }

  /// Species loss |X| - k (negative when k > |X|).
  Weight k_bar() const { return static_cast<Weight>(taxon_count()) - k_; }
  /// Acceptable diversity loss pd(X) - D.
  Weight D_bar() const { return tree_.total_weight() - D_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  PhyloTree tree_;
  FoodWeb web_;
  Weight k_;
  Weight D_;
  ViabilityMode mode_;
};

}  // namespace pdd
