#include "pdd/instance.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdd {

ViabilityMode ViabilityMode::alpha(Rational alpha) {
  if (alpha <= Rational(0) || alpha > Rational(1)) {
    throw std::invalid_argument("alpha " + alpha.to_string() + " is outside (0,1]");
  }
  return ViabilityMode(Kind::Alpha, alpha);
}

std::string ViabilityMode::to_string() const {
  switch (kind_) {
    case Kind::Epsilon:
      return "epsilon";
    case Kind::Alpha:
      return "alpha " + std::to_string(alpha_.num()) + "/" + std::to_string(alpha_.den());
    case Kind::Gamma:
      return "gamma";
  }
  return {};
}

namespace {

std::vector<std::string> leaves_of(const std::vector<TreeEdge>& edges) {
  std::set<std::string> parents, children;
  for (const auto& e : edges) {
    parents.insert(e.parent);
    children.insert(e.child);
  }
  std::vector<std::string> out;
  std::set_difference(children.begin(), children.end(), parents.begin(), parents.end(), std::back_inserter(out));
  return out;
}

std::vector<std::string> parameter_violations(Weight k, Weight D, const ViabilityMode& mode, bool has_gamma) {
  std::vector<std::string> out;
  if (k < 0) out.push_back("k = " + std::to_string(k) + " is negative");
  if (D < 0) out.push_back("D = " + std::to_string(D) + " is negative");
  if (mode.kind() == ViabilityMode::Kind::Gamma && !has_gamma) {
    out.emplace_back("mode gamma requires gamma weights on the food-web edges");
  }
  return out;
}

}  // namespace

std::vector<std::string> validate_instance(const InstanceSpec& spec) {
  auto out = tree_violations(spec.tree);
  auto web = web_violations(leaves_of(spec.tree), spec.web);
  out.insert(out.end(), web.begin(), web.end());
  bool has_gamma = std::all_of(spec.web.begin(), spec.web.end(), [](const WebEdge& e) { return e.gamma.has_value(); });
  auto params = parameter_violations(spec.k, spec.D, spec.mode, has_gamma);
  out.insert(out.end(), params.begin(), params.end());
  return out;
}

Instance::Instance(PhyloTree tree, FoodWeb web, Weight k, Weight D, ViabilityMode mode)
    : tree_(std::move(tree)), web_(std::move(web)), k_(k), D_(D), mode_(mode) {
  auto violations = parameter_violations(k_, D_, mode_, web_.has_gamma() || web_.edge_count() == 0);
  if (tree_.taxa() != web_.taxa()) violations.emplace_back("tree leaves and food-web taxa differ");
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
}

Instance Instance::from_spec(const InstanceSpec& spec) {
  auto violations = validate_instance(spec);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));
  auto tree = PhyloTree::from_edges(spec.tree);
  auto web = FoodWeb::from_edges(tree.taxa(), spec.web);
  return Instance(std::move(tree), std::move(web), spec.k, spec.D, spec.mode);
}

InstanceSpec Instance::to_spec() const { return {tree_.edges(), web_.edges(), k_, D_, mode_}; }

}  // namespace pdd
