#include "pdd/viability.hpp"

#include <stdexcept>

namespace pdd {

namespace {

enum class Rule { Epsilon, Alpha, Gamma };

void check_size(const FoodWeb& web, const Membership& saved) {
  if (saved.size() != web.size()) throw std::invalid_argument("membership size mismatch");
}

std::vector<ViabilityCheck> checks(const FoodWeb& web, const Membership& saved, Rule rule, const Rational& alpha) {
  check_size(web, saved);
  if (rule == Rule::Alpha && (alpha <= Rational(0) || alpha > Rational(1))) {
    throw std::invalid_argument("alpha " + alpha.to_string() + " is outside (0,1]");
  }
  if (rule == Rule::Gamma && !web.has_gamma() && web.edge_count() > 0) {
    throw std::invalid_argument("gamma viability needs gamma weights on the food web");
  }
  std::vector<ViabilityCheck> out;
  for (TaxonIndex x = 0; x < web.size(); ++x) {
    if (!saved[x]) continue;
    auto prey = web.prey(x);
    std::int64_t count = 0;
    Rational gamma_sum(0);
    for (std::size_t i = 0; i < prey.size(); ++i) {
      if (!saved[prey[i]]) continue;
      ++count;
      if (rule == Rule::Gamma) gamma_sum += web.prey_gamma(x)[i];
    }
    const bool source = prey.empty();
    switch (rule) {
      case Rule::Epsilon:
        out.push_back({web.name(x), Rational(source ? 0 : 1), Rational(count)});
        break;
      case Rule::Alpha:
        out.push_back({web.name(x), alpha * Rational(static_cast<std::int64_t>(prey.size())), Rational(count)});
        break;
      case Rule::Gamma:
        out.push_back({web.name(x), Rational(source ? 0 : 1), gamma_sum});
        break;
    }
  }
  return out;
}

ViabilityReport report_of(std::vector<ViabilityCheck> all) {
  ViabilityReport r;
  for (auto& c : all) {
    if (!c.ok()) r.violators.push_back(std::move(c));
  }
  r.viable = r.violators.empty();
  return r;
}

}  // namespace

Membership to_membership(const FoodWeb& web, const TaxonSet& taxa) {
  Membership m(web.size(), 0);
  for (const auto& t : taxa) m[web.index(t)] = 1;
  return m;
}

ViabilityReport is_eps_viable(const FoodWeb& web, const Membership& saved) {
  return report_of(checks(web, saved, Rule::Epsilon, Rational(1)));
}

ViabilityReport is_eps_viable(const FoodWeb& web, const TaxonSet& saved) {
  return is_eps_viable(web, to_membership(web, saved));
}

ViabilityReport is_alpha_viable(const FoodWeb& web, const Rational& alpha, const Membership& saved) {
  return report_of(checks(web, saved, Rule::Alpha, alpha));
}

ViabilityReport is_alpha_viable(const FoodWeb& web, const Rational& alpha, const TaxonSet& saved) {
  return is_alpha_viable(web, alpha, to_membership(web, saved));
}

ViabilityReport is_gamma_viable(const FoodWeb& web, const Membership& saved) {
  return report_of(checks(web, saved, Rule::Gamma, Rational(1)));
}

ViabilityReport is_gamma_viable(const FoodWeb& web, const TaxonSet& saved) {
  return is_gamma_viable(web, to_membership(web, saved));
}

ViabilityReport is_one_viable_closure(const FoodWeb& web, const Membership& saved) {
  check_size(web, saved);
  ViabilityReport r;
  for (TaxonIndex x = 0; x < web.size(); ++x) {
    if (!saved[x]) continue;
    auto ancestors = reach_up(web, x);
    std::int64_t have = 0;
    for (TaxonIndex a : ancestors) have += saved[a] ? 1 : 0;
    auto need = static_cast<std::int64_t>(ancestors.size());
    if (have < need) r.violators.push_back({web.name(x), Rational(need), Rational(have)});
  }
  r.viable = r.violators.empty();
  return r;
}

ViabilityReport is_one_viable_closure(const FoodWeb& web, const TaxonSet& saved) {
  return is_one_viable_closure(web, to_membership(web, saved));
}

TaxonSet one_viable_closure(const FoodWeb& web, const TaxonSet& saved) {
  TaxonSet out;
  for (const auto& x : saved) {
    auto up = reach_up(web, std::string_view(x));
    out.insert(up.begin(), up.end());
  }
  return out;
}

std::vector<ViabilityCheck> viability_certificate(const Instance& inst, const Membership& saved) {
  const auto& mode = inst.mode();
  switch (mode.kind()) {
    case ViabilityMode::Kind::Epsilon:
      return checks(inst.web(), saved, Rule::Epsilon, Rational(1));
    case ViabilityMode::Kind::Alpha:
      return checks(inst.web(), saved, Rule::Alpha, mode.alpha_value());
    case ViabilityMode::Kind::Gamma:
      return checks(inst.web(), saved, Rule::Gamma, Rational(1));
  }
  return {};
}

ViabilityReport check_viability(const Instance& inst, const Membership& saved) {
  return report_of(viability_certificate(inst, saved));
}

}  // namespace pdd
