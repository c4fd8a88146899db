#include "pdd/food_web.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "pdd/web_ops.hpp"

namespace pdd {

namespace {

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

template <class Next>
std::vector<TaxonIndex> search(std::size_t n, TaxonIndex start, Next next) {
  std::vector<char> seen(n, 0);
  std::vector<TaxonIndex> out{start}, stack{start};
  seen[start] = 1;
  while (!stack.empty()) {
    TaxonIndex v = stack.back();
    stack.pop_back();
    for (TaxonIndex w : next(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
        stack.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TaxonSet names_of(const FoodWeb& web, const std::vector<TaxonIndex>& idx) {
  TaxonSet out;
  for (TaxonIndex i : idx) out.insert(web.name(i));
  return out;
}

}  // namespace

std::vector<std::string> web_violations(const std::vector<std::string>& taxa, const std::vector<WebEdge>& edges) {
  std::vector<std::string> out;
  std::map<std::string, TaxonIndex> index;
  for (const auto& t : taxa) {
    if (!valid_token(t)) out.push_back("taxon name '" + t + "' is not a nonempty token without whitespace");
    if (!index.emplace(t, 0).second) out.push_back("taxon " + t + " is listed twice");
  }
  TaxonIndex i = 0;
  for (auto& [name, idx] : index) idx = i++;

  std::size_t with_gamma = 0;
  std::set<std::pair<TaxonIndex, TaxonIndex>> seen;
  std::vector<std::vector<TaxonIndex>> succ(index.size());
  std::vector<std::size_t> indeg(index.size(), 0);
  for (const auto& e : edges) {
    std::string label = "food-web edge " + e.prey + "->" + e.predator;
    auto p = index.find(e.prey);
    auto q = index.find(e.predator);
    if (p == index.end()) out.push_back(label + ": " + e.prey + " is not a taxon of the tree");
    if (q == index.end()) out.push_back(label + ": " + e.predator + " is not a taxon of the tree");
    if (e.gamma) {
      ++with_gamma;
      if (*e.gamma <= Rational(0) || *e.gamma > Rational(1)) {
        out.push_back(label + " has gamma " + e.gamma->to_string() + " outside (0,1]");
      }
    }
    if (p == index.end() || q == index.end()) continue;
    if (p->second == q->second) {
      out.push_back(label + " is a self-loop");
      continue;
    }
    if (!seen.emplace(p->second, q->second).second) {
      out.push_back("duplicate " + label);
      continue;
    }
    succ[p->second].push_back(q->second);
    ++indeg[q->second];
  }
  if (with_gamma != 0 && with_gamma != edges.size()) {
    out.push_back("gamma is given on " + std::to_string(with_gamma) + " of " + std::to_string(edges.size()) +
                  " food-web edges (all or none)");
  }

  std::deque<TaxonIndex> queue;
  for (TaxonIndex v = 0; v < indeg.size(); ++v) {
    if (indeg[v] == 0) queue.push_back(v);
  }
  std::size_t done = 0;
  while (!queue.empty()) {
    TaxonIndex v = queue.front();
    queue.pop_front();
    ++done;
    for (TaxonIndex w : succ[v]) {
      if (--indeg[w] == 0) queue.push_back(w);
    }
  }
  if (done != index.size()) {
    std::string msg = "food web is not acyclic; vertices on or behind a cycle:";
    for (const auto& [name, idx] : index) {
      if (indeg[idx] != 0) msg += " " + name;
    }
    out.push_back(msg);
  }
  return out;
}

FoodWeb FoodWeb::from_edges(std::vector<std::string> taxa, const std::vector<WebEdge>& edges) {
  auto violations = web_violations(taxa, edges);
  if (!violations.empty()) throw InvalidInstance(std::move(violations));

  FoodWeb web;
  std::sort(taxa.begin(), taxa.end());
  web.taxa_ = std::move(taxa);
  const std::size_t n = web.taxa_.size();
  web.prey_.resize(n);
  web.predators_.resize(n);
  web.has_gamma_ = !edges.empty() && edges.front().gamma.has_value();

  std::vector<std::vector<std::pair<TaxonIndex, Rational>>> in(n);
  for (const auto& e : edges) {
    TaxonIndex p = web.index(e.prey);
    TaxonIndex q = web.index(e.predator);
    in[q].emplace_back(p, e.gamma.value_or(Rational(1)));
    web.predators_[p].push_back(q);
  }
  if (web.has_gamma_) web.gamma_.resize(n);
  for (TaxonIndex v = 0; v < n; ++v) {
    std::sort(in[v].begin(), in[v].end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [p, g] : in[v]) {
      web.prey_[v].push_back(p);
      if (web.has_gamma_) web.gamma_[v].push_back(g);
    }
    std::sort(web.predators_[v].begin(), web.predators_[v].end());
  }
  web.edge_count_ = edges.size();
  return web;
}

FoodWeb FoodWeb::edgeless(std::vector<std::string> taxa) { return from_edges(std::move(taxa), {}); }

std::optional<TaxonIndex> FoodWeb::find(std::string_view name) const {
  auto it = std::lower_bound(taxa_.begin(), taxa_.end(), name);
  if (it == taxa_.end() || *it != name) return std::nullopt;
  return static_cast<TaxonIndex>(it - taxa_.begin());
}

TaxonIndex FoodWeb::index(std::string_view name) const {
  auto t = find(name);
  if (!t) throw std::invalid_argument("unknown taxon '" + std::string(name) + "'");
  return *t;
}

std::span<const Rational> FoodWeb::prey_gamma(TaxonIndex x) const {
  if (!has_gamma_) return {};
  return gamma_[x];
}

bool FoodWeb::has_edge(TaxonIndex prey, TaxonIndex predator) const {
  const auto& p = predators_[prey];
  return std::binary_search(p.begin(), p.end(), predator);
}

std::size_t FoodWeb::max_in_degree() const {
  std::size_t best = 0;
  for (const auto& p : prey_) best = std::max(best, p.size());
  return best;
}

std::vector<WebEdge> FoodWeb::edges() const {
  std::vector<WebEdge> out;
  out.reserve(edge_count_);
  for (TaxonIndex p = 0; p < size(); ++p) {
    for (TaxonIndex q : predators_[p]) {
      std::optional<Rational> g;
      if (has_gamma_) {
        auto it = std::lower_bound(prey_[q].begin(), prey_[q].end(), p);
        g = gamma_[q][static_cast<std::size_t>(it - prey_[q].begin())];
      }
      out.push_back({taxa_[p], taxa_[q], g});
    }
  }
  return out;
}

std::vector<TaxonIndex> reach_up(const FoodWeb& web, TaxonIndex x) {
  return search(web.size(), x, [&](TaxonIndex v) { return web.prey(v); });
}

TaxonSet reach_up(const FoodWeb& web, std::string_view x) { return names_of(web, reach_up(web, web.index(x))); }

std::vector<TaxonIndex> reach_down(const FoodWeb& web, TaxonIndex x) {
  return search(web.size(), x, [&](TaxonIndex v) { return web.predators(v); });
}

TaxonSet reach_down(const FoodWeb& web, std::string_view x) {
  return names_of(web, reach_down(web, web.index(x)));
}

bool is_directed_bipartite(const FoodWeb& web) {
  for (TaxonIndex v = 0; v < web.size(); ++v) {
    if (!web.prey(v).empty() && !web.predators(v).empty()) return false;
  }
  return true;
}

bool is_bipartite(const FoodWeb& web, std::vector<char>* side) {
  std::vector<int> colour(web.size(), -1);
  for (TaxonIndex s = 0; s < web.size(); ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<TaxonIndex> stack{s};
    while (!stack.empty()) {
      TaxonIndex v = stack.back();
      stack.pop_back();
      for (auto nbrs : {web.prey(v), web.predators(v)}) {
        for (TaxonIndex w : nbrs) {
          if (colour[w] == -1) {
            colour[w] = 1 - colour[v];
            stack.push_back(w);
          } else if (colour[w] == colour[v]) {
            return false;
          }
        }
      }
    }
  }
  if (side) side->assign(colour.begin(), colour.end());
  return true;
}

std::vector<std::string> topological_order_clique(const FoodWeb& web, const TaxonSet& modulator) {
  Membership alive(web.size(), 1);
  Membership in_z(web.size(), 0);
  for (const auto& z : modulator) in_z[web.index(z)] = 1;
  std::vector<std::string> out;
  for (TaxonIndex v : clique_order(web, alive, in_z)) out.push_back(web.name(v));
  return out;
}

}  // namespace pdd
