#include "pdd/web_ops.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pdd {

namespace {

struct Degrees {
  TaxonIndex vertex;
  std::size_t prey;
  std::size_t predators;
};

template <class Web>
std::vector<TaxonIndex> order_from_degrees(const Web& web, const std::vector<Degrees>& degrees) {
  const std::size_t r = degrees.size();
  std::vector<TaxonIndex> order(r, std::numeric_limits<TaxonIndex>::max());
  for (const auto& d : degrees) {
    if (d.prey + d.predators != r - 1) {
      throw std::invalid_argument("not a clique after removing Z: " + web.name(d.vertex) + " is adjacent to " +
                                  std::to_string(d.prey + d.predators) + " of the other " +
                                  std::to_string(r - 1) + " vertices");
    }
    // In an acyclic tournament the in-degree is the topological position.
    if (order[d.prey] != std::numeric_limits<TaxonIndex>::max()) {
      throw std::invalid_argument("the web minus Z is cyclic: " + web.name(order[d.prey]) + " and " +
                                  web.name(d.vertex) + " have the same in-degree");
    }
    order[d.prey] = d.vertex;
  }
  return order;
}

std::vector<std::uint64_t> to_words(const Membership& m, std::size_t words) {
  std::vector<std::uint64_t> out(words, 0);
  for (std::size_t v = 0; v < m.size(); ++v) {
    if (m[v]) out[v / 64] |= std::uint64_t{1} << (v % 64);
  }
  return out;
}

std::size_t masked_popcount(std::span<const std::uint64_t> row, const std::vector<std::uint64_t>& mask) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < row.size(); ++i) count += static_cast<std::size_t>(std::popcount(row[i] & mask[i]));
  return count;
}

template <class Row>
std::vector<TaxonIndex> dense_search(const DenseWeb& web, TaxonIndex start, Row row_of) {
  const std::size_t words = web.words_per_row();
  std::vector<std::uint64_t> seen(words, 0);
  seen[start / 64] |= std::uint64_t{1} << (start % 64);
  std::vector<TaxonIndex> stack{start}, out{start};
  while (!stack.empty()) {
    TaxonIndex v = stack.back();
    stack.pop_back();
    auto row = row_of(v);
    for (std::size_t i = 0; i < words; ++i) {
      std::uint64_t fresh = row[i] & ~seen[i];
      seen[i] |= fresh;
      for (; fresh != 0; fresh &= fresh - 1) {
        auto w = static_cast<TaxonIndex>(i * 64 + static_cast<std::size_t>(std::countr_zero(fresh)));
        stack.push_back(w);
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<TaxonIndex> clique_order(const FoodWeb& web, const Membership& alive, const Membership& modulator) {
  auto in_r = [&](TaxonIndex v) { return alive[v] && !modulator[v]; };
  std::vector<Degrees> degrees;
  for (TaxonIndex v = 0; v < web.size(); ++v) {
    if (!in_r(v)) continue;
    Degrees d{v, 0, 0};
    for (TaxonIndex p : web.prey(v)) d.prey += in_r(p) ? 1 : 0;
    for (TaxonIndex q : web.predators(v)) d.predators += in_r(q) ? 1 : 0;
    degrees.push_back(d);
  }
  return order_from_degrees(web, degrees);
}

std::vector<TaxonIndex> clique_order(const DenseWeb& web, const Membership& alive, const Membership& modulator) {
  Membership r(web.size(), 0);
  for (std::size_t v = 0; v < web.size(); ++v) r[v] = alive[v] && !modulator[v];
  const auto mask = to_words(r, web.words_per_row());
  std::vector<Degrees> degrees;
  for (TaxonIndex v = 0; v < web.size(); ++v) {
    if (!r[v]) continue;
    degrees.push_back({v, masked_popcount(web.prey_row(v), mask), masked_popcount(web.predator_row(v), mask)});
  }
  return order_from_degrees(web, degrees);
}

std::vector<TaxonIndex> reach_up(const DenseWeb& web, TaxonIndex x) {
  return dense_search(web, x, [&](TaxonIndex v) { return web.prey_row(v); });
}

std::vector<TaxonIndex> reach_down(const DenseWeb& web, TaxonIndex x) {
  return dense_search(web, x, [&](TaxonIndex v) { return web.predator_row(v); });
}

std::vector<WebEdge> edges_within(const FoodWeb& web, const Membership& keep) {
  std::vector<WebEdge> out;
  for (TaxonIndex q = 0; q < web.size(); ++q) {
    if (!keep[q]) continue;
    auto prey = web.prey(q);
    auto gamma = web.prey_gamma(q);
    for (std::size_t i = 0; i < prey.size(); ++i) {
      if (!keep[prey[i]]) continue;
      std::optional<Rational> g;
      if (web.has_gamma()) g = gamma[i];
      out.push_back({web.name(prey[i]), web.name(q), g});
    }
  }
  return out;
}

std::vector<WebEdge> edges_within(const DenseWeb& web, const Membership& keep) {
  const auto mask = to_words(keep, web.words_per_row());
  std::vector<WebEdge> out;
  for (TaxonIndex q = 0; q < web.size(); ++q) {
    if (!keep[q]) continue;
    auto row = web.prey_row(q);
    for (std::size_t i = 0; i < row.size(); ++i) {
      for (std::uint64_t word = row[i] & mask[i]; word != 0; word &= word - 1) {
        auto p = static_cast<TaxonIndex>(i * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        out.push_back({web.name(p), web.name(q), std::nullopt});
      }
    }
  }
  return out;
}

}  // namespace pdd
