#include "pdd/random_instance.hpp"

#include <limits>
#include <stdexcept>
#include <unordered_set>

#include "pdd/solver.hpp"

namespace pdd {

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t range = span + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + draw % range;
}

namespace {

std::string padded(char prefix, std::size_t i, std::size_t count) {
  auto digits = std::to_string(count == 0 ? 0 : count - 1).size();
  auto s = std::to_string(i);
  return prefix + std::string(digits - s.size(), '0') + s;
}

std::vector<std::pair<std::size_t, std::size_t>> sample_pairs(Rng& rng, std::size_t n, std::size_t m) {
  const std::uint64_t total = n < 2 ? 0 : static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (2 * static_cast<std::uint64_t>(m) <= total) {
    std::unordered_set<std::uint64_t> seen;
    while (out.size() < m) {
      auto i = rng.uniform(0, n - 1), j = rng.uniform(0, n - 1);
      if (i == j) continue;
      if (i > j) std::swap(i, j);
      if (seen.insert(i * n + j).second) out.emplace_back(i, j);
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) out.emplace_back(i, j);
    }
    for (std::size_t i = 0; i < m; ++i) std::swap(out[i], out[rng.uniform(i, out.size() - 1)]);
    out.resize(m);
  }
  return out;
}

}  // namespace

Instance random_instance(const RandomParams& params, std::uint64_t seed) {
  const std::size_t n = params.taxa;
  if (n == 0) throw std::invalid_argument("taxa must be at least 1");
  if (n > 1 && params.edges > n * (n - 1) / 2) {
    throw std::invalid_argument("edges must be at most taxa*(taxa-1)/2 = " + std::to_string(n * (n - 1) / 2));
  }
  if (n == 1 && params.edges > 0) throw std::invalid_argument("a single taxon admits no edges");

  Rng rng(seed);
  std::vector<std::string> taxa(n);
  for (std::size_t i = 0; i < n; ++i) taxa[i] = padded('x', i, n);

  InstanceSpec spec;
  if (params.star || n == 1) {
    for (const auto& t : taxa) spec.tree.push_back({"r", t, static_cast<Weight>(rng.uniform(1, 10))});
  } else {
    std::vector<std::string> clusters = taxa;
    for (std::size_t next = 0; clusters.size() > 1; ++next) {
      auto node = padded('n', next, n - 1);
      for (int side = 0; side < 2; ++side) {
        auto pick = rng.uniform(0, clusters.size() - 1);
        spec.tree.push_back({node, clusters[pick], static_cast<Weight>(rng.uniform(1, 10))});
        clusters[pick] = clusters.back();
        clusters.pop_back();
      }
      clusters.push_back(node);
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  for (auto [i, j] : sample_pairs(rng, n, params.edges)) {
    WebEdge e{taxa[order[i]], taxa[order[j]], std::nullopt};
    if (params.gamma) {
      auto den = static_cast<std::int64_t>(rng.uniform(1, 6));
      e.gamma = Rational(static_cast<std::int64_t>(rng.uniform(1, static_cast<std::uint64_t>(den))), den);
    }
    spec.web.push_back(std::move(e));
  }

  spec.mode = params.mode ? *params.mode : params.gamma ? ViabilityMode::gamma() : ViabilityMode::epsilon();
  spec.k = params.k ? *params.k : static_cast<Weight>(rng.uniform(1, n));
  if (params.D) {
    spec.D = *params.D;
  } else {
    auto tree = PhyloTree::from_edges(spec.tree);
    auto cap = pd_upper_bound(tree, std::min<Weight>(std::max<Weight>(spec.k, 0), static_cast<Weight>(n)));
    spec.D = static_cast<Weight>(rng.uniform(0, static_cast<std::uint64_t>(cap)));
  }
  return Instance::from_spec(spec);
}

}  // namespace pdd
