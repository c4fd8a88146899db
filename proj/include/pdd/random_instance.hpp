#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "pdd/instance.hpp"

namespace pdd {

/// mt19937_64 with a bounded draw that is identical on every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [lo, hi].
  std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
  bool coin() { return (engine_() >> 63) != 0; }

  template <class Seq>
  void shuffle(Seq& seq) {
    for (std::size_t i = seq.size(); i > 1; --i) std::swap(seq[i - 1], seq[uniform(0, i - 1)]);
  }

 private:
  std::mt19937_64 engine_;
};

struct RandomParams {
  std::size_t taxa = 1;
  std::size_t edges = 0;
  bool star = true;
  bool gamma = false;  // attach p/q weights to every food-web edge
  /// Defaults: gamma mode when `gamma`, otherwise epsilon.
  std::optional<ViabilityMode> mode;
  /// Defaults: k uniform in [1, taxa]; D uniform in [0, max pd of k taxa].
  std::optional<Weight> k;
  std::optional<Weight> D;
};

/// Food web: forward edges of a random permutation, M distinct pairs sampled
/// uniformly. Tree: a star, or random pairwise merges into a binary tree.
/// Edge weights in [1, 10]. Throws std::invalid_argument on infeasible params.
Instance random_instance(const RandomParams& params, std::uint64_t seed);

}  // namespace pdd
