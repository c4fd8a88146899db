#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace pdd {

/// Edge weight of a phylogenetic tree and diversity values derived from it.
using Weight = std::int64_t;

/// Dense index of a taxon. Taxa are always indexed in ascending name order, so
/// comparing index sequences is the same as comparing name sequences.
using TaxonIndex = std::uint32_t;

using TaxonSet = std::set<std::string, std::less<>>;

/// Per-taxon flag vector, indexed by TaxonIndex.
using Membership = std::vector<char>;

/// Raised when a tree, food web or instance violates a structural invariant.
/// Carries every violation that was found, not only the first.
class InvalidInstance : public std::runtime_error {
 public:
  explicit InvalidInstance(std::vector<std::string> violations);

  const std::vector<std::string>& violations() const { return violations_; }

 private:
  std::vector<std::string> violations_;
};

inline Weight checked_add(Weight a, Weight b) {
  Weight out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("weight overflow");
  return out;
}

inline Weight checked_mul(Weight a, Weight b) {
  Weight out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("weight overflow");
  return out;
}

}  // namespace pdd
