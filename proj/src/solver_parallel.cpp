#include <atomic>
#include <limits>

#include <omp.h>

#include "enumeration.hpp"

namespace pdd::detail {

std::optional<std::vector<TaxonIndex>> search_parallel(const Evaluator& ev, int jobs, std::uint64_t& explored) {
  const std::size_t kk = ev.subset_size();
  const auto tasks = static_cast<std::int64_t>(ev.pool() - kk + 1);
  // Smallest first position with a witness so far; tasks above it are cancelled.
  std::atomic<std::int64_t> best{std::numeric_limits<std::int64_t>::max()};
  std::vector<std::optional<std::vector<TaxonIndex>>> found(static_cast<std::size_t>(tasks));
  std::uint64_t total = 0;

#pragma omp parallel num_threads(jobs) reduction(+ : total)
  {
    Cursor cur(ev);
#pragma omp for schedule(dynamic, 1)
    for (std::int64_t first = 0; first < tasks; ++first) {
      if (first > best.load(std::memory_order_relaxed)) continue;
      auto stop = [&] { return best.load(std::memory_order_relaxed) < first; };
      cur.push(ev.candidate(static_cast<std::size_t>(first)));
      auto hit = search(ev, cur, static_cast<std::size_t>(first) + 1, stop);
      cur.pop();
      if (hit) {
        found[static_cast<std::size_t>(first)] = std::move(hit);
        std::int64_t seen = best.load();
        while (first < seen && !best.compare_exchange_weak(seen, first)) {
        }
      }
    }
    total += cur.explored;
  }

  explored = total;
  for (auto& f : found) {
    if (f) return std::move(f);
  }
  return std::nullopt;
}

}  // namespace pdd::detail
