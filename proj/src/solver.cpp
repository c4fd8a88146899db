#include "pdd/solver.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "enumeration.hpp"

namespace pdd {

namespace detail {

namespace {

constexpr std::size_t kMaxTailTable = 50'000'000;

Weight ceil_div(Weight a, Weight b) { return a / b + (a % b != 0 ? 1 : 0); }

}  // namespace

Evaluator::Evaluator(const Instance& inst, bool prune)
    : tree_(inst.tree()), n_(inst.taxon_count()), D_(inst.D()), prey_(n_), threshold_(n_, 0) {
  const auto& web = inst.web();
  const auto& mode = inst.mode();
  for (TaxonIndex x = 0; x < n_; ++x) {
    auto prey = web.prey(x);
    if (prey.empty()) continue;
    const auto deg = static_cast<Weight>(prey.size());
    switch (mode.kind()) {
      case ViabilityMode::Kind::Epsilon:
        for (TaxonIndex p : prey) prey_[x].emplace_back(p, 1);
        threshold_[x] = 1;
        break;
      case ViabilityMode::Kind::Alpha: {
        for (TaxonIndex p : prey) prey_[x].emplace_back(p, 1);
        const auto& a = mode.alpha_value();
        threshold_[x] = ceil_div(checked_mul(a.num(), deg), a.den());
        break;
      }
      case ViabilityMode::Kind::Gamma: {
        auto gamma = web.prey_gamma(x);
        Weight common = 1;
        for (const auto& g : gamma) common = checked_mul(common / std::gcd(common, g.den()), g.den());
        for (std::size_t i = 0; i < prey.size(); ++i) {
          prey_[x].emplace_back(prey[i], checked_mul(gamma[i].num(), common / gamma[i].den()));
        }
        threshold_[x] = common;
        break;
      }
    }
  }

  // Largest viable set: drop unsatisfied taxa until none remain.
  std::vector<char> in(n_, 1);
  std::vector<Weight> support(n_, 0);
  std::vector<std::vector<TaxonIndex>> eaten_by(n_);
  std::vector<TaxonIndex> dropped;
  for (TaxonIndex x = 0; x < n_; ++x) {
    for (const auto& [p, w] : prey_[x]) {
      support[x] = checked_add(support[x], w);
      eaten_by[p].push_back(x);
    }
    if (support[x] < threshold_[x]) {
      in[x] = 0;
      dropped.push_back(x);
    }
  }
  while (!dropped.empty()) {
    TaxonIndex p = dropped.back();
    dropped.pop_back();
    for (TaxonIndex q : eaten_by[p]) {
      if (!in[q]) continue;
      for (const auto& [pp, w] : prey_[q]) {
        if (pp == p) support[q] -= w;
      }
      if (support[q] < threshold_[q]) {
        in[q] = 0;
        dropped.push_back(q);
      }
    }
  }
  for (TaxonIndex x = 0; x < n_; ++x) {
    if (in[x]) candidates_.push_back(x);
  }
  kk_ = std::min(static_cast<std::size_t>(inst.k()), candidates_.size());

  const std::size_t m = candidates_.size();
  prune_ = prune && (m + 1) * (kk_ + 1) <= kMaxTailTable;
  if (!prune_) return;
  tail_.assign((m + 1) * (kk_ + 1), 0);
  std::vector<Weight> sorted;  // descending singleton pd of positions >= j
  for (std::size_t j = m; j-- > 0;) {
    TaxonIndex one[] = {candidates_[j]};
    const Weight single = pd(tree_, one);
    sorted.insert(std::upper_bound(sorted.begin(), sorted.end(), single, std::greater<>()), single);
    Weight sum = 0;
    for (std::size_t r = 1; r <= kk_ && r <= sorted.size(); ++r) {
      sum = checked_add(sum, sorted[r - 1]);
      tail_[j * (kk_ + 1) + r] = sum;
    }
    for (std::size_t r = sorted.size() + 1; r <= kk_; ++r) tail_[j * (kk_ + 1) + r] = sum;
  }
}

bool Evaluator::viable(const std::vector<char>& in, const std::vector<TaxonIndex>& chosen) const {
  for (TaxonIndex x : chosen) {
    Weight sum = 0;
    for (const auto& [p, w] : prey_[x]) {
      if (in[p]) sum += w;
    }
    if (sum < threshold_[x]) return false;
  }
  return true;
}

bool Evaluator::hopeless(Weight prefix_pd, std::size_t start, std::size_t missing) const {
  if (!prune_) return false;
  return prefix_pd + tail_[start * (kk_ + 1) + missing] < D_;
}

Cursor::Cursor(const Evaluator& ev)
    : tree_(ev.tree()), cover_(ev.tree().node_count(), 0), in_(ev.taxa(), 0) {
  chosen_.reserve(ev.subset_size());
}

void Cursor::push(TaxonIndex x) {
  in_[x] = 1;
  chosen_.push_back(x);
  for (NodeId v = tree_.leaf(x); v != tree_.root(); v = tree_.parent(v)) {
    if (cover_[v]++ == 0) pd_ += tree_.weight(v);
  }
}

void Cursor::pop() {
  TaxonIndex x = chosen_.back();
  chosen_.pop_back();
  in_[x] = 0;
  for (NodeId v = tree_.leaf(x); v != tree_.root(); v = tree_.parent(v)) {
    if (--cover_[v] == 0) pd_ -= tree_.weight(v);
  }
}

}  // namespace detail

Solution make_solution(const Instance& inst, const Membership& saved) {
  Solution s;
  std::vector<TaxonIndex> idx;
  for (TaxonIndex x = 0; x < saved.size(); ++x) {
    if (!saved[x]) continue;
    idx.push_back(x);
    s.saved.push_back(inst.web().name(x));
  }
  s.pd_value = pd(inst.tree(), idx);
  s.certificate = viability_certificate(inst, saved);
  return s;
}

SolveOutcome solve_exact(const Instance& inst, const SolveOptions& options) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = inst.taxon_count();
  const std::size_t kk = std::min(static_cast<std::size_t>(inst.k()), n);

  SolveOutcome out;
  auto finish = [&] {
    out.elapsed = std::chrono::steady_clock::now() - started;
    return out;
  };
  if (options.prune && pd_upper_bound(inst.tree(), static_cast<Weight>(kk)) < inst.D()) return finish();

  detail::Evaluator ev(inst, options.prune);
  std::optional<std::vector<TaxonIndex>> found;
  if (options.jobs <= 1 || ev.subset_size() == 0) {
    detail::Cursor cur(ev);
    found = detail::search(ev, cur, 0, [] { return false; });
    out.explored = cur.explored;
  } else {
    found = detail::search_parallel(ev, options.jobs, out.explored);
  }
  if (found) {
    Membership saved(n, 0);
    for (TaxonIndex x : *found) saved[x] = 1;
    out.yes = true;
    out.witness = make_solution(inst, saved);
  }
  return finish();
}

std::uint64_t oracle_workload(const Instance& inst) {
  const std::uint64_t n = inst.taxon_count();
  const std::uint64_t limit = std::min<std::uint64_t>(static_cast<std::uint64_t>(inst.k()), n);
  std::uint64_t total = 0, term = 1;  // term = C(n, size)
  for (std::uint64_t size = 0; size <= limit; ++size) {
    if (size > 0) {
      // C(n, s) = C(n, s-1) * (n-s+1) / s; exact in 128 bits below the cap.
      unsigned __int128 next = static_cast<unsigned __int128>(term) * (n - size + 1) / size;
      term = next > kOracleMaxSubsets ? kOracleMaxSubsets + 1 : static_cast<std::uint64_t>(next);
    }
    total += term;
    if (total > kOracleMaxSubsets) return kOracleMaxSubsets + 1;
  }
  return total;
}

SolveOutcome brute_force_oracle(const Instance& inst) {
  const auto started = std::chrono::steady_clock::now();
  const std::size_t n = inst.taxon_count();
  if (n > kOracleMaxTaxa || oracle_workload(inst) > kOracleMaxSubsets) {
    throw std::invalid_argument("instance with " + std::to_string(n) + " taxa and k = " + std::to_string(inst.k()) +
                                " exceeds the brute-force oracle guard (" + std::to_string(kOracleMaxTaxa) +
                                " taxa, " + std::to_string(kOracleMaxSubsets) + " candidate sets)");
  }
  const std::size_t limit = std::min(static_cast<std::size_t>(inst.k()), n);

  SolveOutcome out;
  std::optional<std::vector<TaxonIndex>> best;
  Membership saved(n, 0);
  std::vector<TaxonIndex> members;
  const std::uint64_t end = std::uint64_t{1} << n;
  for (std::size_t size = 0; size <= limit; ++size) {
    // Gosper's hack over all n-bit masks with `size` bits set.
    std::uint64_t mask = size == 0 ? 0 : (std::uint64_t{1} << size) - 1;
    while (mask < end) {
      ++out.explored;
      members.clear();
      for (TaxonIndex x = 0; x < n; ++x) {
        saved[x] = static_cast<char>((mask >> x) & 1U);
        if (saved[x]) members.push_back(x);
      }
      if (pd(inst.tree(), members) >= inst.D() && check_viability(inst, saved).viable) {
        if (!best || members < *best) best = members;
      }
      if (mask == 0) break;
      std::uint64_t low = mask & -mask;
      std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  if (best) {
    Membership m(n, 0);
    for (TaxonIndex x : *best) m[x] = 1;
    out.yes = true;
    out.witness = make_solution(inst, m);
  }
  out.elapsed = std::chrono::steady_clock::now() - started;
  return out;
}

TaxonSet greedy_max_pd(const PhyloTree& tree, Weight k) {
  const auto n = static_cast<Weight>(tree.taxon_count());
  if (k < 0 || k > n) {
    throw std::invalid_argument("k = " + std::to_string(k) + " is outside [0, " + std::to_string(n) + "]");
  }
  std::vector<char> covered(tree.node_count(), 0);
  std::vector<char> taken(tree.taxon_count(), 0);
  TaxonSet out;
  for (Weight step = 0; step < k; ++step) {
    TaxonIndex best = 0;
    Weight best_gain = -1;
    for (TaxonIndex x = 0; x < tree.taxon_count(); ++x) {
      if (taken[x]) continue;
      Weight gain = 0;
      for (NodeId v = tree.leaf(x); v != tree.root() && !covered[v]; v = tree.parent(v)) gain += tree.weight(v);
      if (gain > best_gain) {
        best_gain = gain;
        best = x;
      }
    }
    taken[best] = 1;
    for (NodeId v = tree.leaf(best); v != tree.root() && !covered[v]; v = tree.parent(v)) covered[v] = 1;
    out.insert(tree.taxa()[best]);
  }
  return out;
}

Weight pd_upper_bound(const PhyloTree& tree, Weight k) { return pd(tree, greedy_max_pd(tree, k)); }

}  // namespace pdd
