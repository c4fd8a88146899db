// Serial reference enumeration against the OpenMP enumeration of solve_exact.
// Prints one row per (instance, jobs) with wall time and speedup, and checks
// that every run returns the serial verdict and witness.

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "pdd/random_instance.hpp"
#include "pdd/solver.hpp"

namespace {

struct Case {
  std::string label;
  pdd::Instance inst;
};

// D just above the best viable value makes the search exhaust the space,
// which is the worst case for both enumerations.
pdd::Instance hard_variant(const pdd::Instance& inst) {
  auto spec = inst.to_spec();
  // Binary search for the largest D with a yes answer.
  pdd::Weight lo = 0, hi = inst.tree().total_weight() + 1;
  while (hi - lo > 1) {
    spec.D = lo + (hi - lo) / 2;
    (pdd::solve_exact(pdd::Instance::from_spec(spec)).yes ? lo : hi) = spec.D;
  }
  spec.D = hi;
  return pdd::Instance::from_spec(spec);
}

std::vector<Case> make_cases(std::size_t taxa, pdd::Weight k, std::uint64_t seed) {
  std::vector<Case> out;
  const std::pair<const char*, pdd::ViabilityMode> modes[] = {
      {"epsilon", pdd::ViabilityMode::epsilon()},
      {"alpha 1/2", pdd::ViabilityMode::alpha(pdd::Rational(1, 2))},
      {"alpha 1", pdd::ViabilityMode::alpha(pdd::Rational(1))}};
  for (const auto& [name, mode] : modes) {
    pdd::RandomParams p;
    p.taxa = taxa;
    p.edges = taxa * 2;
    p.star = false;
    p.mode = mode;
    p.k = k;
    p.D = 0;
    out.push_back({name, hard_variant(pdd::random_instance(p, seed))});
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial against parallel exact search"};
  std::size_t taxa = 34;
  pdd::Weight k = 8;
  std::uint64_t seed = 1;
  int max_jobs = omp_get_max_threads();
  int repeats = 3;
  bool prune = true;
  app.add_option("--taxa", taxa, "Taxa per instance");
  app.add_option("--k", k, "Budget");
  app.add_option("--seed", seed, "Generator seed");
  app.add_option("--max-jobs", max_jobs, "Largest thread count")->check(CLI::PositiveNumber);
  app.add_option("--repeats", repeats, "Runs per configuration; the minimum is reported")->check(CLI::PositiveNumber);
  app.add_flag("!--no-prune", prune, "Disable the completion bound");
  CLI11_PARSE(app, argc, argv);

  std::vector<int> jobs_list{1};
  for (int j = 2; j <= max_jobs; j *= 2) jobs_list.push_back(j);
  if (jobs_list.back() != max_jobs) jobs_list.push_back(max_jobs);

  std::printf("%-10s %5s %12s %12s %9s %s\n", "instance", "jobs", "explored", "seconds", "speedup", "verdict");
  bool consistent = true;
  for (const auto& c : make_cases(taxa, k, seed)) {
    double serial = 0;
    std::optional<pdd::SolveOutcome> reference;
    for (int jobs : jobs_list) {
      double best = 1e300;
      pdd::SolveOutcome out;
      for (int r = 0; r < repeats; ++r) {
        const auto start = std::chrono::steady_clock::now();
        out = pdd::solve_exact(c.inst, {.prune = prune, .jobs = jobs});
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
      }
      if (jobs == 1) {
        serial = best;
        reference = out;
      } else if (out.yes != reference->yes || (out.yes && out.witness->saved != reference->witness->saved)) {
        consistent = false;
      }
      std::printf("%-10s %5d %12llu %12.4f %9.2f %s\n", c.label.c_str(), jobs,
                  static_cast<unsigned long long>(out.explored), best, serial / best, out.yes ? "YES" : "NO");
    }
  }
  std::printf("hardware threads: %d\n", omp_get_num_procs());
  std::printf("parallel results %s the serial reference\n", consistent ? "match" : "DIFFER FROM");
  return consistent ? 0 : 1;
}
