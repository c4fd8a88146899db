// Command-line front end: solve, kernelize, reduce, build gadgets, compare
// and generate instances. Exit codes: 0 ok, 1 verdict no under
// --exit-verdict, 2 any error.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "pdd/io.hpp"
#include "pdd/kernel.hpp"
#include "pdd/random_instance.hpp"
#include "pdd/reductions.hpp"
#include "pdd/solver.hpp"

namespace {

constexpr int kExitNo = 1;
constexpr int kExitError = 2;

std::string join(const std::vector<std::string>& names) {
  std::string out;
  for (const auto& n : names) out += (out.empty() ? "" : " ") + n;
  return out;
}

// Instance text goes to `path` when given, else stdout; the report goes to
// stdout in the first case and stderr in the second so that stdout stays
// a parseable instance.
void emit(const std::string& path, const std::string& instance_text, const std::string& report) {
  if (path.empty()) {
    std::cout << instance_text;
    if (!report.empty()) std::cerr << report;
  } else {
    pdd::write_file(path, instance_text);
    std::cout << report;
  }
}

pdd::Instance load(const std::string& path) { return pdd::parse_instance(pdd::read_file(path)); }

struct SolveArgs {
  std::string file;
  bool oracle = false;
  bool no_prune = false;
  int jobs = 1;
  bool exit_verdict = false;
};

int run_solve(const SolveArgs& a) {
  const auto inst = load(a.file);
  const auto out = a.oracle ? pdd::brute_force_oracle(inst)
                            : pdd::solve_exact(inst, {.prune = !a.no_prune, .jobs = std::max(1, a.jobs)});
  if (out.yes) {
    std::cout << "YES\nwitness: " << join(out.witness->saved) << "\npd: " << out.witness->pd_value << "\n";
  } else {
    std::cout << "NO\n";
  }
  return a.exit_verdict && !out.yes ? kExitNo : 0;
}

struct KernelArgs {
  std::string file;
  std::string modulator;
  bool automatic = false;
  std::string output;
};

int run_kernelize(const KernelArgs& a) {
  const auto inst = load(a.file);
  if (a.modulator.empty() == !a.automatic) throw std::invalid_argument("give exactly one of --modulator and --auto");
  const auto z = a.automatic ? pdd::find_clique_modulator(inst.web()) : pdd::parse_taxon_list(pdd::read_file(a.modulator));
  const auto result = pdd::kernelize(inst, z);
  emit(a.output, pdd::write_instance(result.instance), pdd::format_trace(result.trace));
  return 0;
}

struct ReduceArgs {
  std::string file;
  std::string alpha;
  std::string variant = "a";
  std::string output;
};

int run_one_to_alpha(const ReduceArgs& a) {
  const auto inst = load(a.file);
  const auto alpha = pdd::Rational::parse(a.alpha);
  const auto r = a.variant == "a" ? pdd::one_to_alpha_variant_a(inst, alpha) : pdd::one_to_alpha_variant_b(inst, alpha);
  emit(a.output, pdd::write_instance(r.instance), pdd::format_receipt(r.receipt));
  return 0;
}

int run_eps_to_alpha(const ReduceArgs& a) {
  const auto r = pdd::eps_to_alpha(load(a.file), pdd::Rational::parse(a.alpha));
  emit(a.output, pdd::write_instance(r.instance), pdd::format_receipt(r.receipt));
  return 0;
}

struct GadgetArgs {
  std::string graph;
  std::string output;
};

int run_gadget(const GadgetArgs& a, bool dbar) {
  const auto g = pdd::parse_graph(pdd::read_file(a.graph));
  const auto r = dbar ? pdd::clique_gadget_dbar(g) : pdd::clique_gadget_d(g);
  emit(a.output, pdd::write_instance(r.instance), pdd::format_receipt(r.receipt));
  return 0;
}

struct ComposeArgs {
  std::vector<std::string> graphs;
  std::optional<std::size_t> k;
  std::string output;
};

int run_compose(const ComposeArgs& a) {
  std::vector<pdd::CliqueInput> inputs;
  for (const auto& path : a.graphs) {
    auto g = pdd::parse_graph(pdd::read_file(path));
    if (a.k) g.k = *a.k;
    inputs.push_back(std::move(g));
  }
  const auto r = pdd::cross_compose(inputs);
  emit(a.output, pdd::write_instance(r.instance), pdd::format_receipt(r.receipt));
  return 0;
}

int run_verify(const std::string& first, const std::string& second) {
  std::cout << (pdd::verify_equivalent(load(first), load(second)) ? "EQUIVALENT" : "DIFFER") << "\n";
  return 0;
}

int run_stats(const std::string& file) {
  const auto inst = load(file);
  const auto& web = inst.web();
  std::size_t sources = 0;
  for (pdd::TaxonIndex x = 0; x < web.size(); ++x) sources += web.is_source(x) ? 1 : 0;
  std::cout << "mode: " << inst.mode().to_string() << "\n"
            << "taxa: " << inst.taxon_count() << "\n"
            << "tree edges: " << inst.tree().node_count() - 1 << "\n"
            << "food-web edges: " << web.edge_count() << "\n"
            << "sources: " << sources << "\n"
            << "max in-degree: " << web.max_in_degree() << "\n"
            << "directed bipartite: " << (pdd::is_directed_bipartite(web) ? "yes" : "no") << "\n"
            << "clique modulator size: " << pdd::find_clique_modulator(web).size()
            << (web.size() <= pdd::kExactModulatorMaxTaxa ? "" : " (2-approximation)") << "\n"
            << "k: " << inst.k() << "\n"
            << "D: " << inst.D() << "\n"
            << "k-bar: " << inst.k_bar() << "\n"
            << "D-bar: " << inst.D_bar() << "\n";
  return 0;
}

struct GenArgs {
  std::size_t taxa = 1;
  std::size_t edges = 0;
  std::uint64_t seed = 0;
  bool star = false;
  bool tree = false;
  bool gamma = false;
  std::string alpha;
  std::optional<pdd::Weight> k;
  std::optional<pdd::Weight> D;
  std::string output;
};

int run_gen(const GenArgs& a) {
  pdd::RandomParams p;
  p.taxa = a.taxa;
  p.edges = a.edges;
  p.star = !a.tree;
  p.gamma = a.gamma;
  if (!a.alpha.empty()) p.mode = pdd::ViabilityMode::alpha(pdd::Rational::parse(a.alpha));
  p.k = a.k;
  p.D = a.D;
  emit(a.output, pdd::write_instance(pdd::random_instance(p, a.seed)), "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phylogenetic diversity with food-web dependencies"};
  app.require_subcommand(1);
  int code = 0;

  SolveArgs solve;
  auto* solve_cmd = app.add_subcommand("solve", "Decide an instance and print a witness");
  solve_cmd->add_option("file", solve.file, "Instance file")->required();
  solve_cmd->add_flag("--oracle", solve.oracle, "Use the brute-force oracle");
  solve_cmd->add_flag("--no-prune", solve.no_prune, "Disable the completion bound");
  solve_cmd->add_option("--jobs", solve.jobs, "Worker threads")->check(CLI::PositiveNumber);
  solve_cmd->add_flag("--exit-verdict", solve.exit_verdict, "Exit with 1 on a no-instance");
  solve_cmd->callback([&] { code = run_solve(solve); });

  KernelArgs kern;
  auto* kern_cmd = app.add_subcommand("kernelize", "Apply the distance-to-clique kernel");
  kern_cmd->add_option("file", kern.file, "Instance file")->required();
  auto* mod_opt = kern_cmd->add_option("--modulator", kern.modulator, "File listing the modulator taxa");
  kern_cmd->add_flag("--auto", kern.automatic, "Compute a modulator")->excludes(mod_opt);
  kern_cmd->add_option("-o,--output", kern.output, "Write the kernel here");
  kern_cmd->callback([&] { code = run_kernelize(kern); });

  auto* reduce_cmd = app.add_subcommand("reduce", "Reductions between viability modes");
  reduce_cmd->require_subcommand(1);
  ReduceArgs one;
  auto* one_cmd = reduce_cmd->add_subcommand("one-to-alpha", "1-viability to alpha-viability on a star");
  one_cmd->add_option("file", one.file, "Instance file")->required();
  one_cmd->add_option("--alpha", one.alpha, "Target alpha as p/q")->required();
  one_cmd->add_option("--variant", one.variant, "Padding construction")->check(CLI::IsMember({"a", "b"}));
  one_cmd->add_option("-o,--output", one.output, "Write the instance here");
  one_cmd->callback([&] { code = run_one_to_alpha(one); });
  ReduceArgs eps;
  auto* eps_cmd = reduce_cmd->add_subcommand("eps-to-alpha", "epsilon-viability to alpha-viability on a star");
  eps_cmd->add_option("file", eps.file, "Instance file")->required();
  eps_cmd->add_option("--alpha", eps.alpha, "Target alpha as p/q")->required();
  eps_cmd->add_option("-o,--output", eps.output, "Write the instance here");
  eps_cmd->callback([&] { code = run_eps_to_alpha(eps); });

  auto* gadget_cmd = app.add_subcommand("gadget", "Clique to 1-viability gadgets");
  gadget_cmd->require_subcommand(1);
  GadgetArgs gd, gdbar;
  auto* gd_cmd = gadget_cmd->add_subcommand("clique-d", "Gadget for parameter D");
  gd_cmd->add_option("graph", gd.graph, "Graph file")->required();
  gd_cmd->add_option("-o,--output", gd.output, "Write the instance here");
  gd_cmd->callback([&] { code = run_gadget(gd, false); });
  auto* gdbar_cmd = gadget_cmd->add_subcommand("clique-dbar", "Gadget for parameter D-bar");
  gdbar_cmd->add_option("graph", gdbar.graph, "Graph file")->required();
  gdbar_cmd->add_option("-o,--output", gdbar.output, "Write the instance here");
  gdbar_cmd->callback([&] { code = run_gadget(gdbar, true); });

  ComposeArgs compose;
  auto* compose_cmd = app.add_subcommand("compose", "OR-compose clique instances on one vertex set");
  compose_cmd->add_option("graphs", compose.graphs, "Graph files")->required();
  compose_cmd->add_option("--k", compose.k, "Clique size for every input");
  compose_cmd->add_option("-o,--output", compose.output, "Write the instance here");
  compose_cmd->callback([&] { code = run_compose(compose); });

  std::string first, second;
  auto* verify_cmd = app.add_subcommand("verify", "Compare oracle verdicts of two instances");
  verify_cmd->add_option("first", first, "Instance file")->required();
  verify_cmd->add_option("second", second, "Instance file")->required();
  verify_cmd->callback([&] { code = run_verify(first, second); });

  std::string stats_file;
  auto* stats_cmd = app.add_subcommand("stats", "Summarise an instance");
  stats_cmd->add_option("file", stats_file, "Instance file")->required();
  stats_cmd->callback([&] { code = run_stats(stats_file); });

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random instance");
  gen_cmd->add_option("--taxa", gen.taxa, "Number of taxa")->required();
  gen_cmd->add_option("--edges", gen.edges, "Number of food-web edges");
  gen_cmd->add_option("--seed", gen.seed, "Random seed");
  auto* star_flag = gen_cmd->add_flag("--star", gen.star, "Star tree (default)");
  gen_cmd->add_flag("--tree", gen.tree, "Random binary tree")->excludes(star_flag);
  gen_cmd->add_flag("--gamma", gen.gamma, "Gamma weights and mode gamma");
  gen_cmd->add_option("--alpha", gen.alpha, "Mode alpha p/q instead of epsilon");
  gen_cmd->add_option("--k", gen.k, "Budget");
  gen_cmd->add_option("--D", gen.D, "Diversity threshold");
  gen_cmd->add_option("-o,--output", gen.output, "Write the instance here");
  gen_cmd->callback([&] { code = run_gen(gen); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int status = app.exit(e);
    return status == 0 ? 0 : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return code;
}
