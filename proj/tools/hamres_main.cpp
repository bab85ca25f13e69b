// Command-line front end: check candidate sets, reduce or generate
// resolving sets, embed vertices as distance vectors, and benchmark the
// checkers against each other.
//
// Exit codes: 0 resolving / success, 1 not resolving, 2 usage or parse
// error, 3 budget exhausted (verdict unknown), 4 benchmark disagreement.

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamres/hamres.hpp"

namespace {

constexpr int kExitResolving = 0;
constexpr int kExitNotResolving = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitDisagreement = 4;

struct GraphArgs {
  std::size_t k = 0;
  std::size_t a = 0;
};

struct SetSource {
  std::string vertices;  // delimiter-separated inline list
  std::string file;
};

struct Budgets {
  std::uint64_t enum_budget = 10'000'000;
  std::uint64_t groebner_budget = 1'000'000;
};

void add_graph_options(CLI::App& cmd, GraphArgs& args) {
  cmd.add_option("--k", args.k, "word length")->required()->check(CLI::PositiveNumber);
  cmd.add_option("--a", args.a, "alphabet size")->required()->check(CLI::Range(2, 1'000'000));
}

void add_set_options(CLI::App& cmd, SetSource& src) {
  auto* inline_opt = cmd.add_option(
      "--vertices", src.vertices,
      "vertex list, comma separated (use ';' between vertices when the "
      "alphabet needs comma-separated symbols)");
  auto* file_opt =
      cmd.add_option("--set", src.file, "file with one vertex per line");
  inline_opt->excludes(file_opt);
  file_opt->excludes(inline_opt);
}

void add_budget_options(CLI::App& cmd, Budgets& budgets) {
  cmd.add_option("--enum-budget", budgets.enum_budget,
                 "max admissible vectors to enumerate");
  cmd.add_option("--groebner-budget", budgets.groebner_budget,
                 "max S-polynomial reductions per basis computation");
}

hamres::CheckOptions to_check_options(const Budgets& budgets, hamres::Ordering ord) {
  hamres::CheckOptions opts;
  opts.ordering = ord;
  opts.groebner.step_budget = budgets.groebner_budget;
  opts.enum_budget = budgets.enum_budget;
  return opts;
}

std::vector<hamres::Vertex> load_set(const hamres::HammingGraph& g,
                                     const SetSource& src) {
  if (!src.file.empty()) {
    std::ifstream in(src.file);
    if (!in) throw std::invalid_argument("cannot open " + src.file);
    return hamres::parse_vertex_set(g, in);
  }
  std::vector<hamres::Vertex> out;
  if (src.vertices.empty()) return out;
  const char sep = src.vertices.find(';') != std::string::npos ? ';' : ',';
  std::size_t start = 0;
  while (start <= src.vertices.size()) {
    const std::size_t end = src.vertices.find(sep, start);
    const std::string tok = src.vertices.substr(
        start, end == std::string::npos ? end : end - start);
    if (tok.empty()) throw std::invalid_argument("empty vertex in --vertices");
    out.push_back(hamres::parse_vertex(g, tok));
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

void print_verdict(const hamres::HammingGraph& g,
                   const hamres::ResolvabilityVerdict& verdict) {
  std::cout << (verdict.resolving ? "resolving" : "not resolving") << '\n';
  if (verdict.unresolved_pair) {
    std::cout << "witness pair: "
              << hamres::format_vertex(g, verdict.unresolved_pair->first) << ' '
              << hamres::format_vertex(g, verdict.unresolved_pair->second) << '\n';
  }
  if (verdict.kernel_witness) {
    std::cout << "witness kernel vector:";
    for (int v : verdict.kernel_witness->z) std::cout << ' ' << v;
    std::cout << '\n';
  }
}

int run_check(const GraphArgs& graph, const SetSource& src,
              const std::string& method, hamres::Ordering ord,
              const Budgets& budgets) {
  const hamres::HammingGraph g(graph.k, graph.a);
  const std::vector<hamres::Vertex> set = load_set(g, src);
  if (set.empty()) {
    std::cerr << "error: no vertices given\n";
    return kExitUsage;
  }
  hamres::ResolvabilityVerdict verdict;
  const hamres::CheckOptions opts = to_check_options(budgets, ord);
  if (method == "bruteforce") {
    verdict = hamres::brute_force_is_resolving(g, set);
  } else if (method == "groebner") {
    verdict = hamres::check_resolving_groebner(hamres::build_system(g, set), ord,
                                               opts.groebner);
  } else if (method == "enumeration") {
    verdict = hamres::check_resolving_enumeration(hamres::build_system(g, set),
                                                  budgets.enum_budget);
  } else if (method == "hypercube") {
    if (g.a() != 2) {
      std::cerr << "error: --method hypercube requires --a 2\n";
      return kExitUsage;
    }
    verdict = hamres::check_resolving_hypercube(g, set, opts);
  } else {
    verdict = hamres::CheckSession(g, opts).check(set);
  }
  if (verdict.kernel_witness && !verdict.unresolved_pair)
    verdict.unresolved_pair =
        hamres::admissible_to_pair(g, verdict.kernel_witness->z);
  print_verdict(g, verdict);
  return verdict.resolving ? kExitResolving : kExitNotResolving;
}

int run_reduce(const GraphArgs& graph, const SetSource& src,
               const std::string& strategy, std::uint64_t seed,
               hamres::Ordering ord, const Budgets& budgets) {
  const hamres::HammingGraph g(graph.k, graph.a);
  const std::vector<hamres::Vertex> set = load_set(g, src);
  if (set.empty()) {
    std::cerr << "error: no vertices given\n";
    return kExitUsage;
  }
  hamres::RandomSource rng(seed);
  const hamres::CheckOptions opts = to_check_options(budgets, ord);
  std::vector<hamres::Vertex> reduced;
  try {
    reduced = strategy == "generative"
                  ? hamres::reduce_generative(g, set, rng, opts)
                  : hamres::reduce_top_down(g, set, rng, opts);
  } catch (const hamres::NotResolvingError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotResolving;
  }
  hamres::write_vertex_set(g, reduced, std::cout);
  return kExitResolving;
}

int run_generate(const GraphArgs& graph, std::uint64_t seed, hamres::Ordering ord,
                 const Budgets& budgets) {
  const hamres::HammingGraph g(graph.k, graph.a);
  hamres::RandomSource rng(seed);
  const std::vector<hamres::Vertex> set =
      hamres::generate_resolving(g, rng, to_check_options(budgets, ord));
  hamres::write_vertex_set(g, set, std::cout);
  return kExitResolving;
}

int run_embed(const GraphArgs& graph, const SetSource& src,
              const std::string& input_file) {
  const hamres::HammingGraph g(graph.k, graph.a);
  const std::vector<hamres::Vertex> refs = load_set(g, src);
  if (refs.empty()) {
    std::cerr << "error: no reference vertices given\n";
    return kExitUsage;
  }
  std::ifstream in(input_file);
  if (!in) throw std::invalid_argument("cannot open " + input_file);
  const std::vector<hamres::Vertex> inputs = hamres::parse_vertex_set(g, in);
  const auto rows = hamres::embed(g, refs, inputs);
  std::cout << "vertex";
  for (std::size_t i = 1; i <= refs.size(); ++i) std::cout << ",d" << i;
  std::cout << '\n';
  for (std::size_t row = 0; row < rows.size(); ++row) {
    std::cout << hamres::format_vertex(g, inputs[row]);
    for (int d : rows[row]) std::cout << ',' << d;
    std::cout << '\n';
  }
  return kExitResolving;
}

struct BenchArgs {
  std::uint64_t trials = 50;
  double fraction_resolving = 0.5;
  std::string methods;  // comma list; empty = all applicable
  std::uint64_t seed = 0;
  std::string out;
};

std::vector<std::string> bench_methods(const hamres::HammingGraph& g,
                                       const std::string& methods,
                                       const Budgets& budgets) {
  std::vector<std::string> out;
  if (!methods.empty()) {
    std::stringstream ss(methods);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      if (tok != "groebner" && tok != "bruteforce" && tok != "enumeration" &&
          tok != "hypercube")
        throw std::invalid_argument("unknown bench method " + tok);
      out.push_back(tok);
    }
    return out;
  }
  out = {"groebner", "bruteforce"};
  const std::uint64_t choices = 1 + static_cast<std::uint64_t>(g.a()) * (g.a() - 1);
  std::uint64_t total = 1;
  bool enumerable = true;
  for (std::size_t i = 0; i < g.k() && enumerable; ++i) {
    if (total > budgets.enum_budget / choices) enumerable = false;
    else total *= choices;
  }
  if (enumerable) out.push_back("enumeration");
  if (g.a() == 2) out.push_back("hypercube");
  return out;
}

int run_bench(const GraphArgs& graph, const BenchArgs& args, hamres::Ordering ord,
              const Budgets& budgets) {
  const hamres::HammingGraph g(graph.k, graph.a);
  if (g.vertex_count() > (std::uint64_t{1} << 20)) {
    std::cerr << "unknown: graph too large for ground-truth labels\n";
    return kExitBudget;
  }
  const std::vector<std::string> methods = bench_methods(g, args.methods, budgets);
  for (const auto& m : methods)
    if (m == "hypercube" && g.a() != 2)
      throw std::invalid_argument("hypercube method requires --a 2");

  const hamres::CheckOptions opts = to_check_options(budgets, ord);
  hamres::RandomSource rng(args.seed);
  const std::uint64_t resolving_trials = static_cast<std::uint64_t>(
      std::llround(static_cast<double>(args.trials) * args.fraction_resolving));

  std::ostringstream csv;
  csv << "k,a,set_size,method,verdict,time_us,seed\n";

  for (std::uint64_t trial = 0; trial < args.trials; ++trial) {
    std::vector<hamres::Vertex> set = hamres::generate_resolving(g, rng, opts);
    if (trial >= resolving_trials) {
      while (!set.empty() && hamres::brute_force_is_resolving(g, set).resolving)
        set.erase(set.begin() +
                  static_cast<std::ptrdiff_t>(rng.next_below(set.size())));
    }
    const bool expected = hamres::brute_force_is_resolving(g, set).resolving;

    for (const auto& method : methods) {
      auto run_method = [&]() -> std::optional<bool> {
        try {
          if (method == "groebner")
            return hamres::check_resolving_groebner(hamres::build_system(g, set),
                                                    ord, opts.groebner)
                .resolving;
          if (method == "bruteforce")
            return hamres::brute_force_is_resolving(g, set).resolving;
          if (method == "enumeration")
            return hamres::check_resolving_enumeration(hamres::build_system(g, set),
                                                       budgets.enum_budget)
                .resolving;
          return hamres::check_resolving_hypercube(g, set, opts).resolving;
        } catch (const hamres::BudgetExhaustedError&) {
          return std::nullopt;
        }
      };
      run_method();  // warm-up, excluded from timing
      const auto begin = std::chrono::steady_clock::now();
      const std::optional<bool> verdict = run_method();
      const auto end = std::chrono::steady_clock::now();
      const auto micros =
          std::chrono::duration_cast<std::chrono::microseconds>(end - begin).count();
      const std::string verdict_text =
          !verdict ? "unknown" : (*verdict ? "resolving" : "not-resolving");
      if (verdict && *verdict != expected) {
        std::cerr << "disagreement: method " << method << " said " << verdict_text
                  << " but the oracle says "
                  << (expected ? "resolving" : "not-resolving") << " for set of size "
                  << set.size() << " (trial " << trial << ")\n";
        return kExitDisagreement;
      }
      csv << g.k() << ',' << g.a() << ',' << set.size() << ',' << method << ','
          << verdict_text << ',' << micros << ',' << args.seed << '\n';
    }
  }

  if (args.out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream out(args.out);
    if (!out) throw std::invalid_argument("cannot open " + args.out);
    out << csv.str();
  }
  return kExitResolving;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resolving-set toolkit for Hamming graphs"};
  app.require_subcommand(1);

  GraphArgs graph;
  SetSource src;
  Budgets budgets;
  std::string method = "auto";
  std::string ordering = "grevlex";
  std::string strategy = "topdown";
  std::string input_file;
  std::uint64_t seed = 0;
  BenchArgs bench;

  auto* check = app.add_subcommand("check", "decide whether a set resolves");
  add_graph_options(*check, graph);
  add_set_options(*check, src);
  add_budget_options(*check, budgets);
  check->add_option("--method", method, "auto|bruteforce|groebner|enumeration|hypercube")
      ->check(CLI::IsMember({"auto", "bruteforce", "groebner", "enumeration", "hypercube"}));
  check->add_option("--ordering", ordering, "monomial ordering")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));

  auto* reduce = app.add_subcommand("reduce", "shrink a resolving set");
  add_graph_options(*reduce, graph);
  add_set_options(*reduce, src);
  add_budget_options(*reduce, budgets);
  reduce->add_option("--strategy", strategy, "topdown|generative")
      ->check(CLI::IsMember({"topdown", "generative"}));
  reduce->add_option("--seed", seed, "random seed");
  reduce->add_option("--ordering", ordering, "monomial ordering")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));

  auto* generate = app.add_subcommand("generate", "build a resolving set from scratch");
  add_graph_options(*generate, graph);
  add_budget_options(*generate, budgets);
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--ordering", ordering, "monomial ordering")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));

  auto* embed = app.add_subcommand("embed", "embed vertices as distance vectors");
  add_graph_options(*embed, graph);
  add_set_options(*embed, src);
  embed->add_option("input", input_file, "file of vertices to embed")->required();

  auto* bench_cmd = app.add_subcommand("bench", "time the checkers, write CSV");
  add_graph_options(*bench_cmd, graph);
  add_budget_options(*bench_cmd, budgets);
  bench_cmd->add_option("--trials", bench.trials, "number of candidate sets");
  bench_cmd->add_option("--fraction-resolving", bench.fraction_resolving,
                        "fraction of trials that use resolving sets")
      ->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--method", bench.methods,
                        "comma list of groebner,bruteforce,enumeration,hypercube");
  bench_cmd->add_option("--seed", bench.seed, "random seed");
  bench_cmd->add_option("--ordering", ordering, "monomial ordering")
      ->check(CLI::IsMember({"lex", "grlex", "grevlex"}));
  bench_cmd->add_option("--out", bench.out, "CSV output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const hamres::Ordering ord = *hamres::ordering_from_name(ordering);
  try {
    if (check->parsed()) return run_check(graph, src, method, ord, budgets);
    if (reduce->parsed()) return run_reduce(graph, src, strategy, seed, ord, budgets);
    if (generate->parsed()) return run_generate(graph, seed, ord, budgets);
    if (embed->parsed()) return run_embed(graph, src, input_file);
    if (bench_cmd->parsed()) return run_bench(graph, bench, ord, budgets);
  } catch (const hamres::BudgetExhaustedError& e) {
    std::cerr << "unknown: " << e.what() << '\n';
    return kExitBudget;
  } catch (const hamres::SearchBudgetError& e) {
    std::cerr << "unknown: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
