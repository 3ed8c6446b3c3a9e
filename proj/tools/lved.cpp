#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "lved/cli.hpp"
#include "lved/graph.hpp"

namespace {

using lved::cli::CommandResult;

std::vector<lved::Vertex> read_set(const std::string& inline_set, const std::string& set_file) {
  if (!set_file.empty()) {
    std::ifstream in(set_file);
    if (!in) throw lved::InputError("cannot open '" + set_file + "'");
    std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return lved::cli::parse_vertex_list(all);
  }
  return lved::cli::parse_vertex_list(inline_set);
}

int emit(const CommandResult& r, bool quiet) {
  if (r.text) {
    std::cout << *r.text;
  } else {
    std::cout << r.report.dump(2) << '\n';
  }
  if (!quiet) std::cerr << r.human;
  return r.exit_code;
}

int fail(int code, const std::string& kind, const std::string& msg) {
  nlohmann::json j = {{"error", kind}, {"message", msg}};
  std::cout << j.dump(2) << '\n';
  std::cerr << "lved: " << msg << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Liar's vertex-edge domination toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false, timing = false;
  app.add_flag("-q,--quiet", quiet, "Suppress the summary on standard error");
  app.add_flag("--timing", timing, "Include wall_ms in reports (makes output nondeterministic)");

  std::string path, problem = "lve", property = "lve", set_inline, set_file, kind;
  std::uint64_t budget = std::uint64_t{1} << 34;
  bool compare = false;

  auto* solve = app.add_subcommand("solve-tree", "Exact solution on a tree or labelled tree");
  solve->add_option("input", path, "Edge list or labelled tree file")->required();

  auto* exact = app.add_subcommand("exact", "Exhaustive optimum (at most 64 vertices)");
  exact->add_option("input", path)->required();
  exact->add_option("--problem", problem, "lve | kve:k | liars | vc | lkt");
  exact->add_option("--budget", budget, "Maximum subsets examined");

  auto* approx = app.add_subcommand("approx", "Greedy approximation on a general graph");
  approx->add_option("input", path)->required();
  approx->add_flag("--compare-exact", compare, "Also run the oracle and report the ratio");
  approx->add_option("--budget", budget, "Oracle budget for --compare-exact");

  auto* verify = app.add_subcommand("verify", "Check a set against a property");
  verify->add_option("input", path)->required();
  verify->add_option("--set", set_inline, "Inline ids, e.g. 0,1,2");
  verify->add_option("--set-file", set_file, "File of whitespace or comma separated ids");
  verify->add_option("--property", property, "lve | kve:k | liars | vc | lkt");

  lved::cli::ReduceOptions ro;
  std::string out_path;
  auto* reduce = app.add_subcommand("reduce", "Hardness gadgets and solution maps");
  reduce->add_option("kind", ro.kind, "vc | ld")->required();
  reduce->add_option("input", path)->required();
  reduce->add_option("--emit", ro.emit, "instance | solution");
  reduce->add_option("--direction", ro.direction, "forward | backward (with --emit solution)");
  reduce->add_option("--set", set_inline, "Source solution; computed when omitted");
  reduce->add_option("--set-file", set_file, "Source solution file");
  reduce->add_option("--budget", ro.budget, "Oracle budget when no set is given");
  reduce->add_option("--out", out_path, "Write the gadget graph as an edge list");

  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 1;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("kind", kind, "path | star | cycle | random_tree | gnp")->required();
  gen->add_option("n", n)->required();
  gen->add_option("--p", p, "Edge probability for gnp");
  gen->add_option("--seed", seed);
  gen->add_option("--out", gen_out, "Write here instead of standard output");

  std::vector<std::size_t> sizes{10000, 100000, 1000000};
  std::size_t reps = 5;
  auto* bench = app.add_subcommand("bench", "Tree solver runtime scaling");
  bench->add_option("--sizes", sizes)->delimiter(',');
  bench->add_option("--reps", reps);
  bench->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : lved::cli::kInputError;
  }

  const lved::cli::Common common{timing};
  try {
    if (*solve) return emit(lved::cli::cmd_solve_tree(path, common), quiet);
    if (*exact) return emit(lved::cli::cmd_exact(path, problem, budget, common), quiet);
    if (*approx) return emit(lved::cli::cmd_approx(path, compare, budget, common), quiet);
    if (*verify) {
      if (set_inline.empty() == set_file.empty() && !set_file.empty()) {
        throw lved::InputError("give either --set or --set-file");
      }
      return emit(lved::cli::cmd_verify(path, property, read_set(set_inline, set_file)), quiet);
    }
    if (*reduce) {
      if (!set_inline.empty() || !set_file.empty()) ro.set = read_set(set_inline, set_file);
      if (!out_path.empty()) ro.out = out_path;
      return emit(lved::cli::cmd_reduce(path, ro), quiet);
    }
    if (*gen) {
      CommandResult r = lved::cli::cmd_gen(kind, n, p, seed);
      if (!gen_out.empty()) {
        std::ofstream out(gen_out, std::ios::binary);
        if (!out) throw lved::InputError("cannot write '" + gen_out + "'");
        out << *r.text;
        r.report["written"] = gen_out;
        r.text.reset();
      }
      return emit(r, quiet);
    }
    if (*bench) return emit(lved::cli::cmd_bench(sizes, reps, seed), quiet);
  } catch (const lved::InputError& e) {
    return fail(lved::cli::kInputError, "input", e.what());
  } catch (const lved::StructureError& e) {
    return fail(lved::cli::kInputError, "structure", e.what());
  } catch (const lved::ContractError& e) {
    return fail(lved::cli::kViolated, "contract", e.what());
  } catch (const lved::ScenarioError& e) {
    return fail(lved::cli::kInputError, "scenario", e.what());
  }
  return 0;
}
