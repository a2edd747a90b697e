// qelim: influence bounds, query elimination and exact distributional query
// complexity for small functions given as truth tables.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qelim/qelim.hpp"

namespace {

using namespace qelim;

struct DistributionArgs {
  bool uniform = false;
  std::string p;
};

void add_distribution_flags(CLI::App* cmd, DistributionArgs& args) {
  auto* uniform = cmd->add_flag("--uniform", args.uniform, "Uniform marginals on every coordinate");
  auto* p = cmd->add_option("--p", args.p, "Every coordinate has Pr[1] = p (k = 2), as num/den");
  uniform->excludes(p);
}

Rat parse_rational_arg(const std::string& text, const char* option) {
  try {
    return Rat::parse(text);
  } catch (const ParseError&) {
    throw CLI::ValidationError(option, "expected a rational num/den, got '" + text + "'");
  }
}

ProductDistribution load_distribution(const FiniteFunction& f, const DistributionArgs& args,
                                      const std::optional<std::string>& file) {
  const int sources = (args.uniform ? 1 : 0) + (args.p.empty() ? 0 : 1) + (file ? 1 : 0);
  if (sources != 1) {
    throw CLI::ValidationError("distribution",
                               "give exactly one of a distribution file, --uniform, or --p");
  }
  if (args.uniform) return ProductDistribution::uniform(f.arity(), f.alphabet_size());
  if (!args.p.empty()) {
    if (f.alphabet_size() != 2) throw ShapeError("--p needs a Boolean alphabet (k = 2)");
    return ProductDistribution::bernoulli(f.arity(), parse_rational_arg(args.p, "--p"));
  }
  ProductDistribution mu = io::parse_distribution(io::read_file(*file), *file);
  check_compatible(f, mu);
  return mu;
}

FiniteFunction load_function(const std::string& path) {
  return io::parse_function(io::read_file(path), path);
}

// Positional files: the function, then an optional distribution file, then
// `trailing` required files (the tree for eliminate).
struct Positionals {
  std::string function;
  std::optional<std::string> distribution;
  std::vector<std::string> rest;
};

Positionals split_files(const std::vector<std::string>& files, std::size_t trailing) {
  if (files.size() < 1 + trailing || files.size() > 2 + trailing) {
    throw CLI::ValidationError("files", "unexpected number of file arguments");
  }
  Positionals out;
  out.function = files.front();
  if (files.size() == 2 + trailing) out.distribution = files[1];
  out.rest.assign(files.end() - static_cast<std::ptrdiff_t>(trailing), files.end());
  return out;
}

std::size_t parse_size(const std::string& text) {
  std::size_t pos = 0;
  unsigned long value = 0;
  try {
    value = std::stoul(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty() || text[0] == '-') {
    throw CLI::ValidationError("gen", "expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

FiniteFunction generate(const std::string& name, const std::vector<std::string>& params) {
  auto need = [&](std::size_t count) {
    if (params.size() != count) {
      throw CLI::ValidationError("gen", name + " takes " + std::to_string(count) + " parameter(s)");
    }
  };
  if (name == "tribes") {
    need(2);
    return tribes(parse_size(params[0]), parse_size(params[1]));
  }
  if (name == "tribes-auto") {
    need(1);
    return tribes_auto(parse_size(params[0])).f;
  }
  if (name == "perturbed-tribes") {
    need(3);
    return perturb_tribes(tribes(parse_size(params[0]), parse_size(params[1])),
                          parse_rational_arg(params[2], "delta"));
  }
  if (name == "dictator") {
    need(2);
    return dictator(parse_size(params[0]), parse_size(params[1]));
  }
  if (name == "constant") {
    need(2);
    return constant(parse_size(params[0]), static_cast<Label>(parse_size(params[1])));
  }
  if (name == "and" || name == "or" || name == "parity" || name == "majority") {
    need(1);
    return standard(name, parse_size(params[0]));
  }
  throw CLI::ValidationError("gen", "unknown generator '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Influence lower bounds and query elimination on explicit truth tables"};
  app.require_subcommand(1);

  DistributionArgs dist;
  std::vector<std::string> files;
  std::string eps_text = "0/1";
  std::string close_file;
  std::string emit_tree;
  std::string gen_name;
  std::vector<std::string> gen_params;
  std::string gen_out;
  std::string suite;

  auto* analyze = app.add_subcommand("analyze", "Output distribution, influences, variance ratio");
  analyze->add_option("files", files, "FUNCTION [DISTRIBUTION]")->required();
  add_distribution_flags(analyze, dist);

  auto* bound = app.add_subcommand("bound", "Influence lower bound, optionally via a close function");
  bound->add_option("files", files, "FUNCTION [DISTRIBUTION]")->required();
  add_distribution_flags(bound, dist);
  bound->add_option("--eps", eps_text, "Allowed distributional error, num/den");
  bound->add_option("--close", close_file, "Function file of a nearby function g");

  auto* eliminate = app.add_subcommand("eliminate", "Query-elimination transcript for a tree");
  eliminate->add_option("files", files, "FUNCTION [DISTRIBUTION] TREE")->required();
  add_distribution_flags(eliminate, dist);
  eliminate->add_option("--eps", eps_text, "Declared error of the tree, num/den");

  auto* optimal = app.add_subcommand("optimal", "Exact distributional query complexity");
  optimal->add_option("files", files, "FUNCTION [DISTRIBUTION]")->required();
  add_distribution_flags(optimal, dist);
  optimal->add_option("--eps", eps_text, "Allowed distributional error, num/den");
  optimal->add_option("--emit-tree", emit_tree, "Write an optimal tree to this file");

  auto* gen = app.add_subcommand("gen", "Write a generated function file");
  gen->add_option("name", gen_name,
                  "tribes S T | tribes-auto N | perturbed-tribes S T DELTA | dictator N J | "
                  "and N | or N | parity N | majority N | constant N V")
      ->required();
  gen->add_option("params", gen_params, "Generator parameters");
  gen->add_option("-o,--out", gen_out, "Output file (default: stdout)");

  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite");
  verify_cmd->add_option("suite", suite, "Suite name or 'all'")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      const Positionals pos = split_files(files, 0);
      const FiniteFunction f = load_function(pos.function);
      const ProductDistribution mu = load_distribution(f, dist, pos.distribution);
      std::cout << io::analysis_report(f, mu).str();
    } else if (bound->parsed()) {
      const Positionals pos = split_files(files, 0);
      const FiniteFunction f = load_function(pos.function);
      const ProductDistribution mu = load_distribution(f, dist, pos.distribution);
      const Rat eps = parse_rational_arg(eps_text, "--eps");
      if (close_file.empty()) {
        std::cout << io::bound_report(theorem1_bound(f, mu, eps)).str();
      } else {
        const FiniteFunction g = load_function(close_file);
        std::cout << io::corollary_report(corollary_bound(f, g, mu, eps)).str();
      }
    } else if (eliminate->parsed()) {
      const Positionals pos = split_files(files, 1);
      const FiniteFunction f = load_function(pos.function);
      const ProductDistribution mu = load_distribution(f, dist, pos.distribution);
      const Rat eps = parse_rational_arg(eps_text, "--eps");
      const std::string& tree_file = pos.rest.front();
      const DecisionTree t = io::parse_tree(io::read_file(tree_file), f.alphabet_size(), tree_file);
      if (auto v = validate(t, f.arity(), f.alphabet_size())) {
        std::cerr << "violation_path\t" << v->path << "\nviolation\t" << v->reason << '\n';
        return 1;
      }
      std::cout << io::transcript_report(full_eliminate(t, f, mu, eps)).str();
    } else if (optimal->parsed()) {
      const Positionals pos = split_files(files, 0);
      const FiniteFunction f = load_function(pos.function);
      const ProductDistribution mu = load_distribution(f, dist, pos.distribution);
      const Rat eps = parse_rational_arg(eps_text, "--eps");
      OptimalSearch search(f, mu);
      const std::size_t d = distributional_complexity(f, mu, eps);
      io::Report r;
      r.add("distributional_complexity", d);
      r.add("optimal_error", search.error(d));
      std::cout << r.str();
      if (!emit_tree.empty()) io::write_file(emit_tree, io::serialize_tree(search.tree(d)));
    } else if (gen->parsed()) {
      const std::string text = io::serialize_function(generate(gen_name, gen_params));
      if (gen_out.empty()) {
        std::cout << text;
      } else {
        io::write_file(gen_out, text);
      }
    } else if (verify_cmd->parsed()) {
      bool all_passed = true;
      for (const verify::SuiteResult& r : verify::run_suite(suite)) {
        std::cout << r.name << '\t' << (r.passed() ? "pass" : "FAIL") << " (" << r.checks
                  << " checks)\n";
        const std::size_t shown = std::min<std::size_t>(r.failures.size(), 10);
        for (std::size_t i = 0; i < shown; ++i) std::cout << r.name << ".failure\t" << r.failures[i] << '\n';
        if (shown < r.failures.size()) {
          std::cout << r.name << ".failure\t... " << r.failures.size() - shown << " more\n";
        }
        all_passed = all_passed && r.passed();
      }
      std::cout << "result\t" << (all_passed ? "pass" : "FAIL") << '\n';
      return all_passed ? 0 : 1;
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
