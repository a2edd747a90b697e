#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "qelim/decision_tree.hpp"
#include "qelim/function.hpp"
#include "qelim/rational.hpp"

namespace qelim::verify {

struct NamedFunction {
  std::string name;
  FiniteFunction f;
};

/// Test corpus on n <= 4: dictator, AND, OR and parity for n = 2..4,
/// majority(3), tribes(2,2) and tribes(2,2) perturbed on a 1/4 fraction.
std::vector<NamedFunction> grid_functions();

/// Biases used by the grid: Pr[symbol 1] in {1/4, 1/2, 3/4}.
std::vector<Rat> grid_biases();
/// Declared errors used by the grid: {0, 1/10, 1/4}.
std::vector<Rat> grid_epsilons();

/// Every valid tree over n coordinates and alphabet size k with depth at
/// most max_depth and leaves drawn from `labels`, in a fixed order.
std::vector<DecisionTree> all_trees(std::size_t n, std::size_t k, const std::vector<Label>& labels,
                                    std::size_t max_depth);

struct SuiteResult {
  std::string name;
  std::size_t checks = 0;
  std::vector<std::string> failures;
  [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Names accepted by run_suite, in the order "all" runs them.
std::vector<std::string> suite_names();

/// Runs one invariant suite by name ("all" runs every suite). Throws
/// DomainError on an unknown name.
std::vector<SuiteResult> run_suite(std::string_view name);

}  // namespace qelim::verify
