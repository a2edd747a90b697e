#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "qelim/distribution.hpp"
#include "qelim/function.hpp"
#include "qelim/rational.hpp"

namespace qelim {

/// Deterministic query algorithm. A node either answers a label or queries
/// a 1-based coordinate and branches on its symbol, one child per symbol.
///
/// Immutable; copies share structure.
class DecisionTree {
public:
  static DecisionTree leaf(Label label);
  static DecisionTree query(std::size_t coord, std::vector<DecisionTree> children);

  [[nodiscard]] bool is_leaf() const;
  [[nodiscard]] Label label() const;
  [[nodiscard]] std::size_t coord() const;
  [[nodiscard]] const std::vector<DecisionTree>& children() const;

  friend bool operator==(const DecisionTree& a, const DecisionTree& b);

private:
  struct Node;
  explicit DecisionTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct TreeViolation {
  std::string path;    // queried coordinates from the root, joined by "→"
  std::string reason;
};

/// Checks that every path is read-once, every Query has exactly k children
/// and every coordinate lies in 1..n. Returns the first violation in
/// pre-order, or nothing when the tree is valid.
std::optional<TreeViolation> validate(const DecisionTree& t, std::size_t arity,
                                      std::size_t alphabet_size);

/// Throws ShapeError carrying the violation when validate() finds one.
void require_valid(const DecisionTree& t, std::size_t arity, std::size_t alphabet_size);

struct RunResult {
  Label output;
  std::vector<std::size_t> queries;
};

RunResult run(const DecisionTree& t, std::span<const Symbol> x);

/// Largest number of Query nodes on a root-to-leaf path.
std::size_t depth(const DecisionTree& t);

/// Exact Pr[t(X) != f(X)], X ~ mu.
Rat distributional_error(const DecisionTree& t, const FiniteFunction& f,
                         const ProductDistribution& mu);

/// Exact expected number of queries made on X ~ mu.
Rat expected_queries(const DecisionTree& t, const ProductDistribution& mu);

struct WeightedTree {
  Rat weight;
  DecisionTree tree;
};

/// Finite mixture of decision trees: a randomized algorithm whose coins pick
/// one tree up front. Weights are strictly positive and sum to 1.
class RandomizedTree {
public:
  explicit RandomizedTree(std::vector<WeightedTree> components);

  [[nodiscard]] const std::vector<WeightedTree>& components() const { return components_; }
  [[nodiscard]] std::size_t size() const { return components_.size(); }

private:
  std::vector<WeightedTree> components_;
};

/// Weight-averaged distributional_error over the components.
Rat randomized_error(const RandomizedTree& rt, const FiniteFunction& f,
                     const ProductDistribution& mu);

}  // namespace qelim
