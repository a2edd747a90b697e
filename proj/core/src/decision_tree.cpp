#include "qelim/decision_tree.hpp"

#include <algorithm>

#include "qelim/errors.hpp"
#include "qelim/restriction.hpp"

namespace qelim {

struct DecisionTree::Node {
  bool leaf = true;
  Label label = 0;
  std::size_t coord = 0;
  std::vector<DecisionTree> children;
};

DecisionTree DecisionTree::leaf(Label label) {
  return DecisionTree(std::make_shared<const Node>(Node{true, label, 0, {}}));
}

DecisionTree DecisionTree::query(std::size_t coord, std::vector<DecisionTree> children) {
  return DecisionTree(std::make_shared<const Node>(Node{false, 0, coord, std::move(children)}));
}

bool DecisionTree::is_leaf() const { return node_->leaf; }

Label DecisionTree::label() const {
  if (!node_->leaf) throw PreconditionError("label() called on a query node");
  return node_->label;
}

std::size_t DecisionTree::coord() const {
  if (node_->leaf) throw PreconditionError("coord() called on a leaf");
  return node_->coord;
}

const std::vector<DecisionTree>& DecisionTree::children() const { return node_->children; }

bool operator==(const DecisionTree& a, const DecisionTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.label() == b.label();
  return a.coord() == b.coord() && a.children() == b.children();
}

namespace {

std::string join_path(const std::vector<std::size_t>& path) {
  std::string out;
  for (std::size_t c : path) {
    if (!out.empty()) out += "→";
    out += std::to_string(c);
  }
  return out;
}

std::optional<TreeViolation> validate_at(const DecisionTree& t, std::size_t n, std::size_t k,
                                         std::vector<std::size_t>& path) {
  if (t.is_leaf()) return std::nullopt;
  const std::size_t c = t.coord();
  path.push_back(c);
  if (c < 1 || c > n) {
    return TreeViolation{join_path(path),
                         "coordinate " + std::to_string(c) + " outside 1.." + std::to_string(n)};
  }
  if (std::count(path.begin(), path.end(), c) > 1) {
    return TreeViolation{join_path(path),
                         "coordinate " + std::to_string(c) + " queried twice on one path"};
  }
  if (t.children().size() != k) {
    return TreeViolation{join_path(path), "query has " + std::to_string(t.children().size()) +
                                              " children, expected " + std::to_string(k)};
  }
  for (const DecisionTree& child : t.children()) {
    if (auto v = validate_at(child, n, k, path)) return v;
  }
  path.pop_back();
  return std::nullopt;
}

Rat error_under(const DecisionTree& t, const FiniteFunction& f, const ProductDistribution& mu,
                const Restriction& rho) {
  if (t.is_leaf()) {
    const auto z = f.label_index(t.label());
    if (!z) return Rat(1);
    return Rat(1) - conditional_label_masses(f, mu, rho)[*z];
  }
  Rat total;
  for (std::size_t a = 0; a < t.children().size(); ++a) {
    const auto s = static_cast<Symbol>(a);
    total += mu.prob(t.coord(), s) * error_under(t.children()[a], f, mu, rho.with(t.coord(), s));
  }
  return total;
}

Rat expected_queries_at(const DecisionTree& t, const ProductDistribution& mu) {
  if (t.is_leaf()) return Rat(0);
  Rat total(1);
  for (std::size_t a = 0; a < t.children().size(); ++a) {
    total += mu.prob(t.coord(), static_cast<Symbol>(a)) * expected_queries_at(t.children()[a], mu);
  }
  return total;
}

}  // namespace

std::optional<TreeViolation> validate(const DecisionTree& t, std::size_t arity,
                                      std::size_t alphabet_size) {
  std::vector<std::size_t> path;
  return validate_at(t, arity, alphabet_size, path);
}

void require_valid(const DecisionTree& t, std::size_t arity, std::size_t alphabet_size) {
  if (auto v = validate(t, arity, alphabet_size)) {
    throw ShapeError("invalid decision tree at path \"" + v->path + "\": " + v->reason);
  }
}

RunResult run(const DecisionTree& t, std::span<const Symbol> x) {
  RunResult result{0, {}};
  const DecisionTree* node = &t;
  while (!node->is_leaf()) {
    const std::size_t c = node->coord();
    if (c < 1 || c > x.size()) {
      throw ShapeError("tree queries coordinate " + std::to_string(c) + " of an input of length " +
                       std::to_string(x.size()));
    }
    const Symbol s = x[c - 1];
    if (s < 0 || static_cast<std::size_t>(s) >= node->children().size()) {
      throw ShapeError("input symbol " + std::to_string(s) + " at coordinate " + std::to_string(c) +
                       " is outside the alphabet");
    }
    result.queries.push_back(c);
    node = &node->children()[static_cast<std::size_t>(s)];
  }
  result.output = node->label();
  return result;
}

std::size_t depth(const DecisionTree& t) {
  if (t.is_leaf()) return 0;
  std::size_t deepest = 0;
  for (const DecisionTree& child : t.children()) deepest = std::max(deepest, depth(child));
  return deepest + 1;
}

Rat distributional_error(const DecisionTree& t, const FiniteFunction& f,
                         const ProductDistribution& mu) {
  check_compatible(f, mu);
  require_valid(t, f.arity(), f.alphabet_size());
  return error_under(t, f, mu, Restriction(f.arity()));
}

Rat expected_queries(const DecisionTree& t, const ProductDistribution& mu) {
  require_valid(t, mu.arity(), mu.alphabet_size());
  return expected_queries_at(t, mu);
}

RandomizedTree::RandomizedTree(std::vector<WeightedTree> components)
    : components_(std::move(components)) {
  if (components_.empty()) throw ShapeError("randomized tree has no components");
  Rat total;
  for (const auto& c : components_) {
    if (c.weight <= Rat(0)) throw DomainError("mixture weight " + c.weight.str() + " is not positive");
    total += c.weight;
  }
  if (total != Rat(1)) throw DomainError("mixture weights sum to " + total.str() + ", not 1");
}

Rat randomized_error(const RandomizedTree& rt, const FiniteFunction& f,
                     const ProductDistribution& mu) {
  Rat total;
  for (const auto& c : rt.components()) total += c.weight * distributional_error(c.tree, f, mu);
  return total;
}

}  // namespace qelim
