#include "qelim/exact_optimal.hpp"

#include <algorithm>
#include <stdexcept>

#include "qelim/errors.hpp"

namespace qelim {

OptimalSearch::OptimalSearch(const FiniteFunction& f, const ProductDistribution& mu)
    : f_(f), mu_(mu) {
  check_compatible(f, mu);
  std::size_t states = 1;
  for (std::size_t j = 0; j < f.arity(); ++j) {
    states *= f.alphabet_size() + 1;
    if (states > kMaxOracleStates) {
      throw CapacityError("exact search over (" + std::to_string(f.alphabet_size() + 1) + ")^" +
                          std::to_string(f.arity()) + " restrictions exceeds limit of " +
                          std::to_string(kMaxOracleStates));
    }
  }
}

void OptimalSearch::check_budget(std::size_t budget) const {
  if (budget > f_.arity()) {
    throw PreconditionError("query budget " + std::to_string(budget) + " exceeds arity " +
                            std::to_string(f_.arity()));
  }
}

const std::vector<Rat>& OptimalSearch::masses(const Restriction& rho) {
  const std::size_t key = rho.key(f_.alphabet_size());
  if (auto it = masses_.find(key); it != masses_.end()) return it->second;

  std::vector<Rat> out(f_.labels().size());
  std::size_t first_free = 0;
  for (std::size_t j = 1; j <= f_.arity() && first_free == 0; ++j) {
    if (rho.is_free(j)) first_free = j;
  }
  if (first_free == 0) {
    std::size_t index = 0;
    for (std::size_t j = 1; j <= f_.arity(); ++j) {
      index = index * f_.alphabet_size() + static_cast<std::size_t>(*rho.fixed(j));
    }
    out[f_.table()[index]] = Rat(1);
  } else {
    for (std::size_t a = 0; a < f_.alphabet_size(); ++a) {
      const auto s = static_cast<Symbol>(a);
      const std::vector<Rat>& sub = masses(rho.with(first_free, s));
      for (std::size_t z = 0; z < out.size(); ++z) out[z] += mu_.prob(first_free, s) * sub[z];
    }
  }
  return masses_.emplace(key, std::move(out)).first->second;
}

const OptimalSearch::LeafChoice& OptimalSearch::leaf(const Restriction& rho) {
  const std::size_t key = rho.key(f_.alphabet_size());
  if (auto it = leaves_.find(key); it != leaves_.end()) return it->second;
  const std::vector<Rat>& m = masses(rho);
  std::size_t best = 0;
  for (std::size_t z = 1; z < m.size(); ++z) {
    if (m[z] > m[best] || (m[z] == m[best] && f_.labels()[z] < f_.labels()[best])) best = z;
  }
  return leaves_.emplace(key, LeafChoice{Rat(1) - m[best], f_.labels()[best]}).first->second;
}

Rat OptimalSearch::query_error(const Restriction& rho, std::size_t coord, std::size_t budget) {
  Rat total;
  for (std::size_t a = 0; a < f_.alphabet_size(); ++a) {
    const auto s = static_cast<Symbol>(a);
    total += mu_.prob(coord, s) * error_at(rho.with(coord, s), budget - 1);
  }
  return total;
}

const Rat& OptimalSearch::error_at(const Restriction& rho, std::size_t budget) {
  budget = std::min(budget, rho.free_count());
  if (budget == 0) return leaf(rho).error;
  const std::size_t key = rho.key(f_.alphabet_size()) * (f_.arity() + 1) + budget;
  if (auto it = errors_.find(key); it != errors_.end()) return it->second;

  Rat best = leaf(rho).error;
  for (std::size_t i = 1; i <= f_.arity() && !best.is_zero(); ++i) {
    if (!rho.is_free(i)) continue;
    Rat e = query_error(rho, i, budget);
    if (e < best) best = std::move(e);
  }
  return errors_.emplace(key, std::move(best)).first->second;
}

DecisionTree OptimalSearch::tree_at(const Restriction& rho, std::size_t budget) {
  const Rat target = error_at(rho, budget);
  const LeafChoice& answer = leaf(rho);
  if (answer.error == target) return DecisionTree::leaf(answer.label);
  budget = std::min(budget, rho.free_count());
  for (std::size_t i = 1; i <= f_.arity(); ++i) {
    if (!rho.is_free(i) || query_error(rho, i, budget) != target) continue;
    std::vector<DecisionTree> children;
    for (std::size_t a = 0; a < f_.alphabet_size(); ++a) {
      children.push_back(tree_at(rho.with(i, static_cast<Symbol>(a)), budget - 1));
    }
    return DecisionTree::query(i, std::move(children));
  }
  throw std::logic_error("optimal search found no tree attaining its own optimum");
}

Rat OptimalSearch::error(std::size_t budget) {
  check_budget(budget);
  return error_at(Restriction(f_.arity()), budget);
}

DecisionTree OptimalSearch::tree(std::size_t budget) {
  check_budget(budget);
  return tree_at(Restriction(f_.arity()), budget);
}

Rat optimal_error(const FiniteFunction& f, const ProductDistribution& mu, std::size_t q) {
  return OptimalSearch(f, mu).error(q);
}

std::size_t distributional_complexity(const FiniteFunction& f, const ProductDistribution& mu,
                                      const Rat& epsilon) {
  if (!epsilon.is_probability()) throw DomainError("epsilon must lie in [0,1], got " + epsilon.str());
  OptimalSearch search(f, mu);
  for (std::size_t q = 0; q < f.arity(); ++q) {
    if (search.error(q) <= epsilon) return q;
  }
  return f.arity();
}

DecisionTree optimal_tree(const FiniteFunction& f, const ProductDistribution& mu, std::size_t q) {
  return OptimalSearch(f, mu).tree(q);
}

}  // namespace qelim
