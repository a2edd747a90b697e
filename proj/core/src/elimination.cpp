#include "qelim/elimination.hpp"

#include <stdexcept>

#include "qelim/analysis.hpp"
#include "qelim/errors.hpp"

namespace qelim {

RandomizedTree eliminate_root(const DecisionTree& t, const FiniteFunction& f,
                              const ProductDistribution& mu) {
  check_compatible(f, mu);
  require_valid(t, f.arity(), f.alphabet_size());
  if (t.is_leaf()) throw PreconditionError("cannot eliminate the root query of a leaf");
  const auto& marginal = mu.marginal(t.coord());
  std::vector<WeightedTree> components;
  components.reserve(t.children().size());
  for (std::size_t a = 0; a < t.children().size(); ++a) {
    components.push_back({marginal[a], t.children()[a]});
  }
  return RandomizedTree(std::move(components));
}

Derandomized derandomize(const RandomizedTree& rt, const FiniteFunction& f,
                         const ProductDistribution& mu) {
  const auto& comps = rt.components();
  Derandomized best{comps.front().tree, distributional_error(comps.front().tree, f, mu), 0};
  for (std::size_t c = 1; c < comps.size(); ++c) {
    Rat e = distributional_error(comps[c].tree, f, mu);
    if (e < best.error) best = {comps[c].tree, std::move(e), c};
  }
  return best;
}

std::pair<DecisionTree, EliminationStep> eliminate_step(const DecisionTree& t,
                                                        const FiniteFunction& f,
                                                        const ProductDistribution& mu) {
  if (t.is_leaf()) throw PreconditionError("eliminate_step needs a tree of depth at least 1");
  const std::size_t depth_before = depth(t);
  const RandomizedTree mixture = eliminate_root(t, f, mu);

  EliminationStep step;
  step.eliminated_coordinate = t.coord();
  step.influence_of_coordinate = influence(f, mu, t.coord());
  step.error_before = distributional_error(t, f, mu);
  step.error_randomized = randomized_error(mixture, f, mu);

  Derandomized chosen = derandomize(mixture, f, mu);
  step.chosen_symbol = static_cast<Symbol>(chosen.component);
  step.error_after = chosen.error;
  step.depth_after = depth(chosen.tree);

  if (step.error_randomized > step.error_before + step.influence_of_coordinate) {
    throw std::logic_error("elimination of coordinate " + std::to_string(step.eliminated_coordinate) +
                           " raised the error from " + step.error_before.str() + " to " +
                           step.error_randomized.str() + ", more than its influence " +
                           step.influence_of_coordinate.str());
  }
  if (step.error_after > step.error_randomized || step.depth_after >= depth_before) {
    throw std::logic_error("derandomization produced a worse or deeper tree");
  }
  return {std::move(chosen.tree), std::move(step)};
}

EliminationTranscript full_eliminate(const DecisionTree& t, const FiniteFunction& f,
                                     const ProductDistribution& mu, const Rat& epsilon) {
  EliminationTranscript out;
  out.epsilon = epsilon;
  out.initial_error = distributional_error(t, f, mu);
  if (out.initial_error > epsilon) {
    throw PreconditionError("declared error " + epsilon.str() + " is below the tree's true error " +
                            out.initial_error.str());
  }

  DecisionTree current = t;
  while (!current.is_leaf()) {
    auto [next, step] = eliminate_step(current, f, mu);
    out.steps.push_back(std::move(step));
    current = std::move(next);
  }
  out.final_error = out.steps.empty() ? out.initial_error : out.steps.back().error_after;
  out.final_label = current.label();
  out.plurality_error = plurality_error(f, mu);
  out.inf_max = max_influence(f, mu).value;
  if (!out.inf_max.is_zero() && out.plurality_error > epsilon) {
    out.implied_lower_bound = (out.plurality_error - epsilon) / out.inf_max;
  }
  return out;
}

}  // namespace qelim
