#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qelim/decision_tree.hpp"
#include "qelim/distribution.hpp"
#include "qelim/function.hpp"
#include "qelim/rational.hpp"

namespace qelim {

/// Record of removing one root query.
struct EliminationStep {
  std::size_t eliminated_coordinate = 0;
  Rat influence_of_coordinate;
  Rat error_before;
  Rat error_randomized;  // error of the mixture over the root's children
  Symbol chosen_symbol = 0;
  Rat error_after;
  std::size_t depth_after = 0;
};

/// Certificate produced by eliminating every query of a tree.
///
/// The number of steps equals the depth of the input tree, even when some
/// branches were shorter: each step removes one query from every path that
/// still has one, so chain length follows worst-case depth.
struct EliminationTranscript {
  Rat epsilon;  // the declared error the chain starts from
  Rat initial_error;
  std::vector<EliminationStep> steps;
  Rat final_error;
  Label final_label = 0;
  Rat plurality_error;
  Rat inf_max;
  Rat implied_lower_bound;
};

/// Replaces the root query on coordinate i by a fresh draw Y_i ~ mu_i: the
/// result picks child a with probability mu_i(a). Throws PreconditionError on
/// a leaf.
RandomizedTree eliminate_root(const DecisionTree& t, const FiniteFunction& f,
                              const ProductDistribution& mu);

struct Derandomized {
  DecisionTree tree;
  Rat error;
  std::size_t component = 0;
};

/// Fixes the coins: the component of least distributional error, first on
/// ties. Its error never exceeds the mixture's average.
Derandomized derandomize(const RandomizedTree& rt, const FiniteFunction& f,
                         const ProductDistribution& mu);

/// eliminate_root followed by derandomize. Checks
/// error_randomized <= error_before + inf_i exactly and throws
/// std::logic_error if it ever fails.
std::pair<DecisionTree, EliminationStep> eliminate_step(const DecisionTree& t,
                                                        const FiniteFunction& f,
                                                        const ProductDistribution& mu);

/// Eliminates queries until none remain. Requires
/// distributional_error(t, f, mu) <= epsilon (PreconditionError otherwise).
EliminationTranscript full_eliminate(const DecisionTree& t, const FiniteFunction& f,
                                     const ProductDistribution& mu, const Rat& epsilon);

}  // namespace qelim
