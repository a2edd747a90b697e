#pragma once

#include <cstddef>
#include <unordered_map>
#include <vector>

#include "qelim/decision_tree.hpp"
#include "qelim/distribution.hpp"
#include "qelim/function.hpp"
#include "qelim/rational.hpp"
#include "qelim/restriction.hpp"

namespace qelim {

/// Largest restriction space (k+1)^n the exact search accepts. 3^12, so
/// n <= 12 for Boolean inputs.
inline constexpr std::size_t kMaxOracleStates = 531441;

/// Exact search for optimal depth-limited decision trees under a product
/// distribution, memoized over restrictions.
///
///   E(rho, 0) = min_z Pr[f != z | rho]
///   E(rho, d) = min(E(rho, 0), min_{free i} sum_a mu_i(a) E(rho + {i <- a}, d - 1))
///
/// Each instance owns its memo tables; separate instances are independent.
class OptimalSearch {
public:
  /// Throws CapacityError when (k+1)^n exceeds kMaxOracleStates.
  OptimalSearch(const FiniteFunction& f, const ProductDistribution& mu);

  /// Least distributional error of any tree of depth <= budget.
  Rat error(std::size_t budget);
  /// A tree attaining error(budget). Ties prefer answering over querying,
  /// then the smallest coordinate, then the smallest label.
  DecisionTree tree(std::size_t budget);

private:
  struct LeafChoice {
    Rat error;
    Label label;
  };

  const std::vector<Rat>& masses(const Restriction& rho);
  const LeafChoice& leaf(const Restriction& rho);
  const Rat& error_at(const Restriction& rho, std::size_t budget);
  Rat query_error(const Restriction& rho, std::size_t coord, std::size_t budget);
  DecisionTree tree_at(const Restriction& rho, std::size_t budget);
  void check_budget(std::size_t budget) const;

  const FiniteFunction& f_;
  const ProductDistribution& mu_;
  std::unordered_map<std::size_t, std::vector<Rat>> masses_;
  std::unordered_map<std::size_t, LeafChoice> leaves_;
  std::unordered_map<std::size_t, Rat> errors_;
};

/// Least error of any depth-<=q tree. Requires 0 <= q <= n.
Rat optimal_error(const FiniteFunction& f, const ProductDistribution& mu, std::size_t q);

/// The epsilon-error distributional query complexity: least q with
/// optimal_error(f, mu, q) <= epsilon.
std::size_t distributional_complexity(const FiniteFunction& f, const ProductDistribution& mu,
                                      const Rat& epsilon);

DecisionTree optimal_tree(const FiniteFunction& f, const ProductDistribution& mu, std::size_t q);

}  // namespace qelim
