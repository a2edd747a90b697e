#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>

#include "qelim/analysis.hpp"
#include "qelim/distribution.hpp"
#include "qelim/function.hpp"
#include "qelim/rational.hpp"

namespace qelim {

/// Influence lower bound on the epsilon-error distributional query
/// complexity:
///
///   D_eps(f) >= (1 - max_z Pr[f(X) = z] - eps) / inf_max(f, mu)
///
/// `bound` is the right-hand side clamped at 0, and 0 whenever inf_max is 0.
/// It is kept as an exact rational; compare it against the integer
/// complexity directly.
struct BoundReport {
  Rat plurality_error;
  Rat inf_max;
  std::size_t inf_argmax = 1;
  Rat epsilon;
  Rat bound;
  /// Variance over inf_max, for two-valued functions only. Informational.
  std::optional<VarianceRatio> variance_ratio;
};

BoundReport theorem1_bound(const FiniteFunction& f, const ProductDistribution& mu,
                           const Rat& epsilon);

struct CorollaryBound {
  Rat delta;           // Pr[f(X) != g(X)]
  BoundReport report;  // theorem1_bound(g, mu, epsilon + delta)
};

/// Smoothed bound: any function g at distance delta from f gives
/// D_eps(f) >= D_{eps+delta}(g) >= theorem1_bound(g, mu, eps + delta).
CorollaryBound corollary_bound(const FiniteFunction& f, const FiniteFunction& g,
                               const ProductDistribution& mu, const Rat& epsilon);

struct BestBound {
  std::size_t index = 0;
  CorollaryBound result;
};

/// Largest corollary bound over the candidates, first index on ties. The
/// caller normally includes f itself. Throws PreconditionError when empty.
BestBound best_bound(const FiniteFunction& f, std::span<const FiniteFunction> candidates,
                     const ProductDistribution& mu, const Rat& epsilon);

}  // namespace qelim
