#pragma once

#include <cstddef>
#include <map>

#include "qelim/distribution.hpp"
#include "qelim/function.hpp"
#include "qelim/rational.hpp"

namespace qelim {

/// Exact Pr[f(X) = z] for every label z, X ~ mu. Labels with zero mass are
/// present with value 0.
std::map<Label, Rat> output_distribution(const FiniteFunction& f, const ProductDistribution& mu);

/// Distribution of f(X^i), where X^i is X with coordinate i re-drawn from its
/// marginal independently of X. Always equal to output_distribution(f, mu);
/// kept as a separate computation so that identity can be checked.
std::map<Label, Rat> resampled_output_distribution(const FiniteFunction& f,
                                                   const ProductDistribution& mu,
                                                   std::size_t coord);

/// 1 - max_z Pr[f(X) = z]: the least error of any algorithm that answers
/// without querying.
Rat plurality_error(const FiniteFunction& f, const ProductDistribution& mu);

/// Smallest label of maximal probability.
Label plurality_label(const FiniteFunction& f, const ProductDistribution& mu);

/// inf_i(f, mu) = Pr[f(X) != f(X^i)].
Rat influence(const FiniteFunction& f, const ProductDistribution& mu, std::size_t coord);

struct MaxInfluence {
  Rat value;
  std::size_t coord = 1;  // smallest coordinate attaining `value`
};

MaxInfluence max_influence(const FiniteFunction& f, const ProductDistribution& mu);

struct VarianceRatio {
  Rat variance;   // 4 p0 p1, outputs read as +-1
  Rat ratio;      // variance / inf_max; 0 for constant functions
  bool infinite = false;  // variance > 0 while inf_max = 0
};

/// Informational companion of the influence bound for two-valued f. Throws
/// DomainError when f has more than two output labels.
VarianceRatio variance_ratio(const FiniteFunction& f, const ProductDistribution& mu);

/// Pr[f(X) != g(X)], comparing label values.
Rat closeness(const FiniteFunction& f, const FiniteFunction& g, const ProductDistribution& mu);

}  // namespace qelim
