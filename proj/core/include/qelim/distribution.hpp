#pragma once

#include <cstddef>
#include <vector>

#include "qelim/function.hpp"
#include "qelim/rational.hpp"

namespace qelim {

/// Product distribution over {0..k-1}^n with an independent marginal per
/// coordinate. Marginals need not be identical.
///
/// Every marginal must sum to exactly 1 and give every symbol strictly
/// positive mass; zero-probability symbols are rejected.
///
/// Encoding note for the {-1,+1} convention: symbol 1 stands for -1 and
/// symbol 0 for +1, so the biased distribution "-1 with probability p" is
/// bernoulli(n, p), i.e. Pr[symbol 1] = p.
class ProductDistribution {
public:
  explicit ProductDistribution(std::vector<std::vector<Rat>> marginals);

  static ProductDistribution uniform(std::size_t arity, std::size_t alphabet_size);
  /// k = 2, every coordinate with Pr[1] = p, Pr[0] = 1 - p. Requires 0 < p < 1.
  static ProductDistribution bernoulli(std::size_t arity, const Rat& p);

  [[nodiscard]] std::size_t arity() const { return marginals_.size(); }
  [[nodiscard]] std::size_t alphabet_size() const { return marginals_.front().size(); }
  [[nodiscard]] const std::vector<std::vector<Rat>>& marginals() const { return marginals_; }
  /// Marginal of 1-based coordinate `coord`.
  [[nodiscard]] const std::vector<Rat>& marginal(std::size_t coord) const;
  [[nodiscard]] const Rat& prob(std::size_t coord, Symbol a) const {
    return marginals_[coord - 1][static_cast<std::size_t>(a)];
  }

  /// mu(x) for the input stored at `index` of a table laid out like f's.
  [[nodiscard]] Rat mass_at(const FiniteFunction& f, std::size_t index) const;

  friend bool operator==(const ProductDistribution&, const ProductDistribution&) = default;

private:
  std::vector<std::vector<Rat>> marginals_;
};

/// Throws ShapeError unless mu matches f's arity and alphabet.
void check_compatible(const FiniteFunction& f, const ProductDistribution& mu);

/// mu(x) for every table index of f, in table order.
std::vector<Rat> input_masses(const FiniteFunction& f, const ProductDistribution& mu);

}  // namespace qelim
