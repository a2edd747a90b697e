#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qelim/distribution.hpp"
#include "qelim/function.hpp"
#include "qelim/rational.hpp"

namespace qelim {

/// Partial assignment: every coordinate is either free or fixed to a symbol.
class Restriction {
public:
  explicit Restriction(std::size_t arity) : entries_(arity, kFree) {}

  [[nodiscard]] std::size_t arity() const { return entries_.size(); }
  [[nodiscard]] bool is_free(std::size_t coord) const { return entries_[coord - 1] == kFree; }
  [[nodiscard]] std::optional<Symbol> fixed(std::size_t coord) const;
  [[nodiscard]] std::size_t free_count() const;

  /// Copy with `coord` fixed to `a`. Throws PreconditionError when `coord` is
  /// already fixed.
  [[nodiscard]] Restriction with(std::size_t coord, Symbol a) const;
  void fix(std::size_t coord, Symbol a);

  /// Dense key in [0, (k+1)^n): base-(k+1) digits, free = 0, symbol a = a+1.
  [[nodiscard]] std::size_t key(std::size_t alphabet_size) const;

  /// Fixed coordinates written as "x1=0,x3=1"; "*" when nothing is fixed.
  [[nodiscard]] std::string str() const;

  friend bool operator==(const Restriction&, const Restriction&) = default;

private:
  static constexpr Symbol kFree = -1;
  std::vector<Symbol> entries_;
};

/// Pr[f(X) = z | X agrees with rho] for every label index z, with the free
/// coordinates keeping their marginals under mu.
std::vector<Rat> conditional_label_masses(const FiniteFunction& f, const ProductDistribution& mu,
                                          const Restriction& rho);

}  // namespace qelim
