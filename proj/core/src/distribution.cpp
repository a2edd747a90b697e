#include "qelim/distribution.hpp"

#include <string>

#include "qelim/errors.hpp"

namespace qelim {

ProductDistribution::ProductDistribution(std::vector<std::vector<Rat>> marginals)
    : marginals_(std::move(marginals)) {
  if (marginals_.empty()) throw ShapeError("distribution arity must be positive");
  const std::size_t k = marginals_.front().size();
  if (k < 2) throw ShapeError("alphabet size must be at least 2");
  for (std::size_t j = 0; j < marginals_.size(); ++j) {
    const auto& m = marginals_[j];
    const std::string where = "marginal of coordinate " + std::to_string(j + 1);
    if (m.size() != k) throw ShapeError(where + " has the wrong width");
    Rat total;
    for (const Rat& p : m) {
      if (p <= Rat(0)) throw DomainError(where + " has a non-positive probability " + p.str());
      total += p;
    }
    if (total != Rat(1)) throw DomainError(where + " sums to " + total.str() + ", not 1");
  }
}

ProductDistribution ProductDistribution::uniform(std::size_t arity, std::size_t alphabet_size) {
  if (alphabet_size < 2) throw ShapeError("alphabet size must be at least 2");
  const Rat p(1, static_cast<std::int64_t>(alphabet_size));
  return ProductDistribution(
      std::vector<std::vector<Rat>>(arity, std::vector<Rat>(alphabet_size, p)));
}

ProductDistribution ProductDistribution::bernoulli(std::size_t arity, const Rat& p) {
  if (p <= Rat(0) || p >= Rat(1)) {
    throw DomainError("bias p must lie strictly between 0 and 1, got " + p.str());
  }
  return ProductDistribution(std::vector<std::vector<Rat>>(arity, {Rat(1) - p, p}));
}

const std::vector<Rat>& ProductDistribution::marginal(std::size_t coord) const {
  check_coordinate(coord, arity());
  return marginals_[coord - 1];
}

Rat ProductDistribution::mass_at(const FiniteFunction& f, std::size_t index) const {
  Rat mass(1);
  for (std::size_t j = 1; j <= f.arity(); ++j) mass *= prob(j, f.symbol_at(index, j));
  return mass;
}

void check_compatible(const FiniteFunction& f, const ProductDistribution& mu) {
  if (f.arity() != mu.arity()) {
    throw ShapeError("function arity " + std::to_string(f.arity()) +
                     " does not match distribution arity " + std::to_string(mu.arity()));
  }
  if (f.alphabet_size() != mu.alphabet_size()) {
    throw ShapeError("function alphabet size " + std::to_string(f.alphabet_size()) +
                     " does not match marginal width " + std::to_string(mu.alphabet_size()));
  }
}

std::vector<Rat> input_masses(const FiniteFunction& f, const ProductDistribution& mu) {
  check_compatible(f, mu);
  // Built coordinate by coordinate: masses of the first j coordinates, then
  // each extended by the k symbols of coordinate j+1.
  std::vector<Rat> masses{Rat(1)};
  const std::size_t k = f.alphabet_size();
  for (std::size_t j = 1; j <= f.arity(); ++j) {
    std::vector<Rat> next;
    next.reserve(masses.size() * k);
    for (const Rat& m : masses) {
      for (std::size_t a = 0; a < k; ++a) next.push_back(m * mu.prob(j, static_cast<Symbol>(a)));
    }
    masses = std::move(next);
  }
  return masses;
}

}  // namespace qelim
