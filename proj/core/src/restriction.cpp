#include "qelim/restriction.hpp"

#include <algorithm>

#include "qelim/errors.hpp"

namespace qelim {

std::optional<Symbol> Restriction::fixed(std::size_t coord) const {
  const Symbol s = entries_[coord - 1];
  if (s == kFree) return std::nullopt;
  return s;
}

std::size_t Restriction::free_count() const {
  return static_cast<std::size_t>(std::count(entries_.begin(), entries_.end(), kFree));
}

Restriction Restriction::with(std::size_t coord, Symbol a) const {
  Restriction copy = *this;
  copy.fix(coord, a);
  return copy;
}

void Restriction::fix(std::size_t coord, Symbol a) {
  check_coordinate(coord, arity());
  if (!is_free(coord)) {
    throw PreconditionError("coordinate " + std::to_string(coord) + " is already fixed");
  }
  entries_[coord - 1] = a;
}

std::size_t Restriction::key(std::size_t alphabet_size) const {
  std::size_t key = 0;
  for (Symbol s : entries_) key = key * (alphabet_size + 1) + static_cast<std::size_t>(s + 1);
  return key;
}

std::string Restriction::str() const {
  std::string out;
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (entries_[j] == kFree) continue;
    if (!out.empty()) out += ',';
    out += "x" + std::to_string(j + 1) + "=" + std::to_string(entries_[j]);
  }
  return out.empty() ? "*" : out;
}

namespace {

void accumulate(const FiniteFunction& f, const ProductDistribution& mu, const Restriction& rho,
                std::size_t coord, std::size_t index, const Rat& mass, std::vector<Rat>& out) {
  if (coord > f.arity()) {
    out[f.table()[index]] += mass;
    return;
  }
  const std::size_t stride = f.stride(coord);
  if (auto a = rho.fixed(coord)) {
    accumulate(f, mu, rho, coord + 1, index + static_cast<std::size_t>(*a) * stride, mass, out);
    return;
  }
  for (std::size_t a = 0; a < f.alphabet_size(); ++a) {
    accumulate(f, mu, rho, coord + 1, index + a * stride,
               mass * mu.prob(coord, static_cast<Symbol>(a)), out);
  }
}

}  // namespace

std::vector<Rat> conditional_label_masses(const FiniteFunction& f, const ProductDistribution& mu,
                                          const Restriction& rho) {
  check_compatible(f, mu);
  if (rho.arity() != f.arity()) throw ShapeError("restriction arity does not match function");
  std::vector<Rat> out(f.labels().size());
  accumulate(f, mu, rho, 1, 0, Rat(1), out);
  return out;
}

}  // namespace qelim
