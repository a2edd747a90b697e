#include "qelim/analysis.hpp"

#include <algorithm>

#include "qelim/errors.hpp"

namespace qelim {

namespace {

std::map<Label, Rat> empty_distribution(const FiniteFunction& f) {
  std::map<Label, Rat> out;
  for (Label z : f.labels()) out.emplace(z, Rat(0));
  return out;
}

// Calls visit(base_index, rest_mass) once per assignment to the coordinates
// other than `coord`, with that coordinate set to 0 in base_index.
template <typename Visit>
void for_each_rest(const FiniteFunction& f, const ProductDistribution& mu, std::size_t coord,
                   Visit&& visit) {
  const std::size_t stride = f.stride(coord);
  const std::size_t k = f.alphabet_size();
  for (std::size_t index = 0; index < f.size(); ++index) {
    if ((index / stride) % k != 0) continue;
    Rat rest(1);
    for (std::size_t j = 1; j <= f.arity(); ++j) {
      if (j != coord) rest *= mu.prob(j, f.symbol_at(index, j));
    }
    visit(index, rest);
  }
}

}  // namespace

std::map<Label, Rat> output_distribution(const FiniteFunction& f, const ProductDistribution& mu) {
  const std::vector<Rat> masses = input_masses(f, mu);
  std::map<Label, Rat> out = empty_distribution(f);
  for (std::size_t index = 0; index < f.size(); ++index) out[f.label_at(index)] += masses[index];
  return out;
}

std::map<Label, Rat> resampled_output_distribution(const FiniteFunction& f,
                                                   const ProductDistribution& mu,
                                                   std::size_t coord) {
  check_compatible(f, mu);
  check_coordinate(coord, f.arity());
  const std::vector<Rat> masses = input_masses(f, mu);
  const std::size_t stride = f.stride(coord);
  const std::size_t k = f.alphabet_size();
  std::map<Label, Rat> out = empty_distribution(f);
  for (std::size_t index = 0; index < f.size(); ++index) {
    const auto own = static_cast<std::size_t>(f.symbol_at(index, coord));
    const std::size_t base = index - own * stride;
    for (std::size_t a = 0; a < k; ++a) {
      out[f.label_at(base + a * stride)] += masses[index] * mu.prob(coord, static_cast<Symbol>(a));
    }
  }
  return out;
}

Rat plurality_error(const FiniteFunction& f, const ProductDistribution& mu) {
  const auto dist = output_distribution(f, mu);
  const auto best = std::max_element(dist.begin(), dist.end(),
                                     [](const auto& a, const auto& b) { return a.second < b.second; });
  return Rat(1) - best->second;
}

Label plurality_label(const FiniteFunction& f, const ProductDistribution& mu) {
  const auto dist = output_distribution(f, mu);
  // std::map iterates labels in increasing order and max_element keeps the
  // first maximum, so ties resolve to the smallest label.
  return std::max_element(dist.begin(), dist.end(),
                          [](const auto& a, const auto& b) { return a.second < b.second; })
      ->first;
}

Rat influence(const FiniteFunction& f, const ProductDistribution& mu, std::size_t coord) {
  check_compatible(f, mu);
  check_coordinate(coord, f.arity());
  const std::size_t stride = f.stride(coord);
  const std::size_t k = f.alphabet_size();
  Rat total;
  for_each_rest(f, mu, coord, [&](std::size_t base, const Rat& rest) {
    Rat disagree;
    for (std::size_t b = 0; b < k; ++b) {
      for (std::size_t a = 0; a < k; ++a) {
        if (f.table()[base + b * stride] != f.table()[base + a * stride]) {
          disagree += mu.prob(coord, static_cast<Symbol>(b)) * mu.prob(coord, static_cast<Symbol>(a));
        }
      }
    }
    total += rest * disagree;
  });
  return total;
}

MaxInfluence max_influence(const FiniteFunction& f, const ProductDistribution& mu) {
  MaxInfluence best{influence(f, mu, 1), 1};
  for (std::size_t i = 2; i <= f.arity(); ++i) {
    Rat v = influence(f, mu, i);
    if (v > best.value) best = {std::move(v), i};
  }
  return best;
}

VarianceRatio variance_ratio(const FiniteFunction& f, const ProductDistribution& mu) {
  if (f.labels().size() > 2) {
    throw DomainError("variance ratio needs a two-valued function, got " +
                      std::to_string(f.labels().size()) + " labels");
  }
  const auto dist = output_distribution(f, mu);
  VarianceRatio out;
  if (dist.size() == 2) out.variance = Rat(4) * dist.begin()->second * dist.rbegin()->second;
  const Rat inf_max = max_influence(f, mu).value;
  if (!inf_max.is_zero()) {
    out.ratio = out.variance / inf_max;
  } else if (!out.variance.is_zero()) {
    out.infinite = true;
  }
  return out;
}

Rat closeness(const FiniteFunction& f, const FiniteFunction& g, const ProductDistribution& mu) {
  check_same_shape(f, g);
  const std::vector<Rat> masses = input_masses(f, mu);
  Rat total;
  for (std::size_t index = 0; index < f.size(); ++index) {
    if (f.label_at(index) != g.label_at(index)) total += masses[index];
  }
  return total;
}

}  // namespace qelim
