#pragma once

#include <cstddef>
#include <string_view>

#include "qelim/function.hpp"
#include "qelim/rational.hpp"

namespace qelim {

// All generators produce Boolean functions: k = 2, labels {0, 1}.

FiniteFunction dictator(std::size_t n, std::size_t coord);
FiniteFunction and_function(std::size_t n);
FiniteFunction or_function(std::size_t n);
FiniteFunction parity(std::size_t n);
/// Requires odd n.
FiniteFunction majority(std::size_t n);
FiniteFunction constant(std::size_t n, Label value);

/// Named standard function: "dictator" (uses coord), "and", "or", "parity",
/// "majority". Throws DomainError on an unknown name or even-n majority.
FiniteFunction standard(std::string_view name, std::size_t n, std::size_t coord = 1);

/// OR of s AND-blocks of width t over n = s*t variables. Block j covers
/// coordinates (j-1)*t+1 .. j*t.
FiniteFunction tribes(std::size_t s, std::size_t t);

/// 2^-t (1 - 2^-t)^(s-1): the influence of every variable of tribes(s, t)
/// under the uniform distribution.
Rat tribes_influence_closed_form(std::size_t s, std::size_t t);

/// 1 - (1 - 2^-t)^s: Pr[tribes(s, t) = 1] under the uniform distribution.
Rat tribes_one_probability(std::size_t s, std::size_t t);

struct TribesChoice {
  std::size_t s;
  std::size_t t;
  FiniteFunction f;
};

/// Among factorizations n = s*t, the one with Pr[f = 1] closest to 1/2
/// under the uniform distribution, larger t on ties. Exact balance is
/// usually impossible at small n.
TribesChoice tribes_auto(std::size_t n);

/// Replaces g on the floor(delta * 2^n) first inputs in table order by the
/// first input bit x_1. Requires g Boolean with labels {0, 1}.
FiniteFunction perturb_tribes(const FiniteFunction& g, const Rat& delta);

}  // namespace qelim
