#include "qelim/generators.hpp"

#include <cstdint>
#include <string>
#include <vector>

#include "qelim/errors.hpp"

namespace qelim {

namespace {

// Boolean function from a predicate on the bits of the input (bits[0] = x_1).
template <typename Pred>
FiniteFunction boolean(std::size_t n, Pred&& pred) {
  if (n == 0) throw ShapeError("function arity must be positive");
  const std::size_t size = table_size(n, 2);
  std::vector<std::uint32_t> table(size);
  std::vector<int> bits(n);
  for (std::size_t index = 0; index < size; ++index) {
    for (std::size_t j = 0; j < n; ++j) bits[j] = static_cast<int>((index >> (n - 1 - j)) & 1U);
    table[index] = pred(bits) ? 1 : 0;
  }
  return FiniteFunction(n, 2, {0, 1}, std::move(table));
}

Rat power(const Rat& base, std::size_t e) {
  Rat out(1);
  for (std::size_t i = 0; i < e; ++i) out *= base;
  return out;
}

}  // namespace

FiniteFunction dictator(std::size_t n, std::size_t coord) {
  check_coordinate(coord, n);
  return boolean(n, [&](const std::vector<int>& x) { return x[coord - 1] == 1; });
}

FiniteFunction and_function(std::size_t n) {
  return boolean(n, [](const std::vector<int>& x) {
    for (int b : x) {
      if (b == 0) return false;
    }
    return true;
  });
}

FiniteFunction or_function(std::size_t n) {
  return boolean(n, [](const std::vector<int>& x) {
    for (int b : x) {
      if (b == 1) return true;
    }
    return false;
  });
}

FiniteFunction parity(std::size_t n) {
  return boolean(n, [](const std::vector<int>& x) {
    int sum = 0;
    for (int b : x) sum ^= b;
    return sum == 1;
  });
}

FiniteFunction majority(std::size_t n) {
  if (n % 2 == 0) throw DomainError("majority needs an odd number of variables, got " + std::to_string(n));
  return boolean(n, [n](const std::vector<int>& x) {
    std::size_t ones = 0;
    for (int b : x) ones += static_cast<std::size_t>(b);
    return 2 * ones > n;
  });
}

FiniteFunction constant(std::size_t n, Label value) {
  if (value != 0 && value != 1) throw DomainError("constant Boolean function must be 0 or 1");
  return boolean(n, [value](const std::vector<int>&) { return value == 1; });
}

FiniteFunction standard(std::string_view name, std::size_t n, std::size_t coord) {
  if (name == "dictator") return dictator(n, coord);
  if (name == "and") return and_function(n);
  if (name == "or") return or_function(n);
  if (name == "parity") return parity(n);
  if (name == "majority") return majority(n);
  throw DomainError("unknown standard function '" + std::string(name) + "'");
}

FiniteFunction tribes(std::size_t s, std::size_t t) {
  if (s == 0 || t == 0) throw DomainError("tribes needs s >= 1 and t >= 1");
  return boolean(s * t, [s, t](const std::vector<int>& x) {
    for (std::size_t block = 0; block < s; ++block) {
      bool all_ones = true;
      for (std::size_t j = 0; j < t && all_ones; ++j) all_ones = x[block * t + j] == 1;
      if (all_ones) return true;
    }
    return false;
  });
}

Rat tribes_influence_closed_form(std::size_t s, std::size_t t) {
  if (s == 0 || t == 0) throw DomainError("tribes needs s >= 1 and t >= 1");
  const Rat block_all_ones = power(Rat(1, 2), t);
  return block_all_ones * power(Rat(1) - block_all_ones, s - 1);
}

Rat tribes_one_probability(std::size_t s, std::size_t t) {
  if (s == 0 || t == 0) throw DomainError("tribes needs s >= 1 and t >= 1");
  return Rat(1) - power(Rat(1) - power(Rat(1, 2), t), s);
}

TribesChoice tribes_auto(std::size_t n) {
  if (n < 2) throw DomainError("tribes_auto needs n >= 2");
  std::size_t best_s = n;
  std::size_t best_t = 1;
  Rat best_distance(2);
  // Scanning t downward with a strict comparison keeps the larger t on ties.
  for (std::size_t t = n; t >= 1; --t) {
    if (n % t != 0) continue;
    const std::size_t s = n / t;
    Rat d = tribes_one_probability(s, t) - Rat(1, 2);
    if (d < Rat(0)) d = -d;
    if (d < best_distance) {
      best_distance = std::move(d);
      best_s = s;
      best_t = t;
    }
  }
  return {best_s, best_t, tribes(best_s, best_t)};
}

FiniteFunction perturb_tribes(const FiniteFunction& g, const Rat& delta) {
  if (g.alphabet_size() != 2) throw DomainError("perturbation needs a Boolean input alphabet");
  const auto zero = g.label_index(0);
  const auto one = g.label_index(1);
  if (g.labels().size() != 2 || !zero || !one) {
    throw DomainError("perturbation needs a function with labels {0, 1}");
  }
  if (!delta.is_probability()) throw DomainError("delta must lie in [0,1], got " + delta.str());

  const mpq_class scaled = delta.mpq() * mpz_class(static_cast<unsigned long>(g.size()));
  const mpz_class count_z = scaled.get_num() / scaled.get_den();
  const auto count = static_cast<std::size_t>(count_z.get_ui());

  std::vector<std::uint32_t> table = g.table();
  for (std::size_t index = 0; index < count; ++index) {
    table[index] = static_cast<std::uint32_t>(g.symbol_at(index, 1) == 1 ? *one : *zero);
  }
  return FiniteFunction(g.arity(), 2, g.labels(), std::move(table));
}

}  // namespace qelim
