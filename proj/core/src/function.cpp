#include "qelim/function.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "qelim/errors.hpp"

namespace qelim {

std::size_t table_size(std::size_t arity, std::size_t alphabet_size) {
  std::size_t size = 1;
  for (std::size_t j = 0; j < arity; ++j) {
    if (size > kMaxTableSize / alphabet_size) {
      throw CapacityError("truth table " + std::to_string(alphabet_size) + "^" +
                          std::to_string(arity) + " exceeds limit of " +
                          std::to_string(kMaxTableSize) + " entries");
    }
    size *= alphabet_size;
  }
  return size;
}

FiniteFunction::FiniteFunction(std::size_t arity, std::size_t alphabet_size,
                               std::vector<Label> labels, std::vector<std::uint32_t> table)
    : arity_(arity),
      alphabet_size_(alphabet_size),
      labels_(std::move(labels)),
      table_(std::move(table)) {
  if (arity_ == 0) throw ShapeError("function arity must be positive");
  if (alphabet_size_ < 2) throw ShapeError("alphabet size must be at least 2");
  if (labels_.empty()) throw ShapeError("output label set is empty");
  std::unordered_set<Label> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw ShapeError("output labels are not distinct");

  const std::size_t expected = table_size(arity_, alphabet_size_);
  if (table_.size() != expected) {
    throw ShapeError("table has " + std::to_string(table_.size()) + " entries, expected " +
                     std::to_string(expected));
  }
  const auto bad = std::find_if(table_.begin(), table_.end(),
                                [&](std::uint32_t v) { return v >= labels_.size(); });
  if (bad != table_.end()) {
    throw ShapeError("table entry " + std::to_string(bad - table_.begin()) +
                     " is not a valid label index");
  }

  strides_.assign(arity_, 1);
  for (std::size_t j = arity_ - 1; j-- > 0;) strides_[j] = strides_[j + 1] * alphabet_size_;
}

std::optional<std::size_t> FiniteFunction::label_index(Label label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t FiniteFunction::stride(std::size_t coord) const {
  check_coordinate(coord, arity_);
  return strides_[coord - 1];
}

std::size_t FiniteFunction::index_of(std::span<const Symbol> x) const {
  if (x.size() != arity_) {
    throw ShapeError("input has length " + std::to_string(x.size()) + ", expected " +
                     std::to_string(arity_));
  }
  std::size_t index = 0;
  for (std::size_t j = 0; j < arity_; ++j) {
    if (x[j] < 0 || static_cast<std::size_t>(x[j]) >= alphabet_size_) {
      throw ShapeError("input symbol " + std::to_string(x[j]) + " at coordinate " +
                       std::to_string(j + 1) + " is outside the alphabet");
    }
    index = index * alphabet_size_ + static_cast<std::size_t>(x[j]);
  }
  return index;
}

std::vector<Symbol> FiniteFunction::input_at(std::size_t index) const {
  std::vector<Symbol> x(arity_);
  for (std::size_t j = 0; j < arity_; ++j) x[j] = symbol_at(index, j + 1);
  return x;
}

Label FiniteFunction::evaluate(std::span<const Symbol> x) const { return label_at(index_of(x)); }

void check_coordinate(std::size_t coord, std::size_t arity) {
  if (coord < 1 || coord > arity) {
    throw ShapeError("coordinate " + std::to_string(coord) + " outside 1.." +
                     std::to_string(arity));
  }
}

void check_same_shape(const FiniteFunction& f, const FiniteFunction& g) {
  if (f.arity() != g.arity() || f.alphabet_size() != g.alphabet_size()) {
    throw ShapeError("functions differ in arity or alphabet");
  }
}

}  // namespace qelim
