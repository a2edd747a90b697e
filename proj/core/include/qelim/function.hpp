#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace qelim {

/// Output label, an element of the output set Z.
using Label = std::int64_t;

/// Alphabet symbol in {0, ..., k-1}.
using Symbol = int;

/// Largest truth table (k^n entries) any FiniteFunction may hold.
inline constexpr std::size_t kMaxTableSize = std::size_t{1} << 24;

/// k^n, or CapacityError when it exceeds kMaxTableSize.
std::size_t table_size(std::size_t arity, std::size_t alphabet_size);

/// Explicit truth table for f : {0..k-1}^n -> Z.
///
/// Coordinates are 1-based throughout the public API. Input x = (x_1..x_n)
/// lives at table index sum_j x_j * k^(n-j), so x_1 is most significant.
/// The table stores indices into labels().
class FiniteFunction {
public:
  FiniteFunction(std::size_t arity, std::size_t alphabet_size, std::vector<Label> labels,
                 std::vector<std::uint32_t> table);

  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] std::size_t alphabet_size() const { return alphabet_size_; }
  [[nodiscard]] const std::vector<Label>& labels() const { return labels_; }
  [[nodiscard]] const std::vector<std::uint32_t>& table() const { return table_; }
  [[nodiscard]] std::size_t size() const { return table_.size(); }

  /// Index of `label` in labels(), if present.
  [[nodiscard]] std::optional<std::size_t> label_index(Label label) const;

  /// k^(n - coord): distance in the table between inputs that differ by one
  /// in coordinate `coord`.
  [[nodiscard]] std::size_t stride(std::size_t coord) const;

  /// Table index of x. Throws ShapeError on wrong length or bad symbols.
  [[nodiscard]] std::size_t index_of(std::span<const Symbol> x) const;
  [[nodiscard]] std::vector<Symbol> input_at(std::size_t index) const;

  [[nodiscard]] Label evaluate(std::span<const Symbol> x) const;
  [[nodiscard]] Label label_at(std::size_t index) const { return labels_[table_[index]]; }

  /// Symbol of coordinate `coord` in the input stored at `index`.
  [[nodiscard]] Symbol symbol_at(std::size_t index, std::size_t coord) const {
    return static_cast<Symbol>((index / strides_[coord - 1]) % alphabet_size_);
  }

  friend bool operator==(const FiniteFunction&, const FiniteFunction&) = default;

private:
  std::size_t arity_;
  std::size_t alphabet_size_;
  std::vector<Label> labels_;
  std::vector<std::uint32_t> table_;
  std::vector<std::size_t> strides_;
};

/// Throws ShapeError unless 1 <= coord <= arity.
void check_coordinate(std::size_t coord, std::size_t arity);

/// Throws ShapeError unless f and g share arity and alphabet.
void check_same_shape(const FiniteFunction& f, const FiniteFunction& g);

}  // namespace qelim
