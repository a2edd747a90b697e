#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qelim {

/// Exact arbitrary-precision rational number.
///
/// Thin value wrapper over GMP's mpq_class. The value is always kept in
/// lowest terms with a positive denominator. Text form is always "num/den",
/// including integers ("1/1", "0/1").
class Rat {
public:
  Rat() = default;
  Rat(std::int64_t value);  // NOLINT(google-explicit-constructor)
  Rat(std::int64_t num, std::int64_t den);
  explicit Rat(mpq_class value);

  /// Parses "num/den" or a bare integer. Throws ParseError on bad text or a
  /// zero denominator.
  static Rat parse(std::string_view text);

  /// Like the two-argument constructor, but throws DomainError unless the
  /// value lies in [0, 1].
  static Rat probability(std::int64_t num, std::int64_t den);

  [[nodiscard]] bool is_zero() const { return sgn(value_) == 0; }
  [[nodiscard]] bool is_probability() const;
  [[nodiscard]] std::string str() const;
  [[nodiscard]] const mpq_class& mpq() const { return value_; }

  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }
  friend Rat operator-(const Rat& v) { return Rat(mpq_class(-v.value_)); }

  friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

}  // namespace qelim
