#pragma once

#include <string>
#include <string_view>

namespace ssf {

/// Lebesgue exponent p in [1, +inf]. Infinity is a distinguished state rather
/// than a large double, so finite/infinite formulas dispatch exactly.
class Exponent {
 public:
  /// Throws BadExponent unless p >= 1. Passing +inf yields infinity().
  explicit Exponent(double p);

  static Exponent infinity() noexcept;

  /// Accepts decimals, fractions "3/2", and "inf" / "infinity".
  static Exponent parse(std::string_view text);

  [[nodiscard]] bool is_infinite() const noexcept { return infinite_; }
  [[nodiscard]] bool is_finite() const noexcept { return !infinite_; }
  [[nodiscard]] bool is_integer() const noexcept;

  /// Finite value; +inf for the infinite exponent.
  [[nodiscard]] double value() const noexcept;

  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  Exponent() = default;
  double p_ = 1.0;
  bool infinite_ = false;
};

/// Parses a decimal or a fraction "num/den". Throws ParseError.
double parse_real(std::string_view text);

}  // namespace ssf
