#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ssf {

/// Function on [0,1] that is affine on each piece (x_j, x_{j+1}). Adjacent
/// pieces need not agree at their shared breakpoint, so jumps are represented
/// exactly: piece j carries its own start value f(x_j+) and end value f(x_{j+1}-).
class PiecewiseLinearFn {
 public:
  /// Throws InvalidFunction unless breakpoints run strictly from 0 to 1 and
  /// there is one start/end value per piece.
  PiecewiseLinearFn(std::vector<double> breakpoints, std::vector<double> start_values,
                    std::vector<double> end_values);

  static PiecewiseLinearFn identity();
  static PiecewiseLinearFn constant(double value);
  static PiecewiseLinearFn affine(double at_zero, double at_one);

  [[nodiscard]] std::size_t pieces() const noexcept { return start_.size(); }
  [[nodiscard]] std::span<const double> breakpoints() const noexcept { return x_; }
  [[nodiscard]] std::span<const double> start_values() const noexcept { return start_; }
  [[nodiscard]] std::span<const double> end_values() const noexcept { return end_; }

  /// One-sided limits at breakpoint j. At 0 both return f(0+), at 1 both f(1-).
  [[nodiscard]] double left_limit(std::size_t j) const noexcept;
  [[nodiscard]] double right_limit(std::size_t j) const noexcept;

  /// f(x-) and f(x+) for any x in [0,1] (clamped).
  [[nodiscard]] double left_value(double x) const noexcept;
  [[nodiscard]] double right_value(double x) const noexcept;

  /// Left-continuous evaluation, f(x) = f(x-), with f(0) = f(0+).
  [[nodiscard]] double operator()(double x) const noexcept { return left_value(x); }

  /// Merges neighbouring pieces that are continuous and collinear up to a few
  /// ulps and drops zero-width pieces. The represented function is unchanged.
  [[nodiscard]] PiecewiseLinearFn simplified() const;

 private:
  struct Unchecked {};
  PiecewiseLinearFn(Unchecked, std::vector<double> breakpoints, std::vector<double> start_values,
                    std::vector<double> end_values) noexcept;
  friend PiecewiseLinearFn make_unchecked(std::vector<double>, std::vector<double>, std::vector<double>);

  [[nodiscard]] double piece_value(std::size_t j, double x) const noexcept;

  std::vector<double> x_;
  std::vector<double> start_;
  std::vector<double> end_;
};

/// For kernels that build breakpoints by construction; skips the O(N) check.
PiecewiseLinearFn make_unchecked(std::vector<double> breakpoints, std::vector<double> start_values,
                                 std::vector<double> end_values);

}  // namespace ssf
