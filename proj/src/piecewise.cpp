#include "ssf/piecewise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ssf/error.hpp"

namespace ssf {

namespace {

constexpr double kCollinearUlps = 4.0;

bool nearly_equal(double u, double v, double scale) {
  return std::abs(u - v) <= kCollinearUlps * std::numeric_limits<double>::epsilon() * scale;
}

}  // namespace

PiecewiseLinearFn::PiecewiseLinearFn(std::vector<double> breakpoints, std::vector<double> start_values,
                                     std::vector<double> end_values)
    : x_(std::move(breakpoints)), start_(std::move(start_values)), end_(std::move(end_values)) {
  if (x_.size() < 2) throw Error(ErrorCode::InvalidFunction, "need at least breakpoints 0 and 1");
  if (x_.front() != 0.0 || x_.back() != 1.0) {
    throw Error(ErrorCode::InvalidFunction, "breakpoints must start at 0 and end at 1");
  }
  if (start_.size() + 1 != x_.size() || end_.size() + 1 != x_.size()) {
    throw Error(ErrorCode::InvalidFunction, "need one start and one end value per piece");
  }
  for (std::size_t j = 0; j + 1 < x_.size(); ++j) {
    if (!(x_[j] < x_[j + 1])) throw Error(ErrorCode::InvalidFunction, "breakpoints must be strictly increasing");
  }
  for (std::size_t j = 0; j < start_.size(); ++j) {
    if (!std::isfinite(start_[j]) || !std::isfinite(end_[j])) {
      throw Error(ErrorCode::InvalidFunction, "non-finite value on piece " + std::to_string(j));
    }
  }
}

PiecewiseLinearFn::PiecewiseLinearFn(Unchecked, std::vector<double> breakpoints, std::vector<double> start_values,
                                     std::vector<double> end_values) noexcept
    : x_(std::move(breakpoints)), start_(std::move(start_values)), end_(std::move(end_values)) {}

PiecewiseLinearFn make_unchecked(std::vector<double> breakpoints, std::vector<double> start_values,
                                 std::vector<double> end_values) {
  return PiecewiseLinearFn(PiecewiseLinearFn::Unchecked{}, std::move(breakpoints), std::move(start_values),
                           std::move(end_values));
}

PiecewiseLinearFn PiecewiseLinearFn::identity() { return affine(0.0, 1.0); }

PiecewiseLinearFn PiecewiseLinearFn::constant(double value) { return affine(value, value); }

PiecewiseLinearFn PiecewiseLinearFn::affine(double at_zero, double at_one) {
  return PiecewiseLinearFn({0.0, 1.0}, {at_zero}, {at_one});
}

double PiecewiseLinearFn::left_limit(std::size_t j) const noexcept {
  if (j == 0) return start_.front();
  return end_[std::min(j, end_.size()) - 1];
}

double PiecewiseLinearFn::right_limit(std::size_t j) const noexcept {
  if (j >= start_.size()) return end_.back();
  return start_[j];
}

double PiecewiseLinearFn::piece_value(std::size_t j, double x) const noexcept {
  const double x0 = x_[j];
  const double x1 = x_[j + 1];
  if (x <= x0) return start_[j];
  if (x >= x1) return end_[j];
  const double t = (x - x0) / (x1 - x0);
  return start_[j] + (end_[j] - start_[j]) * t;
}

double PiecewiseLinearFn::left_value(double x) const noexcept {
  if (x <= 0.0) return start_.front();
  // First breakpoint >= x; the piece ending there contains x from the left.
  const auto it = std::lower_bound(x_.begin() + 1, x_.end(), x);
  const auto j = static_cast<std::size_t>(std::min<std::ptrdiff_t>(it - x_.begin(), x_.size() - 1)) - 1;
  return piece_value(j, x);
}

double PiecewiseLinearFn::right_value(double x) const noexcept {
  if (x >= 1.0) return end_.back();
  // Last breakpoint <= x starts the piece containing x from the right.
  const auto it = std::upper_bound(x_.begin(), x_.end() - 1, x);
  const auto j = static_cast<std::size_t>(std::max<std::ptrdiff_t>(it - x_.begin(), 1)) - 1;
  return piece_value(j, x);
}

PiecewiseLinearFn PiecewiseLinearFn::simplified() const {
  std::vector<double> xs;
  std::vector<double> ss;
  std::vector<double> es;
  xs.reserve(x_.size());
  ss.reserve(start_.size());
  es.reserve(end_.size());
  xs.push_back(0.0);
  for (std::size_t j = 0; j < start_.size(); ++j) {
    const double x1 = x_[j + 1];
    if (!(x1 > xs.back())) {
      // Zero-width piece: carries no mass, keep the later end value.
      if (!es.empty()) es.back() = end_[j];
      continue;
    }
    if (!ss.empty()) {
      const double x0 = xs[xs.size() - 2];
      const double xm = xs.back();
      const double v0 = ss.back();
      const double vm = es.back();
      const double w1 = end_[j];
      const double scale = std::max({std::abs(v0), std::abs(vm), std::abs(w1), std::abs(start_[j])});
      if (nearly_equal(vm, start_[j], scale)) {
        const double predicted = v0 + (w1 - v0) * ((xm - x0) / (x1 - x0));
        if (nearly_equal(predicted, vm, scale)) {
          xs.back() = x1;
          es.back() = w1;
          continue;
        }
      }
    }
    xs.push_back(x1);
    ss.push_back(start_[j]);
    es.push_back(end_[j]);
  }
  if (ss.empty()) {
    // Everything collapsed: degenerate input with all widths zero cannot occur
    // for valid functions, but keep a well-formed result.
    return constant(start_.front());
  }
  xs.back() = 1.0;
  return make_unchecked(std::move(xs), std::move(ss), std::move(es));
}

}  // namespace ssf
