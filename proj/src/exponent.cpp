#include "ssf/exponent.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <sstream>

#include "ssf/error.hpp"

namespace ssf {

namespace {

double parse_decimal(std::string_view text) {
  // std::from_chars for double is not available in every libstdc++ we target.
  std::string buffer(text);
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(buffer, &used);
  } catch (const std::exception&) {
    throw Error(ErrorCode::ParseError, "not a number: '" + buffer + "'");
  }
  if (used != buffer.size()) {
    throw Error(ErrorCode::ParseError, "trailing characters in number: '" + buffer + "'");
  }
  return value;
}

std::string_view trim(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  return text;
}

}  // namespace

double parse_real(std::string_view text) {
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const double num = parse_decimal(trim(text.substr(0, slash)));
    const double den = parse_decimal(trim(text.substr(slash + 1)));
    if (den == 0.0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text);
}

Exponent::Exponent(double p) {
  if (std::isnan(p) || p < 1.0) {
    std::ostringstream os;
    os << "exponent must satisfy p >= 1, got " << p;
    throw Error(ErrorCode::BadExponent, os.str());
  }
  if (std::isinf(p)) {
    infinite_ = true;
  } else {
    p_ = p;
  }
}

Exponent Exponent::infinity() noexcept {
  Exponent e;
  e.infinite_ = true;
  return e;
}

Exponent Exponent::parse(std::string_view text) {
  text = trim(text);
  if (text == "inf" || text == "infinity" || text == "Inf" || text == "INF") return infinity();
  return Exponent(parse_real(text));
}

bool Exponent::is_integer() const noexcept { return !infinite_ && std::floor(p_) == p_; }

double Exponent::value() const noexcept {
  return infinite_ ? std::numeric_limits<double>::infinity() : p_;
}

std::string Exponent::to_string() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os.precision(17);
  os << p_;
  return os.str();
}

}  // namespace ssf
