#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ssf/system.hpp"

namespace ssf {

enum class PresetKind {
  characteristic,  // (zeta, xi): indicator of (zeta, xi)
  step,            // (alpha[], s[]): piecewise constant
  identity2,       // f(x) = x with n = 2
  identity3,       // f(x) = x with n = 3
  cantor_family,   // (a, delta): continuous family, Cantor function at (1/3, 0)
  counterexample,  // (d): satisfies the necessary monotonicity conditions, decreasing somewhere
  bernoulli,       // (rho): n = 2 halves, weights (rho, 1 - rho)
  uniform,         // (a[]): f(x) = x with d = a, measure is Lebesgue
};

struct PresetId {
  PresetKind kind = PresetKind::identity2;
  std::vector<double> args;   // scalar arguments, or step's alpha points / uniform's lengths
  std::vector<double> values; // step's s_k
};

/// Stable CLI spellings, in PresetKind order.
const std::vector<std::string>& preset_names();

/// "cantor_family:1/3,0", "characteristic:1/4,3/4", "step:0,0.5,1;2,3",
/// "identity2", "uniform:0.3,0.7". Throws ParseError / BadPresetParams.
PresetId parse_preset(std::string_view text);

std::string to_string(const PresetId& id);

/// Throws BadPresetParams when arguments are outside their documented ranges.
SimilarityParams build_preset(const PresetId& id);

inline SimilaritySystem make_preset(const PresetId& id) { return SimilaritySystem(build_preset(id)); }

namespace presets {
SimilaritySystem characteristic(double zeta, double xi);
SimilaritySystem step(std::vector<double> alpha, std::vector<double> s);
SimilaritySystem identity2();
SimilaritySystem identity3();
SimilaritySystem cantor_family(double a, double delta);
SimilaritySystem counterexample(double d);
SimilaritySystem bernoulli(double rho);
SimilaritySystem uniform(std::vector<double> a);
}  // namespace presets

}  // namespace ssf
