#include "ssf/presets.hpp"

#include <algorithm>
#include <sstream>

#include "ssf/error.hpp"

namespace ssf {

namespace {

[[noreturn]] void bad(const std::string& message) { throw Error(ErrorCode::BadPresetParams, message); }

void expect_args(const PresetId& id, std::size_t count) {
  if (id.args.size() != count) {
    bad(preset_names()[static_cast<std::size_t>(id.kind)] + " takes " + std::to_string(count) + " argument(s), got " +
        std::to_string(id.args.size()));
  }
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t comma = text.find(',', start);
    const std::string_view token = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    if (!token.empty()) out.push_back(parse_real(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string join(const std::vector<double>& values) {
  std::ostringstream os;
  os.precision(17);
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  return os.str();
}

}  // namespace

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"characteristic", "step",           "identity2", "identity3",
                                              "cantor_family",  "counterexample", "bernoulli", "uniform"};
  return names;
}

PresetId parse_preset(std::string_view text) {
  const std::size_t colon = text.find(':');
  const std::string name(text.substr(0, colon));
  const auto& names = preset_names();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw Error(ErrorCode::ParseError, "unknown preset '" + name + "'");
  PresetId id;
  id.kind = static_cast<PresetKind>(it - names.begin());
  if (colon == std::string_view::npos) return id;
  const std::string_view rest = text.substr(colon + 1);
  if (id.kind == PresetKind::step) {
    const std::size_t semi = rest.find(';');
    if (semi == std::string_view::npos) throw Error(ErrorCode::ParseError, "step preset needs 'alpha...;s...'");
    id.args = parse_list(rest.substr(0, semi));
    id.values = parse_list(rest.substr(semi + 1));
  } else {
    id.args = parse_list(rest);
  }
  return id;
}

std::string to_string(const PresetId& id) {
  std::string out = preset_names()[static_cast<std::size_t>(id.kind)];
  if (id.kind == PresetKind::step) return out + ":" + join(id.args) + ";" + join(id.values);
  if (!id.args.empty()) out += ":" + join(id.args);
  return out;
}

SimilarityParams build_preset(const PresetId& id) {
  switch (id.kind) {
    case PresetKind::characteristic: {
      expect_args(id, 2);
      const double zeta = id.args[0];
      const double xi = id.args[1];
      if (!(0.0 < zeta && zeta < xi && xi < 1.0)) bad("characteristic needs 0 < zeta < xi < 1");
      return {{zeta, xi - zeta, 1.0 - xi}, {0, 0, 0}, {0, 0, 0}, {0, 1, 0}};
    }
    case PresetKind::step: {
      const auto& alpha = id.args;
      const auto& s = id.values;
      if (alpha.size() < 3 || s.size() + 1 != alpha.size()) {
        bad("step needs alpha_1..alpha_{n+1} and s_1..s_n with n > 1");
      }
      if (alpha.front() != 0.0 || alpha.back() != 1.0) bad("step partition must run from 0 to 1");
      SimilarityParams p;
      for (std::size_t k = 0; k + 1 < alpha.size(); ++k) {
        if (!(alpha[k] < alpha[k + 1])) bad("step partition must be strictly increasing");
        p.a.push_back(alpha[k + 1] - alpha[k]);
      }
      p.c.assign(s.size(), 0.0);
      p.d.assign(s.size(), 0.0);
      p.beta = s;
      return p;
    }
    case PresetKind::identity2:
      expect_args(id, 0);
      return {{0.5, 0.5}, {0.5, 0.5}, {0, 0}, {0, 0.5}};
    case PresetKind::identity3: {
      expect_args(id, 0);
      const double third = 1.0 / 3.0;
      return {{third, third, third}, {third, third, third}, {0, 0, 0}, {0, third, 2.0 / 3.0}};
    }
    case PresetKind::cantor_family: {
      expect_args(id, 2);
      const double a = id.args[0];
      const double delta = id.args[1];
      if (!(a > 0.0 && a < 0.5)) bad("cantor_family needs a in (0, 1/2)");
      if (!(delta >= 0.0 && delta < 1.0 / 3.0)) bad("cantor_family needs delta in [0, 1/3)");
      const double outer = 0.5 + delta;
      return {{a, 1.0 - 2.0 * a, a}, {0, 0, 0}, {outer, 0.0 - 2.0 * delta, outer}, {0.0, outer, 0.5 - delta}};
    }
    case PresetKind::counterexample: {
      expect_args(id, 1);
      const double d = id.args[0];
      if (!(d > 0.0 && d < 1.0)) bad("counterexample needs d in (0, 1)");
      const double third = 1.0 / 3.0;
      return {{third, third, third}, {0, d, 0}, {0.5, -d, 0.5}, {0, 0.5, 0.5}};
    }
    case PresetKind::bernoulli: {
      expect_args(id, 1);
      const double rho = id.args[0];
      if (!(rho > 0.0 && rho < 1.0)) bad("bernoulli needs rho in (0, 1)");
      return {{0.5, 0.5}, {0, 0}, {rho, 1.0 - rho}, {0, rho}};
    }
    case PresetKind::uniform: {
      std::vector<double> a = id.args.empty() ? std::vector<double>{0.5, 0.5} : id.args;
      if (a.size() < 2) bad("uniform needs at least two lengths");
      SimilarityParams p;
      double alpha = 0.0;
      for (double ak : a) {
        if (!(ak > 0.0)) bad("uniform lengths must be positive");
        p.a.push_back(ak);
        p.c.push_back(0.0);
        p.d.push_back(ak);
        p.beta.push_back(alpha);
        alpha += ak;
      }
      return p;
    }
  }
  bad("unknown preset");
}

namespace presets {

SimilaritySystem characteristic(double zeta, double xi) {
  return make_preset({PresetKind::characteristic, {zeta, xi}, {}});
}
SimilaritySystem step(std::vector<double> alpha, std::vector<double> s) {
  return make_preset({PresetKind::step, std::move(alpha), std::move(s)});
}
SimilaritySystem identity2() { return make_preset({PresetKind::identity2, {}, {}}); }
SimilaritySystem identity3() { return make_preset({PresetKind::identity3, {}, {}}); }
SimilaritySystem cantor_family(double a, double delta) {
  return make_preset({PresetKind::cantor_family, {a, delta}, {}});
}
SimilaritySystem counterexample(double d) { return make_preset({PresetKind::counterexample, {d}, {}}); }
SimilaritySystem bernoulli(double rho) { return make_preset({PresetKind::bernoulli, {rho}, {}}); }
SimilaritySystem uniform(std::vector<double> a) { return make_preset({PresetKind::uniform, std::move(a), {}}); }

}  // namespace presets

}  // namespace ssf
