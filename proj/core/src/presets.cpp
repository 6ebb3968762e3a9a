#include "dyadic/presets.hpp"

namespace dyadic {

const std::vector<Preset>& presets() {
  static const std::vector<Preset> table = {
      {"ex1", {0.3, 0.1, 0.7, 0.9}, true, true,
       "positive mask; dyadic support [0,2], classical [0,3]"},
      {"ex2", {0.6, 0.9, 0.4, 0.1}, true, std::nullopt, "positive mask"},
      {"ex3", {0.6, 1.1, 0.4, -0.1}, true, std::nullopt,
       "signed mask, |c0 - c1| = 0.5"},
      {"ex4", {0.25, 0.75, 0.75, 0.25}, true, true,
       "symmetric mask; the dyadic refinable function is constant 1/2"},
      {"ex5", {2.6, 0.7, -1.6, 0.3}, false, false,
       "divergent in both settings, |c0 - c1| = 1.9"},
      {"ex6", {0.4, -0.1, 0.6, 1.1}, true, false,
       "diverges classically (last coefficient > 1) but converges dyadically"},
      {"ex7", {0.25, 0.25, 0.25, 0.25, 0.25, 0.25, 0.25, 0.25}, true, std::nullopt,
       "all eight coefficients equal 1/4"},
      {"ex8", {0.125, 0.375, 0.125, 0.375, 0.375, 0.125, 0.375, 0.125}, true,
       std::nullopt, "eight-coefficient positive mask with nilpotent restriction"},
      {"ex9",
       {1, 0.125, 0, 0.125, 0, 0.125, 0, 0.125, 0, 0.125, 0, 0.125, 0, 0.125, 0,
        0.125},
       true, std::nullopt,
       "interpolatory sixteen-coefficient mask (c0 = 1, other evens zero)"},
  };
  return table;
}

const Preset* find_preset(const std::string& name) {
  for (const Preset& p : presets()) {
    if (p.name == name) return &p;
  }
  return nullptr;
}

}  // namespace dyadic
