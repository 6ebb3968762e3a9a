#pragma once

#include <optional>
#include <string>
#include <vector>

namespace dyadic {

/// Worked example masks ex1..ex9 with their documented qualitative outcomes.
/// Unset expectations mean the source material shows the case without
/// pinning a verdict.
struct Preset {
  std::string name;
  std::vector<double> mask;
  std::optional<bool> dyadic_converges;
  std::optional<bool> classical_converges;
  std::string note;
};

const std::vector<Preset>& presets();
const Preset* find_preset(const std::string& name);

}  // namespace dyadic
