#pragma once

#include <string>

#include "pacfol/harness.hpp"

namespace pacfol {

// Minimal TOML reader covering the config surface: [tables], key = value,
// strings, integers, floats, booleans, single-line arrays and inline
// tables, '#' comments. Returns a JSON-shaped document.
std::string toml_to_json(const std::string& toml_text);

struct SimulationConfig {
  WorldDistributionSpec world;
  MaskSpec mask;
  ProperPlusKB kb;
  GroundFormula query;
  LearnConfig learn;
  double gamma = 0.1;
  double delta = 0.1;
  int trials = 100;
};

// Loads a .toml or .json config file; [kb]/[query] paths resolve relative
// to the config file's directory.
SimulationConfig load_simulation_config(const std::string& path);

}  // namespace pacfol
