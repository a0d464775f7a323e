#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "liereach/analysis.hpp"
#include "liereach/system.hpp"

namespace liereach {

/// A loaded *.sysconfig: the system plus the analysis caps and any
/// experiment option blocks.
struct SystemConfig {
  ControlSystem system;
  Caps caps;
  nlohmann::json experiments = nlohmann::json::array();
};

/// Parses and validates. Malformed input throws ParseError naming the field;
/// algebraic failures (Jacobi, antisymmetry, skewness) throw ValidationError.
SystemConfig parse_config(const std::string& text);
SystemConfig load_config(const std::string& path);

/// Serializes a system in schema v1 with the skew convention, so that
/// parse_config(to_json(...)) reproduces it exactly.
nlohmann::json config_to_json(const SystemConfig& cfg);

/// The "rep" block on its own, for an algebra of dimension `dim`.
RepSpec parse_rep_spec(const nlohmann::json& j, int dim);
nlohmann::json rep_spec_to_json(const RepSpec& r);

/// Config for a built-in preset with default caps.
SystemConfig preset_config(const std::string& name);

}  // namespace liereach
