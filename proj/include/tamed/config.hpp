#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tamed/analytic.hpp"
#include "tamed/fixed_point.hpp"

namespace tamed {

/// Parse or validation failure; message carries the line number or the field
/// path of the offending construct.
struct ConfigError : TamedError {
  using TamedError::TamedError;
};

struct AnalyticParams {
  std::string model = "plane_rotation";
  int n = 1;
  double f0 = 4.0;
  double R = 12.0;
  int N = 2048;
  double tol = 1e-6;

  PlaneRotationModel plane_model() const;
};

struct ProblemConfig {
  int rank = 0;
  std::vector<Rat> v;
  Rat window_lo = 0, window_hi = 0;
  std::vector<FixedComponent> components;
  std::map<std::string, LocalIndexTable> tables;
  std::optional<AnalyticParams> analytic;

  TamingData taming() const;
  Window window() const;
};

/// Strict parse of the sectioned key-value format documented in the README.
/// Unknown keys, malformed values and semantic violations are errors.
ProblemConfig parse_config(const std::string& text);

ProblemConfig load_config(const std::string& path);

}  // namespace tamed
