#pragma once

#include <vector>

#include "tamed/rational.hpp"

namespace tamed {

struct FixedComponent;

/// The constant value of the taming map at the fixed set: a nonzero rational
/// vector in the Lie algebra of T^r.
struct TamingData {
  int rank = 1;
  std::vector<Rat> v;

  void validate() const;
};

/// Half-space constant C = max over components and module summands of
/// <weight, v>. Every weight of the resulting index pairs with v at most C
/// (symmetric powers only lower the pairing).
Rat support_bound(const std::vector<FixedComponent>& components,
                  const TamingData& taming);

/// Sampled data for the admissibility ratio f^2|v|^2 / (|df||v| + f nu + 1).
/// All arrays share one length; radii strictly increasing.
struct AdmissibilityProfile {
  std::vector<double> radius;
  std::vector<double> f;
  std::vector<double> df_norm;
  std::vector<double> v_norm;
  std::vector<double> nu;

  void validate() const;
};

struct AdmissibilityReport {
  std::vector<double> ratios;
  bool pass = false;
  double last_ratio = 0.0;
  double threshold = 0.0;
};

/// Numeric surrogate for the deformation-dominates-at-infinity limit: PASS
/// iff the ratios are nondecreasing over the tail (last quarter of samples)
/// and the final ratio exceeds the threshold.
AdmissibilityReport admissibility_report(const AdmissibilityProfile& profile,
                                         double threshold = 10.0,
                                         double tail_fraction = 0.25);

}  // namespace tamed
