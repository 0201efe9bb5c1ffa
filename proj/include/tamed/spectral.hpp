#pragma once

#include <vector>

#include "tamed/rational.hpp"

namespace tamed {

/// Symmetric tridiagonal matrix: diag has n entries, off has n-1.
struct SymTridiagonal {
  std::vector<double> diag;
  std::vector<double> off;

  std::size_t size() const { return diag.size(); }
  /// y = T x.
  std::vector<double> apply(const std::vector<double>& x) const;
};

/// Number of eigenvalues strictly below x (Sturm count via LDL^T pivots).
int count_below(const SymTridiagonal& t, double x);

/// Gershgorin bounds on the spectrum.
double gershgorin_lower(const SymTridiagonal& t);
double gershgorin_upper(const SymTridiagonal& t);

/// All eigenvalues < cutoff, ascending, each bisected to near machine
/// accuracy. Deterministic: pure floating bisection on Sturm counts.
std::vector<double> eigenvalues_below(const SymTridiagonal& t, double cutoff);

/// The k smallest eigenvalues, ascending.
std::vector<double> smallest_eigenvalues(const SymTridiagonal& t, int k);

/// Normalized eigenvector for an eigenvalue approximation (inverse iteration
/// with a pivoted tridiagonal solve). Sign fixed: largest-magnitude entry
/// positive. Throws on non-convergence.
std::vector<double> eigenvector(const SymTridiagonal& t, double lambda);

}  // namespace tamed
