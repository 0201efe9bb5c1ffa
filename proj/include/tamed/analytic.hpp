#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tamed/characters.hpp"
#include "tamed/spectral.hpp"
#include "tamed/taming.hpp"

namespace tamed {

/// Circle acting on the complex plane with rotation weight n; the Dolbeault
/// Dirac operator on (0,*)-forms deformed by the constant scaling f0 of the
/// rotation field. The kernel is spanned by z^k exp(-f0 n v r^2 / 2).
struct PlaneRotationModel {
  int rotation_weight = 1;  // n >= 1
  double f0 = 4.0;
  double radius = 12.0;
  int points = 2048;
  bool flip_grading = false;  // swap the roles of the two spinor components

  void validate() const;
};

/// The 1-D cylinder model operator: -d^2/dt^2 + t^2 -+ 1 on [-T, T] with
/// Dirichlet ends. The minus branch has exact ground state exp(-t^2/2) at 0.
struct OscillatorModel {
  double half_width = 10.0;  // T
  int points = 4000;         // interior grid points
  int branch = -1;           // -1 or +1: the sign added to -d^2/dt^2 + t^2

  void validate() const;
};

/// Two-entries-per-row sparse factor of one grading sector of the mode
/// operator. Row i has entries at columns i+shift and i+shift+1, clipped to
/// [0, cols).
struct SectorFactor {
  std::size_t rows = 0, cols = 0;
  int shift = 0;
  std::vector<double> lo, hi;  // lo[i] -> col i+shift, hi[i] -> col i+shift+1

  SymTridiagonal gram() const;  // M^T M
  std::vector<double> apply(const std::vector<double>& x) const;
};

/// Discretization of the weight-m block of the deformed operator: the
/// assembled first-order matrix (exactly symmetric, tridiagonal in the
/// interleaved component order) plus the two sector Gram matrices used for
/// kernel counting.
///
/// Radial reduction: sections of weight m live on the radial grid with
/// angular indices p = -m/n (even component) and p+1 (odd component); after
/// absorbing the measure r dr the channel with angular index l carries the
/// first-order factor  s d/dr - l/r + b r  with b = f0 n v. Channels with
/// l = 0 use cell-centered values with face rows and a ghost Dirichlet row at
/// R; channels with |l| >= 1 use face values with the r = 0 value pinned
/// (regularity); outward-growing channels (the odd sector) also pin the value
/// at R (Dirichlet).
struct ModeOperator {
  int mode = 0;          // torus weight m
  int radial_index = 0;  // p = -m / n
  double slope = 0.0;    // b = f0 * n * v
  double h = 0.0;
  int points = 0;  // N radial cells
  bool flipped = false;

  SymTridiagonal full;  // 2N x 2N, zero diagonal, exactly symmetric
  int even_parity = 0;  // parity of even-component indices within `full`
  SymTridiagonal even_sq;  // Gram matrix of the even-sector factor
  SymTridiagonal odd_sq;   // Gram matrix of the odd-sector factor
  std::vector<double> even_radii;  // radii carrying the even DOFs

  /// Oscillator gap 4b of the squared operator (verified by the counting
  /// gap test on every call).
  double gap_estimate() const { return 4.0 * slope; }

  /// Relative residual of a sampled even-component section under the
  /// assembled operator.
  double even_residual(const std::vector<double>& even_values) const;
};

/// Builds the weight-m block. The torus weight must be divisible by the
/// rotation weight (other isotypic components of L^2 are zero).
ModeOperator build_mode_operator(const PlaneRotationModel& model,
                                 const TamingData& taming, int mode);
/// Convenience overload with v = 1.
ModeOperator build_mode_operator(const PlaneRotationModel& model, int mode);

struct KernelDims {
  int even = 0;
  int odd = 0;
  bool operator==(const KernelDims&) const = default;
};

/// Counts eigenvalues of the squared operator below tol^2 per grading.
/// Refuses (throws) if any eigenvalue lies in the ambiguity zone
/// [tol^2, 100 tol^2], or if tol <= 0.
KernelDims kernel_dims(const ModeOperator& op, double tol);

struct SolveOptions {
  bool parallel = true;
  bool grid_check = true;  // require identical kernel dims at N and 2N
};

struct ModeResult {
  int mode = 0;
  bool solved = false;
  KernelDims dims;
  std::string error;
};

/// Solves the given modes independently (OpenMP across modes when
/// options.parallel). Per-mode failures are captured, not thrown; the result
/// vector is deterministic and ordered like `modes`.
std::vector<ModeResult> solve_modes(const PlaneRotationModel& model,
                                    const TamingData& taming,
                                    const std::vector<int>& modes, double tol,
                                    const SolveOptions& options = {});

/// The analytic index over a bounded window: mult(m) = even - odd kernel
/// dimension of the weight-m block. `tol` is the relative tolerance from the
/// config; the per-mode threshold is tol * gap_estimate. Requires the
/// model's admissibility profile to PASS.
Character analytic_index(const PlaneRotationModel& model,
                         const TamingData& taming, const Window& window,
                         double tol, const SolveOptions& options = {});

/// Closed-form admissibility profile of the plane model (constant f,
/// |v| = n v r, flat-connection moment bound).
AdmissibilityProfile plane_admissibility_profile(const PlaneRotationModel& model,
                                                 const TamingData& taming,
                                                 int samples = 64);

/// Interior grid points of the oscillator discretization.
std::vector<double> oscillator_grid(const OscillatorModel& model);

/// Ascending k smallest eigenvalues of -d^2/dt^2 + t^2 + branch.
std::vector<double> oscillator_spectrum(const OscillatorModel& model, int k);

/// Normalized ground-state eigenvector of the minus branch.
std::vector<double> ground_state_profile(const OscillatorModel& model);

}  // namespace tamed
