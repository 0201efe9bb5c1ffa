#include "tamed/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tamed {

void PlaneRotationModel::validate() const {
  if (rotation_weight < 1)
    throw TamedError("plane model: rotation weight must be >= 1");
  if (!(f0 > 0)) throw TamedError("plane model: f0 must be positive");
  if (!(radius > 0)) throw TamedError("plane model: radius must be positive");
  if (points < 64) throw TamedError("plane model: need at least 64 grid points");
  if (f0 * rotation_weight * radius < 20.0)
    throw TamedError(
        "plane model: f0*n*R must be >= 20 so the deformation dominates at "
        "the boundary");
}

void OscillatorModel::validate() const {
  if (!(half_width > 0)) throw TamedError("oscillator: T must be positive");
  if (points < 16) throw TamedError("oscillator: need at least 16 points");
  if (branch != 1 && branch != -1)
    throw TamedError("oscillator: branch must be +1 or -1");
}

SymTridiagonal SectorFactor::gram() const {
  SymTridiagonal g;
  g.diag.assign(cols, 0.0);
  g.off.assign(cols > 0 ? cols - 1 : 0, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    long c1 = static_cast<long>(i) + shift;
    long c2 = c1 + 1;
    bool in1 = c1 >= 0 && c1 < static_cast<long>(cols);
    bool in2 = c2 >= 0 && c2 < static_cast<long>(cols);
    if (in1) g.diag[c1] += lo[i] * lo[i];
    if (in2) g.diag[c2] += hi[i] * hi[i];
    if (in1 && in2) g.off[c1] += lo[i] * hi[i];
  }
  return g;
}

std::vector<double> SectorFactor::apply(const std::vector<double>& x) const {
  if (x.size() != cols) throw TamedError("sector factor apply: size mismatch");
  std::vector<double> y(rows, 0.0);
  for (std::size_t i = 0; i < rows; ++i) {
    long c1 = static_cast<long>(i) + shift;
    long c2 = c1 + 1;
    if (c1 >= 0 && c1 < static_cast<long>(cols)) y[i] += lo[i] * x[c1];
    if (c2 >= 0 && c2 < static_cast<long>(cols)) y[i] += hi[i] * x[c2];
  }
  return y;
}

namespace {

// Weighted first-order factor for the channel with angular index `ell` and
// transport sign `s`, coefficient c(r) = -ell/r + b r, on [0, R] with N
// cells. `dirichlet_at_R` pins the outer face value (used by the outward-
// growing odd sector).
SectorFactor radial_sector_factor(int ell, int s, double b, double R, int N,
                                  bool dirichlet_at_R) {
  const double h = R / N;
  auto cell = [&](int i) { return (i + 0.5) * h; };  // i = 0..N-1
  auto face = [&](int j) { return (j + 1.0) * h; };  // j = 0..N-1, face j+1
  auto w = [&](double r) { return r * h; };

  SectorFactor m;
  if (ell == 0) {
    // Cell DOFs, rows on faces 1..N; last row is the ghost Dirichlet at R.
    m.rows = m.cols = static_cast<std::size_t>(N);
    m.shift = 0;
    m.lo.assign(m.rows, 0.0);
    m.hi.assign(m.rows, 0.0);
    for (int j = 0; j + 1 < N; ++j) {
      double rf = face(j);
      double c = b * rf;
      double sw = std::sqrt(w(rf));
      m.lo[j] = (-s / h + c / 2.0) * sw / std::sqrt(w(cell(j)));
      m.hi[j] = (s / h + c / 2.0) * sw / std::sqrt(w(cell(j + 1)));
    }
    double rf = face(N - 1);
    m.lo[N - 1] = (-2.0 * s / h) * std::sqrt(w(rf)) / std::sqrt(w(cell(N - 1)));
    return m;
  }

  // Face DOFs (face 0 pinned to zero by regularity), rows on cells 1..N.
  m.rows = static_cast<std::size_t>(N);
  m.cols = static_cast<std::size_t>(dirichlet_at_R ? N - 1 : N);
  m.shift = -1;
  m.lo.assign(m.rows, 0.0);
  m.hi.assign(m.rows, 0.0);
  for (int i = 0; i < N; ++i) {
    double rc = cell(i);
    double c = -static_cast<double>(ell) / rc + b * rc;
    double sw = std::sqrt(w(rc));
    if (i >= 1) m.lo[i] = (-s / h + c / 2.0) * sw / std::sqrt(w(face(i - 1)));
    if (static_cast<std::size_t>(i) < m.cols)
      m.hi[i] = (s / h + c / 2.0) * sw / std::sqrt(w(face(i)));
  }
  return m;
}

// Interleaves the even-sector factor into the full first-order matrix:
// a 2N x 2N symmetric tridiagonal with zero diagonal whose off-diagonal
// alternates between the factor's two entry streams.
void assemble_full(const SectorFactor& even, ModeOperator& op) {
  std::size_t n2 = even.rows + even.cols;
  op.full.diag.assign(n2, 0.0);
  op.full.off.assign(n2 - 1, 0.0);
  if (even.shift == 0) {
    // DOF order: even_0, row_0, even_1, row_1, ...
    op.even_parity = 0;
    for (std::size_t j = 0; j < even.rows; ++j) {
      op.full.off[2 * j] = even.lo[j];
      if (2 * j + 1 < n2 - 1) op.full.off[2 * j + 1] = even.hi[j];
    }
  } else {
    // DOF order: row_0, even_0, row_1, even_1, ...
    op.even_parity = 1;
    for (std::size_t i = 0; i < even.rows; ++i) {
      if (i >= 1) op.full.off[2 * i - 1] = even.lo[i];
      if (2 * i < n2 - 1) op.full.off[2 * i] = even.hi[i];
    }
  }
}

}  // namespace

double ModeOperator::even_residual(const std::vector<double>& even_values) const {
  std::size_t n2 = full.size();
  std::vector<double> x(n2, 0.0);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n2; ++i) {
    if (static_cast<int>(i % 2) == even_parity) {
      if (k < even_values.size()) x[i] = even_values[k++];
    }
  }
  if (k != even_values.size())
    throw TamedError("even_residual: wrong number of even values");
  double nx = 0.0;
  for (double xi : x) nx += xi * xi;
  if (!(nx > 0)) throw TamedError("even_residual: zero section");
  auto y = full.apply(x);
  double ny = 0.0;
  for (double yi : y) ny += yi * yi;
  return std::sqrt(ny / nx);
}

ModeOperator build_mode_operator(const PlaneRotationModel& model,
                                 const TamingData& taming, int mode) {
  model.validate();
  taming.validate();
  if (taming.rank != 1)
    throw TamedError("plane model: taming rank must be 1");
  if (taming.v[0] <= 0)
    throw TamedError("plane model: taming value must be positive");
  const int n = model.rotation_weight;
  if (mode % n != 0)
    throw TamedError("mode " + std::to_string(mode) +
                     " is not a multiple of the rotation weight; the isotypic "
                     "component is zero");

  ModeOperator op;
  op.mode = mode;
  op.radial_index = -mode / n;
  op.slope = model.f0 * n * to_double(taming.v[0]);
  op.points = model.points;
  op.h = model.radius / model.points;
  op.flipped = model.flip_grading;

  const int p = op.radial_index;
  SectorFactor even =
      radial_sector_factor(p, +1, op.slope, model.radius, model.points, false);
  SectorFactor odd = radial_sector_factor(p + 1, -1, op.slope, model.radius,
                                          model.points, true);
  op.even_sq = even.gram();
  op.odd_sq = odd.gram();
  assemble_full(even, op);

  op.even_radii.resize(even.cols);
  for (std::size_t j = 0; j < even.cols; ++j)
    op.even_radii[j] = (p == 0) ? (j + 0.5) * op.h : (j + 1.0) * op.h;
  return op;
}

ModeOperator build_mode_operator(const PlaneRotationModel& model, int mode) {
  TamingData unit;
  unit.rank = 1;
  unit.v = {Rat(1)};
  return build_mode_operator(model, unit, mode);
}

KernelDims kernel_dims(const ModeOperator& op, double tol) {
  if (!(tol > 0))
    throw TamedError("kernel_dims: tolerance must be positive (no gap at 0)");
  auto count = [&](const SymTridiagonal& h, const char* grading) {
    int low = count_below(h, tol * tol);
    int zone = count_below(h, 100.0 * tol * tol) - low;
    if (zone > 0) {
      std::ostringstream msg;
      msg << "ambiguous spectral gap: " << zone << " " << grading
          << " eigenvalue(s) inside [tol^2, 100 tol^2] for mode " << op.mode;
      throw TamedError(msg.str());
    }
    return low;
  };
  KernelDims d;
  d.even = count(op.even_sq, "even");
  d.odd = count(op.odd_sq, "odd");
  if (op.flipped) std::swap(d.even, d.odd);
  return d;
}

namespace {

ModeResult solve_one_mode(const PlaneRotationModel& model,
                          const TamingData& taming, int mode, double tol,
                          const SolveOptions& options) {
  ModeResult r;
  r.mode = mode;
  try {
    if (mode % model.rotation_weight != 0) {
      r.solved = true;  // empty isotypic component
      return r;
    }
    ModeOperator op = build_mode_operator(model, taming, mode);
    double tol_mode = std::sqrt(tol * op.gap_estimate());
    r.dims = kernel_dims(op, tol_mode);
    if (options.grid_check) {
      PlaneRotationModel fine = model;
      fine.points = 2 * model.points;
      ModeOperator op2 = build_mode_operator(fine, taming, mode);
      KernelDims d2 = kernel_dims(op2, std::sqrt(tol * op2.gap_estimate()));
      if (!(d2 == r.dims)) {
        std::ostringstream msg;
        msg << "grid refinement changed kernel dimensions for mode " << mode
            << ": (" << r.dims.even << "," << r.dims.odd << ") at N="
            << model.points << " vs (" << d2.even << "," << d2.odd
            << ") at N=" << fine.points;
        throw TamedError(msg.str());
      }
    }
    r.solved = true;
  } catch (const std::exception& e) {
    r.solved = false;
    r.error = e.what();
  }
  return r;
}

}  // namespace

std::vector<ModeResult> solve_modes(const PlaneRotationModel& model,
                                    const TamingData& taming,
                                    const std::vector<int>& modes, double tol,
                                    const SolveOptions& options) {
  std::vector<ModeResult> out(modes.size());
  const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(modes.size());
#pragma omp parallel for schedule(dynamic) if (options.parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i)
    out[i] = solve_one_mode(model, taming, modes[i], tol, options);
  return out;
}

Character analytic_index(const PlaneRotationModel& model,
                         const TamingData& taming, const Window& window,
                         double tol, const SolveOptions& options) {
  model.validate();
  taming.validate();
  if (taming.rank != 1)
    throw TamedError("analytic index: built-in model requires rank 1");
  if (taming.v[0] <= 0)
    throw TamedError("analytic index: taming value must be positive");
  if (!window.lo || !window.hi)
    throw TamedError("analytic index: window must be bounded");
  if (!(tol > 0)) throw TamedError("analytic index: tolerance must be positive");

  auto report = admissibility_report(plane_admissibility_profile(model, taming));
  if (!report.pass)
    throw TamedError("analytic index: admissibility check failed");

  const Rat& v = taming.v[0];
  Int m_lo = rat_ceil(*window.lo / v);
  Int m_hi = rat_floor(*window.hi / v);
  std::vector<int> modes;
  for (Int m = m_lo; m <= m_hi; ++m) modes.push_back(m.convert_to<int>());

  auto results = solve_modes(model, taming, modes, tol, options);
  Character out(1, Window::slab({v}, *window.lo, *window.hi));
  for (const auto& r : results) {
    if (!r.solved) throw TamedError(r.error);
    out.add({r.mode}, Int(r.dims.even) - Int(r.dims.odd));
  }
  return out;
}

AdmissibilityProfile plane_admissibility_profile(const PlaneRotationModel& model,
                                                 const TamingData& taming,
                                                 int samples) {
  model.validate();
  taming.validate();
  if (taming.rank != 1 || taming.v[0] <= 0)
    throw TamedError("plane profile: rank-1 positive taming required");
  double v = to_double(taming.v[0]);
  double n = model.rotation_weight;
  AdmissibilityProfile p;
  for (int k = 1; k <= samples; ++k) {
    double r = model.radius * k / samples;
    p.radius.push_back(r);
    p.f.push_back(model.f0);
    p.df_norm.push_back(0.0);
    p.v_norm.push_back(n * v * r);
    // nu = |v_lie| + |grad v| + |mu(E)| + |v| + 1, flat closed forms.
    p.nu.push_back(v + n * v + n * v + n * v * r + 1.0);
  }
  return p;
}

std::vector<double> oscillator_grid(const OscillatorModel& model) {
  model.validate();
  double h = 2.0 * model.half_width / (model.points + 1);
  std::vector<double> t(model.points);
  for (int i = 0; i < model.points; ++i)
    t[i] = -model.half_width + (i + 1) * h;
  return t;
}

namespace {

SymTridiagonal oscillator_matrix(const OscillatorModel& model) {
  auto t = oscillator_grid(model);
  double h = 2.0 * model.half_width / (model.points + 1);
  SymTridiagonal m;
  m.diag.resize(t.size());
  m.off.assign(t.size() - 1, -1.0 / (h * h));
  for (std::size_t i = 0; i < t.size(); ++i)
    m.diag[i] = 2.0 / (h * h) + t[i] * t[i] + model.branch;
  return m;
}

}  // namespace

std::vector<double> oscillator_spectrum(const OscillatorModel& model, int k) {
  return smallest_eigenvalues(oscillator_matrix(model), k);
}

std::vector<double> ground_state_profile(const OscillatorModel& model) {
  if (model.branch != -1)
    throw TamedError("ground_state_profile: minus branch required");
  SymTridiagonal m = oscillator_matrix(model);
  double l0 = smallest_eigenvalues(m, 1)[0];
  return eigenvector(m, l0);
}

}  // namespace tamed
