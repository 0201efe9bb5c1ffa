#include "tamed/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tamed {

std::vector<double> SymTridiagonal::apply(const std::vector<double>& x) const {
  std::size_t n = size();
  if (x.size() != n) throw TamedError("tridiagonal apply: size mismatch");
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) {
    double acc = diag[i] * x[i];
    if (i > 0) acc += off[i - 1] * x[i - 1];
    if (i + 1 < n) acc += off[i] * x[i + 1];
    y[i] = acc;
  }
  return y;
}

namespace {

double pivmin(const SymTridiagonal& t) {
  double m = 1.0;
  for (double b : t.off) m = std::max(m, b * b);
  return std::numeric_limits<double>::min() * m;
}

}  // namespace

int count_below(const SymTridiagonal& t, double x) {
  const double pmin = pivmin(t);
  int count = 0;
  double d = 1.0;
  std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    double b2 = (i > 0) ? t.off[i - 1] * t.off[i - 1] : 0.0;
    d = t.diag[i] - x - b2 / d;
    if (std::abs(d) < pmin) d = -pmin;  // standard bisection safeguard
    if (d < 0) ++count;
  }
  return count;
}

double gershgorin_lower(const SymTridiagonal& t) {
  double lo = std::numeric_limits<double>::infinity();
  std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
               (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    lo = std::min(lo, t.diag[i] - r);
  }
  return lo;
}

double gershgorin_upper(const SymTridiagonal& t) {
  double hi = -std::numeric_limits<double>::infinity();
  std::size_t n = t.size();
  for (std::size_t i = 0; i < n; ++i) {
    double r = (i > 0 ? std::abs(t.off[i - 1]) : 0.0) +
               (i + 1 < n ? std::abs(t.off[i]) : 0.0);
    hi = std::max(hi, t.diag[i] + r);
  }
  return hi;
}

namespace {

// Bisects for the j-th eigenvalue (1-based) inside [lo, hi], assuming
// count_below(lo) < j <= count_below(hi).
double bisect_one(const SymTridiagonal& t, int j, double lo, double hi) {
  double scale = std::max({std::abs(lo), std::abs(hi), 1.0});
  const double tol = 4.0 * std::numeric_limits<double>::epsilon() * scale;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (count_below(t, mid) >= j)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> eigenvalues_below(const SymTridiagonal& t, double cutoff) {
  int k = count_below(t, cutoff);
  std::vector<double> evs(k);
  double glo = gershgorin_lower(t);
  for (int j = 1; j <= k; ++j) evs[j - 1] = bisect_one(t, j, glo, cutoff);
  return evs;
}

std::vector<double> smallest_eigenvalues(const SymTridiagonal& t, int k) {
  if (k <= 0) return {};
  if (static_cast<std::size_t>(k) > t.size())
    throw TamedError("smallest_eigenvalues: k exceeds matrix size");
  double glo = gershgorin_lower(t);
  double ghi = gershgorin_upper(t) + 1.0;
  std::vector<double> evs(k);
  for (int j = 1; j <= k; ++j) evs[j - 1] = bisect_one(t, j, glo, ghi);
  return evs;
}

std::vector<double> eigenvector(const SymTridiagonal& t, double lambda) {
  std::size_t n = t.size();
  if (n == 0) throw TamedError("eigenvector: empty matrix");

  // LU factorization of (T - lambda I) with partial pivoting. Row swaps in a
  // tridiagonal produce one extra superdiagonal of fill.
  std::vector<double> d(n), e(n > 1 ? n - 1 : 0), f(n > 2 ? n - 2 : 0, 0.0);
  std::vector<double> l(n > 1 ? n - 1 : 0);
  std::vector<char> swapped(n > 1 ? n - 1 : 0, 0);
  for (std::size_t i = 0; i < n; ++i) d[i] = t.diag[i] - lambda;
  std::vector<double> sub(n > 1 ? n - 1 : 0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    e[i] = t.off[i];
    sub[i] = t.off[i];
  }
  const double tiny = std::numeric_limits<double>::min() * 4.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (std::abs(sub[i]) > std::abs(d[i])) {
      swapped[i] = 1;
      std::swap(d[i], sub[i]);
      std::swap(e[i], d[i + 1]);
      if (i + 2 < n) {
        f[i] = e[i + 1];
        e[i + 1] = 0.0;
      }
    }
    if (std::abs(d[i]) < tiny) d[i] = (d[i] < 0 ? -tiny : tiny);
    double m = sub[i] / d[i];
    l[i] = m;
    d[i + 1] -= m * e[i];
    if (i + 2 < n) e[i + 1] -= m * f[i];
  }
  if (std::abs(d[n - 1]) < tiny) d[n - 1] = (d[n - 1] < 0 ? -tiny : tiny);

  auto solve = [&](std::vector<double>& x) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (swapped[i]) std::swap(x[i], x[i + 1]);
      x[i + 1] -= l[i] * x[i];
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double acc = x[ii];
      if (ii + 1 < n) acc -= e[ii] * x[ii + 1];
      if (ii + 2 < n) acc -= f[ii] * x[ii + 2];
      x[ii] = acc / d[ii];
    }
  };

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  double resid = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 8; ++iter) {
    solve(x);
    double norm = 0.0;
    for (double xi : x) norm += xi * xi;
    norm = std::sqrt(norm);
    if (!(norm > 0) || !std::isfinite(norm))
      throw TamedError("eigenvector: inverse iteration broke down");
    for (double& xi : x) xi /= norm;
    auto y = t.apply(x);
    resid = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double r = y[i] - lambda * x[i];
      resid += r * r;
    }
    resid = std::sqrt(resid);
    double scale = std::max(std::abs(lambda), gershgorin_upper(t) -
                                                  gershgorin_lower(t));
    if (resid <= 1e-10 * std::max(scale, 1.0)) break;
  }
  double scale = std::max(std::abs(lambda),
                          gershgorin_upper(t) - gershgorin_lower(t));
  if (!(resid <= 1e-6 * std::max(scale, 1.0)))
    throw TamedError("eigenvector: inverse iteration did not converge");

  std::size_t imax = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (std::abs(x[i]) > std::abs(x[imax])) imax = i;
  if (x[imax] < 0)
    for (double& xi : x) xi = -xi;
  return x;
}

}  // namespace tamed
