#include "tamed/taming.hpp"

#include <algorithm>
#include <cmath>

#include "tamed/fixed_point.hpp"

namespace tamed {

void TamingData::validate() const {
  if (rank < 1) throw TamedError("taming: rank must be >= 1");
  if (static_cast<int>(v.size()) != rank)
    throw TamedError("taming: vector length does not match rank");
  if (std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; }))
    throw TamedError("taming vector must be nonzero");
}

Rat support_bound(const std::vector<FixedComponent>& components,
                  const TamingData& taming) {
  taming.validate();
  if (components.empty())
    throw TamedError("support_bound: no fixed components");
  bool first = true;
  Rat c = 0;
  for (const auto& comp : components) {
    for (const auto& s : comp.summands) {
      Rat p = pairing(s.weight, taming.v);
      if (first || p > c) c = p;
      first = false;
    }
  }
  if (first) throw TamedError("support_bound: no module summands");
  return c;
}

void AdmissibilityProfile::validate() const {
  std::size_t n = radius.size();
  if (n == 0) throw TamedError("admissibility profile: empty");
  if (f.size() != n || df_norm.size() != n || v_norm.size() != n ||
      nu.size() != n)
    throw TamedError("admissibility profile: array lengths differ");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(radius[i] < radius[i + 1]))
      throw TamedError("admissibility profile: radii not increasing");
}

AdmissibilityReport admissibility_report(const AdmissibilityProfile& profile,
                                         double threshold,
                                         double tail_fraction) {
  profile.validate();
  AdmissibilityReport rep;
  rep.threshold = threshold;
  std::size_t n = profile.radius.size();
  rep.ratios.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    double num = profile.f[i] * profile.f[i] * profile.v_norm[i] * profile.v_norm[i];
    double den = profile.df_norm[i] * profile.v_norm[i] +
                 profile.f[i] * profile.nu[i] + 1.0;
    rep.ratios[i] = num / den;
  }
  rep.last_ratio = rep.ratios.back();
  std::size_t tail = std::max<std::size_t>(
      2, static_cast<std::size_t>(std::ceil(tail_fraction * n)));
  tail = std::min(tail, n);
  bool monotone = true;
  for (std::size_t i = n - tail; i + 1 < n; ++i)
    if (rep.ratios[i + 1] < rep.ratios[i]) monotone = false;
  rep.pass = monotone && rep.last_ratio >= threshold;
  return rep;
}

}  // namespace tamed
