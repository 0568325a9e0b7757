// Copyright 2026 The advcal Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "advcal/priors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "advcal/errors.hpp"

namespace advcal {

namespace {

constexpr double kMassSumTolerance = 1e-12;

double clamp01(double x) { return std::min(1.0, std::max(0.0, x)); }

}  // namespace

Prior Prior::Uniform(double width) {
  if (!(width > 0.0)) {
    throw InvalidPriorError("uniform prior requires a positive width");
  }
  Prior p;
  p.kind_ = PriorKind::kUniformContinuous;
  p.width_ = width;
  return p;
}

Prior Prior::Normal(double mu, double sigma) {
  if (!(sigma > 0.0)) {
    throw InvalidPriorError("normal prior requires sigma > 0");
  }
  Prior p;
  p.kind_ = PriorKind::kNormal;
  p.mu_ = mu;
  p.sigma_ = sigma;
  p.extent_defaulted_ = true;
  return p;
}

Prior Prior::Normal(double mu, double sigma, double explicit_R) {
  if (!(sigma > 0.0)) {
    throw InvalidPriorError("normal prior requires sigma > 0");
  }
  if (!(explicit_R > 0.0)) {
    throw InvalidPriorError("normal prior bound R must be positive");
  }
  Prior p;
  p.kind_ = PriorKind::kNormal;
  p.mu_ = mu;
  p.sigma_ = sigma;
  p.explicit_R_ = explicit_R;
  p.has_explicit_R_ = true;
  return p;
}

Prior Prior::Discrete(std::vector<DiscretePoint> points) {
  if (points.empty()) {
    throw InvalidPriorError("discrete prior requires at least one point");
  }
  double sum = 0.0;
  for (const auto& pt : points) {
    if (pt.mass < 0.0 || pt.mass > 1.0) {
      throw InvalidPriorError("discrete prior mass outside [0, 1]: " +
                              pt.label);
    }
    sum += pt.mass;
  }
  if (std::abs(sum - 1.0) > kMassSumTolerance) {
    throw InvalidPriorError("discrete prior masses must sum to 1");
  }
  Prior p;
  p.kind_ = PriorKind::kDiscretePmf;
  p.points_ = std::move(points);
  return p;
}

Prior Prior::WorstCase(double window_mass_q) {
  if (!(window_mass_q > 0.0) || window_mass_q > 1.0) {
    throw InvalidPriorError("worst-case prior requires q in (0, 1]");
  }
  Prior p;
  p.kind_ = PriorKind::kWorstCase;
  p.worst_q_ = window_mass_q;
  return p;
}

double Prior::window_mass(double t, double z) const {
  switch (kind_) {
    case PriorKind::kUniformContinuous:
      return window_mass_uniform(width_, t, z);
    case PriorKind::kNormal:
      return window_mass_normal(mu_, sigma_, t, z);
    default:
      throw UnsupportedError(
          "window_mass is defined for CDF-backed priors only");
  }
}

double Prior::extent() const {
  switch (kind_) {
    case PriorKind::kUniformContinuous:
      return width_;
    case PriorKind::kNormal:
      return has_explicit_R_ ? explicit_R_ : default_R_normal(mu_, sigma_);
    default:
      // Unit metric: any two distinct labels are at distance 1.
      return 1.0;
  }
}

double window_mass_uniform(double R, double /*t*/, double z) {
  if (!(R > 0.0)) {
    throw InvalidPriorError("uniform window mass requires R > 0");
  }
  if (z < 0.0) {
    throw InvalidArgumentError("window radius must be non-negative");
  }
  return clamp01(2.0 * z / R);
}

double corner_adjust(double a) {
  if (!(a > 0.0)) {
    throw InvalidArgumentError("corner_adjust requires a > 0");
  }
  return 2.0 * a;
}

double window_mass_normal(double mu, double sigma, double t, double z) {
  if (!(sigma > 0.0)) {
    throw InvalidPriorError("normal window mass requires sigma > 0");
  }
  if (z < 0.0) {
    throw InvalidArgumentError("window radius must be non-negative");
  }
  const double denom = sigma * std::sqrt(2.0);
  const double mass =
      (std::erf((t + z - mu) / denom) - std::erf((t - z - mu) / denom)) / 2.0;
  return clamp01(mass);
}

double default_R_normal(double mu, double sigma) {
  if (!(sigma > 0.0)) {
    throw InvalidPriorError("default_R_normal requires sigma > 0");
  }
  return mu + 3.0 * std::sqrt(2.0) * sigma;
}

double worst_case_prior(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgumentError("worst_case_prior requires delta in (0, 1)");
  }
  return (1.0 - delta) / 2.0;
}

double worst_case_prior_windowed(double delta, double q) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw InvalidArgumentError("delta must lie in (0, 1)");
  }
  if (!(q > 0.0 && q <= 1.0)) {
    throw InvalidArgumentError("window mass q must lie in (0, 1]");
  }
  const double denom = 2.0 * (delta + q - 1.0);
  if (!(denom > 0.0)) {
    throw NoStationaryPointError(
        "no stationary point for delta + q <= 1; use the full-window worst "
        "case (1 - delta)/2");
  }
  return (delta * (1.0 - delta) + q * (1.0 - q)) / denom;
}

WorstDiscretePrior worst_discrete_prior(const std::vector<double>& masses,
                                        double delta) {
  if (masses.empty()) {
    throw InvalidPriorError("worst_discrete_prior requires a non-empty PMF");
  }
  const double target = worst_case_prior(delta);

  WorstDiscretePrior out;
  // Nearest raw masses bracketing the worst case. Zero-mass points cannot be
  // the true value and carry no advantage; skip them.
  int below_idx = -1, above_idx = -1;
  // Nearest points in effective-prior space m = min(p, 1-p), which is what
  // the two-sided bound actually depends on.
  int eff_below_idx = -1, eff_above_idx = -1;
  for (int i = 0; i < static_cast<int>(masses.size()); ++i) {
    const double m = masses[i];
    if (m <= 0.0) continue;
    if (m <= target && (below_idx < 0 || m > masses[below_idx])) {
      below_idx = i;
    }
    if (m > target && (above_idx < 0 || m < masses[above_idx])) {
      above_idx = i;
    }
    const double eff = std::min(m, 1.0 - m);
    const auto eff_of = [&](int idx) {
      return std::min(masses[idx], 1.0 - masses[idx]);
    };
    if (eff <= target && (eff_below_idx < 0 || eff > eff_of(eff_below_idx))) {
      eff_below_idx = i;
    }
    if (eff > target && (eff_above_idx < 0 || eff < eff_of(eff_above_idx))) {
      eff_above_idx = i;
    }
  }
  if (below_idx < 0 && above_idx < 0) {
    throw InvalidPriorError("discrete prior has no positive mass");
  }

  if (below_idx >= 0) out.below = masses[below_idx];
  if (above_idx >= 0) out.above = masses[above_idx];

  for (int idx : {below_idx, above_idx, eff_below_idx, eff_above_idx}) {
    if (idx < 0) continue;
    if (std::find(out.candidate_indices.begin(), out.candidate_indices.end(),
                  idx) == out.candidate_indices.end()) {
      out.candidate_indices.push_back(idx);
      out.candidate_masses.push_back(masses[idx]);
    }
  }
  return out;
}

}  // namespace advcal
