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
//
// Prior-belief models over a single attribute (or a pre-correlated attribute
// group). Each continuous model exposes the window-mass function
//   g(z) = Pr[d(x, t) <= z],
// the probability that the attribute lies within distance z of the target t.

#ifndef ADVCAL_PRIORS_HPP_
#define ADVCAL_PRIORS_HPP_

#include <optional>
#include <string>
#include <vector>

namespace advcal {

enum class PriorKind { kUniformContinuous, kNormal, kDiscretePmf, kWorstCase };

struct DiscretePoint {
  std::string label;
  double mass = 0.0;
};

// Window-mass pair used by the calibration engine: p = g(r) is the prior of
// a correct guess, q = g(a) the mass of the constrained search space.
struct WindowMass {
  double p = 0.0;  // g(r)
  double q = 1.0;  // g(a); 1 when unconstrained
  double r = 0.0;
  double a = 0.0;
};

// Immutable prior-belief model. All operations are const and re-entrant.
class Prior {
 public:
  // Uniform over an interval of total length R > 0.
  static Prior Uniform(double width);
  // Normal with the bound R defaulted to mu + 3*sqrt(2)*sigma.
  static Prior Normal(double mu, double sigma);
  // Normal with an explicit bound R.
  static Prior Normal(double mu, double sigma, double explicit_R);
  // Discrete probability mass function; masses must sum to 1 within 1e-12.
  static Prior Discrete(std::vector<DiscretePoint> points);
  // Unknown prior constrained only by the window mass q = g(a), q in (0, 1].
  static Prior WorstCase(double window_mass_q);

  PriorKind kind() const { return kind_; }

  // g(z) for CDF-backed priors (uniform, normal). Throws UnsupportedError
  // for discrete and worst-case priors, which route through their own
  // selection rules.
  double window_mass(double t, double z) const;

  // The per-dimension metric bound R: explicit width for uniform priors,
  // explicit or defaulted bound for normal priors.
  double extent() const;
  // True when extent() came from the 3-sigma-sqrt2 rule instead of the
  // caller.
  bool extent_defaulted() const { return extent_defaulted_; }

  double mu() const { return mu_; }
  double sigma() const { return sigma_; }
  double width() const { return width_; }
  double worst_case_q() const { return worst_q_; }
  const std::vector<DiscretePoint>& points() const { return points_; }

 private:
  Prior() = default;

  PriorKind kind_ = PriorKind::kUniformContinuous;
  double width_ = 0.0;  // uniform support length
  double mu_ = 0.0;
  double sigma_ = 0.0;
  double explicit_R_ = 0.0;
  bool has_explicit_R_ = false;
  bool extent_defaulted_ = false;
  double worst_q_ = 1.0;
  std::vector<DiscretePoint> points_;
};

// g(z) = min(2z/R, 1) for a uniform prior over an interval of length R. The
// location t does not enter the mass; boundary placement is handled by
// corner_adjust.
double window_mass_uniform(double R, double t, double z);

// Doubles the window radius so that neighbours of a boundary-located target
// are admitted without changing the exponent distance.
double corner_adjust(double a);

// g(z) = (erf((t+z-mu)/(sigma*sqrt(2))) - erf((t-z-mu)/(sigma*sqrt(2)))) / 2.
double window_mass_normal(double mu, double sigma, double t, double z);

// Default bound R = mu + 3*sqrt(2)*sigma, covering erf(3) ~ 0.9999779 of the
// mass of N(mu, sigma^2).
double default_R_normal(double mu, double sigma);

// The prior probability requiring the most noise at full window: (1-delta)/2.
double worst_case_prior(double delta);

// Stationary prior of the windowed objective as printed in the source
// analysis: (delta(1-delta) + q(1-q)) / (2(delta + q - 1)). Requires
// delta + q > 1; at q = 1 it reduces to (1-delta)/2 exactly.
double worst_case_prior_windowed(double delta, double q);

// Candidate worst-case masses of a discrete prior set. `below` / `above`
// bracket the worst-case prior (1-delta)/2 among the raw masses; the
// two-sided bound depends on the effective prior min(p, 1-p), so candidates
// additionally brackets the worst case in that space. Evaluating epsilon on
// every candidate and keeping the smallest recovers the exact minimum over
// all points.
struct WorstDiscretePrior {
  std::optional<double> below;
  std::optional<double> above;
  std::vector<int> candidate_indices;
  std::vector<double> candidate_masses;
};
WorstDiscretePrior worst_discrete_prior(const std::vector<double>& masses,
                                        double delta);

}  // namespace advcal

#endif  // ADVCAL_PRIORS_HPP_
