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
// AND-event and OR-event calibration over independent components. The
// attacker wins an AND-event by guessing every attribute within its radius,
// an OR-event by guessing at least one.

#ifndef ADVCAL_MULTIVARIATE_HPP_
#define ADVCAL_MULTIVARIATE_HPP_

#include <string>
#include <vector>

#include "advcal/advantage.hpp"
#include "advcal/priors.hpp"

namespace advcal {

enum class LpNorm { kL1, kL2, kLInf };

enum class Combinator { kAnd, kOr };

struct SensitiveAttribute {
  std::string id;
  double t = 0.0;   // actual value
  double r = 0.0;   // precision radius
  Prior prior = Prior::WorstCase(1.0);
  double R = 1.0;   // per-dimension metric bound
};

struct SensitiveSet {
  std::vector<SensitiveAttribute> items;
  Combinator combinator = Combinator::kAnd;
};

struct MetricSpace {
  LpNorm norm = LpNorm::kLInf;
  std::vector<double> dims;  // per-dimension bounds R_i
};

// Per-block prior ratios alpha_0..alpha_n of the OR-event decomposition and
// the per-block epsilon values; the overall epsilon is min_k eps_k.
struct OrBlockDecomposition {
  std::vector<double> alpha;
  std::vector<double> eps;
  int argmax_alpha = 0;
  bool full_window = false;
};

struct OrEventResult {
  EpsilonResult overall;
  OrBlockDecomposition blocks;
};

// AND-event: p = prod g_i(r_i), q = prod g_i(a_i), exponent distance
// a = max_i a_i (the mechanism is calibrated w.r.t. the l_inf norm). Reduces
// to the univariate engine at n = 1.
EpsilonResult and_event_epsilon(const SensitiveSet& set, double delta,
                                const std::vector<double>& a_choices);

// OR-event. At the full window (a_i = R_i) the only change from an AND-event
// is the guess-set mass prod g(R_i) - prod g(R_i - r_i). Interior windows
// split the space into blocks: the central block contributes
// alpha_0 = (prod g(a_i) - prod g(a_i - r_i)) / prod g(a_i - r_i), each
// dimension contributes alpha_k = g_k(r_k) / (g_k(a_k) - g_k(r_k)), and the
// exponent distance doubles to 2 * max_i a_i.
OrEventResult or_event_epsilon(const SensitiveSet& set, double delta,
                               const std::vector<double>& a_choices);

// Rescales every dimension by 1/r_i so each precision radius becomes 1;
// bounds, targets and priors are scaled consistently. Epsilon transforms
// inversely with distance units: eps_original = eps_scaled * factor for the
// recorded per-dimension factors 1/r_i.
struct ScaledSensitiveSet {
  SensitiveSet set;
  std::vector<double> factors;  // 1/r_i per dimension

  // The shared factor when all dimensions scaled equally; throws
  // InvalidArgumentError otherwise (epsilon un-scaling needs one unit).
  double uniform_factor() const;
  double unscale_epsilon(double scaled_epsilon) const;
};
ScaledSensitiveSet scale_dimensions(const SensitiveSet& set);

double lp_norm(const std::vector<double>& v, LpNorm norm);

}  // namespace advcal

#endif  // ADVCAL_MULTIVARIATE_HPP_
