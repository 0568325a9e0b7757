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
// Brute-force Bayesian verifier. For a small discrete input space under an
// explicit noise mechanism it computes the exact posterior at each output and
// the worst-case advantage over an output grid, independently of the
// calibration path it checks.

#ifndef ADVCAL_ORACLE_HPP_
#define ADVCAL_ORACLE_HPP_

#include <vector>

#include "advcal/noise.hpp"
#include "advcal/priors.hpp"

namespace advcal {

struct DiscreteScenario {
  std::vector<double> masses;   // prior, sums to 1
  std::vector<double> outputs;  // query output per point
  std::vector<bool> target;     // membership in the guess set
  MechanismSpec mech;

  void Check() const;
  double prior_target_mass() const;
};

// Exact posterior of the target set given the observed output y:
//   sum_{target} f(y - out_i) m_i / sum_all f(y - out_i) m_i.
double posterior_at_output(const DiscreteScenario& s, double y);

struct OutputGridSpec {
  double pad_scales = 10.0;         // grid range extends this many noise scales
  double step_scale_fraction = 0.02;  // step = scale * fraction (1/50)
};

struct AdvantageEstimate {
  double max_advantage = 0.0;
  double argmax_y = 0.0;
  int grid_points = 0;
  double grid_step = 0.0;
  double grid_lo = 0.0;
  double grid_hi = 0.0;
};

// Supremum over the output grid of |posterior - prior|, evaluated for the
// target set and its complement. Grid range and step follow the spec field
// defaults: [min output - 10*scale, max output + 10*scale] at scale/50.
AdvantageEstimate max_advantage(const DiscreteScenario& s,
                                const OutputGridSpec& grid = {});

struct DiscretizedPrior {
  std::vector<double> masses;     // renormalized bin masses
  std::vector<double> midpoints;
  double max_bin_mass = 0.0;      // discretization error bound
  double dropped_mass = 0.0;      // prior mass outside the range
};

// Bin-midpoint masses from the prior CDF over [lo, hi], renormalized.
// Requires bins >= 10 and a CDF-backed prior.
DiscretizedPrior discretize_continuous(const Prior& prior, int bins, double lo,
                                       double hi);

}  // namespace advcal

#endif  // ADVCAL_ORACLE_HPP_
