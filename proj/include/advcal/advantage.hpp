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
// Core univariate conversion from a guessing-advantage bound delta to the
// privacy parameter epsilon. The windowed bound reads
//
//   epsilon = -ln( (p / (q - p)) * (1/(delta + p) - 1) ) / a
//
// where p is the prior mass of the guess set, q the mass of the
// indistinguishability window of radius a, and the guarantee keeps the
// posterior within delta of the prior.

#ifndef ADVCAL_ADVANTAGE_HPP_
#define ADVCAL_ADVANTAGE_HPP_

#include <limits>
#include <string>

#include "advcal/priors.hpp"

namespace advcal {

enum class BoundSide { kLower, kUpper, kBoth };

struct CalibrationInput {
  double p = 0.0;      // prior of correct guess, g(r)
  double q = 1.0;      // window mass g(a); 1 when unconstrained
  double delta = 0.0;  // advantage bound
  double a = 1.0;      // window radius in the exponent; 1 for unit metrics

  // Throws InvalidArgumentError / EmptyWindowError on violated invariants.
  void Check() const;
};

struct EpsilonResult {
  double epsilon = 0.0;
  bool feasible = false;
  // The advantage constraint is satisfied by any epsilon (delta + p >= 1);
  // epsilon is +infinity. Distinct from infeasible (window too tight).
  bool vacuous = false;
  BoundSide side = BoundSide::kLower;
  // Raw argument of the logarithm; > 1 means the bound cannot be met with a
  // positive epsilon at this window.
  double log_argument = std::numeric_limits<double>::quiet_NaN();
  double window_a = std::numeric_limits<double>::quiet_NaN();
  double p = std::numeric_limits<double>::quiet_NaN();
  double q = std::numeric_limits<double>::quiet_NaN();
  // Smallest p/q seen by a scan; posterior cannot drop below this as
  // epsilon -> 0, so it diagnoses infeasibility.
  double min_posterior_floor = std::numeric_limits<double>::quiet_NaN();
  std::string detail;
};

// One-sided (upper) bound of the windowed posterior. Returns a vacuous
// +infinity result when delta + p >= 1, an infeasible result when the log
// argument is >= 1 (equivalently delta + p <= p/q).
EpsilonResult epsilon_one_sided(double p, double q, double delta, double a);

// Two-sided bound at full window: evaluates the lower bound with prior p and
// the upper bound with prior 1-p, returns the minimum. The binding side
// follows the shortcut rule p <= 1-p => lower side binds.
EpsilonResult epsilon_two_sided(double p, double delta, double a);

// Posterior upper bound 1 / (1 + e^{-epsilon*a} (q-p)/p); inverse of
// epsilon_one_sided.
double posterior_upper_bound(double p, double q, double epsilon, double a);

// Samples window radii a over (r, R] on an N-point grid with p = g(r),
// q = g(a),
// keeps the feasible window with maximal epsilon and refines it locally so
// the result matches an exhaustive fine scan. Falls back to a = R; if no
// window is feasible the result records the smallest p/q observed.
EpsilonResult scan_window(const Prior& prior, double t, double r, double delta,
                          double R, int grid_size);

// Smallest window radius at which the bound becomes feasible, i.e. the root
// of g(a)*(delta + p) = p on (r, R]. Returns nullopt when even a = R is
// infeasible.
std::optional<double> feasibility_boundary_a(const Prior& prior, double t,
                                             double r, double delta, double R);

}  // namespace advcal

#endif  // ADVCAL_ADVANTAGE_HPP_
