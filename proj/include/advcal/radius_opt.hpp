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
// Closed-form optimal windows for uniform priors. The optimal radius solves
// a stationarity condition whose inverse is the Lambert W function
// (W(y) e^{W(y)} = y).

#ifndef ADVCAL_RADIUS_OPT_HPP_
#define ADVCAL_RADIUS_OPT_HPP_

namespace advcal {

struct LambertEval {
  double y = 0.0;
  double w = 0.0;
  double residual = 0.0;  // |w e^w - y|
};

// Principal branch W_0, defined for y >= -1/e. Damped Newton iteration with
// a bisection fallback; the residual is guaranteed <= 1e-12 away from the
// branch point.
LambertEval lambert_w(double y);

// Secondary branch W_{-1} on (-1/e, 0), needed by the negative-argument
// closed form of the approximate-DP parameter search.
LambertEval lambert_w_m1(double y);

// The window radius maximizing e^{-a*eps} (a - r)/r, namely a = 1/eps + r.
double optimal_a_univariate(double epsilon, double r);

// Posterior bound attained at the optimal radius:
// 1 / (1 + (e^{eps*r + 1} * eps*r)^{-1}).
double optimal_a_posterior(double epsilon, double r);

struct ClosedFormEpsilon {
  double epsilon = 0.0;
  bool vacuous = false;    // r/R + delta >= 1
  double lambert_arg = 0.0;
};

// Closed-form epsilon for a uniform prior over a ball of radius R:
// eps = W( (r/R + delta) / (e (1 - (r/R + delta))) ) / r. Note R is a radius
// here (guess-set mass r/R), unlike the diameter convention of
// window_mass_uniform.
ClosedFormEpsilon epsilon_uniform_closed_form(double r, double R,
                                              double delta);

struct MultidimBound {
  double posterior = 0.0;
  double optimal_a = 0.0;  // n / eps
};

// n-dimensional uniform bound: posterior <= (eps * e * r / n)^n attained at
// a = n/eps (clamped to 1).
MultidimBound posterior_bound_multidim(double epsilon, double r, int n);

}  // namespace advcal

#endif  // ADVCAL_RADIUS_OPT_HPP_
