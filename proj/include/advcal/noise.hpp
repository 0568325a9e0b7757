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
// Mechanism calibration: epsilon -> noise scale for the Laplace and
// generalized Cauchy mechanisms, and the probability that noise stays below
// a bound (quantiles of the symmetric interval [-a, a]).

#ifndef ADVCAL_NOISE_HPP_
#define ADVCAL_NOISE_HPP_

namespace advcal {

enum class MechanismKind { kLaplace, kGenCauchy };

// Noise mechanism description. For Laplace the scale is the classic lambda;
// for generalized Cauchy it is xi = c_t / b with the smooth-sensitivity
// parameters recorded alongside.
struct MechanismSpec {
  MechanismKind kind = MechanismKind::kLaplace;
  double scale = 1.0;
  double gamma = 4.0;  // generalized Cauchy shape
  double b = 0.0;      // divisor parameter
  double beta = 0.0;   // smoothness
  double c_t = 0.0;    // derivative sensitivity at the actual data (input)
  bool infinite_noise = false;

  double density(double x) const;
  // Mass of the symmetric interval [-halfwidth, halfwidth].
  double central_mass(double halfwidth) const;
  // Halfwidth carrying central mass p.
  double quantile(double p) const;

  static MechanismSpec Laplace(double scale);
  static MechanismSpec GenCauchy(double xi, double gamma);
};

// lambda = sensitivity / epsilon; +infinity sentinel when epsilon = 0.
double laplace_scale(double epsilon, double sensitivity);

// Halfwidth a = -ln(1 - p)/epsilon of the symmetric interval carrying mass p
// under the Laplace density (epsilon/2) e^{-|x| epsilon}.
double laplace_quantile(double p, double epsilon);

// Halfwidth a with integral_{-a}^{a} C_gamma / (1 + |x|^gamma) dx = p within
// 1e-9, found by doubling-window bracketing and bisection. For gamma = 4 the
// normalizer is sqrt(2)/pi.
double cauchy_quantile(double p, double gamma);

// Change of variable for xi-scaled noise: the bound a becomes a * xi.
double scaled_quantile(double a, double xi);

// Normalizing constant of 1/(1 + |x|^gamma); computed by quadrature for
// gamma != 4 and cached per gamma.
double gencauchy_normalizer(double gamma);

// Mass of [-a, a] under the unscaled generalized Cauchy density.
double gencauchy_central_mass(double a, double gamma);

double laplace_density(double x, double scale);
double gencauchy_density(double x, double gamma);

}  // namespace advcal

#endif  // ADVCAL_NOISE_HPP_
