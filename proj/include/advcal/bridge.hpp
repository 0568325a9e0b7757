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
// Conversions between (eps, delta)-differential privacy and
// (eps', delta')-guessing advantage, in both directions. delta' is the
// probability with which the advantage bound HOLDS (the integral of the
// noise density over [-d, d] equals delta'), not a failure probability.

#ifndef ADVCAL_BRIDGE_HPP_
#define ADVCAL_BRIDGE_HPP_

#include <limits>

#include "advcal/advantage.hpp"
#include "advcal/noise.hpp"

namespace advcal {

struct BridgeParams {
  double eps = 0.0;          // DP epsilon
  double delta = 0.0;        // DP delta
  double eps_prime = 0.0;    // advantage bound
  double delta_prime = 0.0;  // probability the bound holds
  double avg_advantage = 1.0;  // 1 + (eps' - 1) delta'
  double chi_lo = 0.0;       // inf output density over the window
  double chi_hi = 0.0;       // sup output density over the window
  double alpha = 0.0;        // exponent slack in [0, eps]
  double b_prime = 0.0;      // adjusted divisor
  double d_of_delta = 0.0;   // quantile d(delta')
};

struct DpToGaResult {
  double eps_prime = 0.0;
  bool satisfied = false;  // eps' >= 0
  bool vacuous = false;    // chi_lo = 0: only the trivial bound 1 - p
  BridgeParams params;
};

// Fixed delta': d(delta') from the mechanism quantile, a density floor
// chi = f_eta(c_t + d), and
//   eps' = 1 / (1 + (1/(e^eps + delta/chi)) * q/p) - p.
// A negative eps' means the requested delta' cannot be satisfied.
DpToGaResult dp_to_ga_fixed_delta(double eps, double delta, double p, double q,
                                  const MechanismSpec& mech,
                                  double delta_prime);

struct DpToGaEpsResult {
  double delta_prime = 0.0;
  bool exists = false;
  BridgeParams params;
};

// Fixed eps': solves f_eta(c_t + d) = delta / ((p+eps')/(1-(p+eps')) * q/p
// - e^eps) for d and returns delta' as the central mass of [-d, d]. The
// required density floor may be unreachable, in which case no delta' exists.
DpToGaEpsResult dp_to_ga_fixed_eps(double eps, double delta, double p,
                                   double q, const MechanismSpec& mech,
                                   double eps_prime);

// Average advantage 1 + (eps' - 1) * delta'.
double average_advantage(double eps_prime, double delta_prime);

struct ProbabilisticDpResult {
  EpsilonResult eps;
  double delta = 0.0;
  bool vacuous = false;  // delta = 1 guarantees nothing
};

// Probabilistic DP shares delta between the DP and advantage statements:
// epsilon comes from the pure pipeline unchanged and the advantage guarantee
// holds with probability 1 - delta.
ProbabilisticDpResult ga_to_dp_probabilistic(double delta_shared,
                                             const CalibrationInput& input);

// Posterior bound under approximate DP with density ceiling chi_bar:
// 1 / (1 + e^{-eps} (1 - delta/chi_bar) q/p). Vacuous when delta >= chi_bar.
double approx_dp_posterior_bound(double eps, double delta, double chi_bar,
                                 double p, double q);

struct ApproxLaplaceConfig {
  int alpha_grid = 64;
  int b_grid = 64;
  // Starting smoothness; NaN selects the built-in heuristic derived from the
  // sensitivity bound C.
  double beta_start = std::numeric_limits<double>::quiet_NaN();
  double gamma_start = 4.0;  // shape of the Cauchy starting point
};

struct ApproxLaplaceResult {
  bool finite = false;
  double eps_pure = 0.0;   // the delta = 0 epsilon the search starts from
  double eps_dp = 0.0;     // eps_pure - alpha
  double delta_dp = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double b_prime = 0.0;
  double noise_level = std::numeric_limits<double>::infinity();  // c_t / b'
  double baseline_noise =
      std::numeric_limits<double>::infinity();  // alpha = 0 candidate
  double effective_C = 0.0;
  MechanismSpec mech;
};

// Approximate-DP parameter search for Laplace noise over beta-smooth
// derivative sensitivity. Starts from the pure-epsilon solution, scans the
// exponent slack alpha over [0, eps] (64-point grid refined once around the
// incumbent), and for each alpha computes the adjusted divisor b' both by
// the closed form b' = -beta W_{-1}(-4 c e^{eps-alpha-1-(eps-alpha)/beta} /
// ((1-e^{-alpha}) beta)) and by a grid scan over (0, eps-alpha-beta],
// keeping the parameterization of least noise c_t/b'. alpha = 0 degenerates
// to delta = 0 with b' = eps - beta. With C unbounded the search probes
// doubling sensitivity caps C'; a non-finite c_t yields the infinite-noise
// result.
ApproxLaplaceResult ga_to_dp_approximate_laplace(
    double delta_target, double p, double q, double c_t, double C,
    const ApproxLaplaceConfig& config = {});

}  // namespace advcal

#endif  // ADVCAL_BRIDGE_HPP_
