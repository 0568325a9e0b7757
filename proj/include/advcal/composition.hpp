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
// Budget calculus for queries with multiple outputs. A mechanism whose
// per-output parameters are eps_1..eps_m is l_q(eps)-differentially private
// where l_q is the dual of the input norm l_p: the l_1 input metric
// degenerates to parallel composition (max), l_inf to sequential (sum).

#ifndef ADVCAL_COMPOSITION_HPP_
#define ADVCAL_COMPOSITION_HPP_

#include <span>
#include <vector>

#include "advcal/multivariate.hpp"

namespace advcal {

enum class CompositionRegime { kSequential, kParallel };

// Sum of the per-output budgets.
double sequential_compose(std::span<const double> eps);

// ||eps||_q with 1/p + 1/q = 1 for the input norm l_p: p=1 -> max,
// p=2 -> Euclidean, p=inf -> sum.
double dual_norm_compose(std::span<const double> eps, LpNorm input_norm);

// Equal split of a total budget over m outputs: total/m per output under the
// sequential regime, total per output under the parallel regime.
std::vector<double> partition_budget(double total_eps, int m,
                                     CompositionRegime regime);

}  // namespace advcal

#endif  // ADVCAL_COMPOSITION_HPP_
