// Copyright 2026 The hetbell Authors
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

#ifndef HETBELL_ANALYTIC_H
#define HETBELL_ANALYTIC_H

#include <array>

namespace hetbell {

/// Approximate fidelity after two noiseless rounds from Werner inputs: F^2 / (F^2 + (1-F)^2).
double distilled_fidelity_two_rounds(double f);

/// Werner state weights over (Phi+, Phi-, Psi+, Psi-).
std::array<double, 4> werner_components(double f);

/// Success probability of one noiseless round on two Werner pairs:
/// F^2 + 2F(1-F)/3 + 5((1-F)/3)^2.
double purification_success_probability(double f);

}  // namespace hetbell

#endif
