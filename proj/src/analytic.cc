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

#include "hetbell/analytic.h"

#include <stdexcept>

namespace hetbell {

namespace {

void check_fidelity(double f) {
    if (!(f >= 0 && f <= 1)) {
        throw std::invalid_argument("fidelity must lie in [0, 1]");
    }
}

}  // namespace

double distilled_fidelity_two_rounds(double f) {
    check_fidelity(f);
    double g = 1 - f;
    return f * f / (f * f + g * g);
}

std::array<double, 4> werner_components(double f) {
    check_fidelity(f);
    double e = (1 - f) / 3;
    return {f, e, e, e};
}

double purification_success_probability(double f) {
    check_fidelity(f);
    double e = (1 - f) / 3;
    return f * f + 2 * f * e + 5 * e * e;
}

}  // namespace hetbell
