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

#ifndef HETBELL_NOISE_H
#define HETBELL_NOISE_H

#include <array>
#include <cstdint>
#include <limits>
#include <random>
#include <string_view>
#include <utility>

#include "hetbell/pauli.h"

namespace hetbell {

/// Independent random stream for one trial. Streams are keyed by
/// (master seed, stream id) so trial results never depend on which worker runs them.
class RngStream {
   public:
    RngStream(uint64_t seed, uint64_t stream_id);

    uint64_t next() {
        return engine_();
    }
    /// Uniform double in [0, 1).
    double uniform() {
        return double(engine_() >> 11) * 0x1.0p-53;
    }
    /// Uniform integer in [0, n).
    uint32_t below(uint32_t n) {
        return uint32_t((uint64_t(engine_() >> 32) * n) >> 32);
    }

   private:
    std::mt19937_64 engine_;
};

enum class MeasurementNoise : uint8_t {
    /// Depolarizing Pauli applied just before a Z readout (X or Y flips it).
    pre_measurement_pauli,
    /// The outcome bit is flipped with probability p.
    outcome_flip,
};

/// CLI names: "pauli" and "flip".
std::string_view measurement_noise_str(MeasurementNoise kind);
MeasurementNoise parse_measurement_noise(std::string_view text);

struct NoiseModel {
    double p = 0;
    MeasurementNoise measurement = MeasurementNoise::pre_measurement_pauli;

    /// Throws std::invalid_argument unless 0 <= p <= 1.
    void validate() const;
};

/// I with probability 1-p, otherwise X, Y or Z uniformly.
Pauli sample_1q_noise(RngStream &rng, double p);

/// (I, I) with probability 1-p, otherwise one of the 15 non-identity pairs uniformly.
std::pair<Pauli, Pauli> sample_2q_noise(RngStream &rng, double p);

/// The 15 non-identity two-qubit Paulis, in the order used by the samplers.
const std::array<std::pair<Pauli, Pauli>, 15> &two_qubit_error_table();

/// Composes a 1q noise draw into `frame_on_qubit` and returns whether the
/// resulting frame flips an ideal Z-basis outcome.
bool measurement_flip(RngStream &rng, double p, Pauli &frame_on_qubit);

enum class BellState : uint8_t { phi_plus = 0, phi_minus = 1, psi_plus = 2, psi_minus = 3 };

/// Error on the second half of a Bell pair relative to Phi+.
constexpr Pauli bell_error(BellState s) {
    constexpr Pauli table[] = {Pauli::I, Pauli::Z, Pauli::X, Pauli::Y};
    return table[static_cast<uint8_t>(s)];
}

/// Bell-diagonal source state, weights ordered (Phi+, Phi-, Psi+, Psi-).
class BellDistribution {
   public:
    explicit BellDistribution(std::array<double, 4> weights);

    /// 0.85 Phi+ + 0.04 Phi- + 0.055 Psi+ + 0.055 Psi-.
    static BellDistribution measured_source();
    static BellDistribution werner(double fidelity);
    static BellDistribution perfect() {
        return werner(1.0);
    }

    const std::array<double, 4> &weights() const {
        return weights_;
    }
    double fidelity() const {
        return weights_[0];
    }
    BellState sample_state(RngStream &rng) const;
    Pauli sample(RngStream &rng) const {
        return bell_error(sample_state(rng));
    }

   private:
    std::array<double, 4> weights_;
};

/// Error on the second half of a fresh pair drawn from the measured source.
Pauli sample_raw_bell(RngStream &rng);

/// Walks a sequence of noise sites that each fault with the same probability p,
/// skipping ahead geometrically between faults. Statistically identical to an
/// independent Bernoulli(p) draw per site, but quiet stretches cost O(1).
class FaultSampler {
   public:
    FaultSampler(RngStream &rng, double p);

    /// Consumes one site; true if it faults.
    bool fault() {
        if (--countdown_ == 0) {
            countdown_ = draw_gap();
            return true;
        }
        return false;
    }
    /// If none of the next n sites fault, consumes them and returns true.
    /// Otherwise consumes nothing and returns false.
    bool quiet_for(uint64_t n) {
        if (countdown_ > n) {
            countdown_ -= n;
            return true;
        }
        return false;
    }
    /// Uniform non-identity single-qubit Pauli.
    Pauli draw_1q() {
        return static_cast<Pauli>(1 + rng_.below(3));
    }
    /// Uniform non-identity two-qubit Pauli.
    std::pair<Pauli, Pauli> draw_2q() {
        return two_qubit_error_table()[rng_.below(15)];
    }

   private:
    uint64_t draw_gap();

    RngStream &rng_;
    double p_;
    double log_q_;
    uint64_t countdown_;
};

}  // namespace hetbell

#endif
