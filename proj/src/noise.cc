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

#include "hetbell/noise.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hetbell {

std::string_view measurement_noise_str(MeasurementNoise kind) {
    return kind == MeasurementNoise::outcome_flip ? "flip" : "pauli";
}

MeasurementNoise parse_measurement_noise(std::string_view text) {
    if (text == "pauli") {
        return MeasurementNoise::pre_measurement_pauli;
    }
    if (text == "flip") {
        return MeasurementNoise::outcome_flip;
    }
    throw std::invalid_argument("unknown measurement noise '" + std::string(text) + "' (expected pauli or flip)");
}

namespace {

uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

}  // namespace

RngStream::RngStream(uint64_t seed, uint64_t stream_id)
    : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream_id ^ 0x6A09E667F3BCC909ULL))) {
}

void NoiseModel::validate() const {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("error probability must lie in [0, 1], got " + std::to_string(p));
    }
}

Pauli sample_1q_noise(RngStream &rng, double p) {
    double u = rng.uniform();
    if (u >= p) {
        return Pauli::I;
    }
    return static_cast<Pauli>(1 + rng.below(3));
}

const std::array<std::pair<Pauli, Pauli>, 15> &two_qubit_error_table() {
    static const auto table = [] {
        std::array<std::pair<Pauli, Pauli>, 15> t{};
        size_t k = 0;
        for (uint8_t a = 0; a < 4; a++) {
            for (uint8_t b = 0; b < 4; b++) {
                if (a == 0 && b == 0) {
                    continue;
                }
                t[k++] = {static_cast<Pauli>(a), static_cast<Pauli>(b)};
            }
        }
        return t;
    }();
    return table;
}

std::pair<Pauli, Pauli> sample_2q_noise(RngStream &rng, double p) {
    double u = rng.uniform();
    if (u >= p) {
        return {Pauli::I, Pauli::I};
    }
    return two_qubit_error_table()[rng.below(15)];
}

bool measurement_flip(RngStream &rng, double p, Pauli &frame_on_qubit) {
    frame_on_qubit = mul(frame_on_qubit, sample_1q_noise(rng, p));
    return has_x(frame_on_qubit);
}

BellDistribution::BellDistribution(std::array<double, 4> weights) : weights_(weights) {
    double total = 0;
    for (double w : weights_) {
        if (!(w >= 0)) {
            throw std::invalid_argument("Bell state weights must be non-negative");
        }
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw std::invalid_argument("Bell state weights must sum to 1");
    }
}

BellDistribution BellDistribution::measured_source() {
    return BellDistribution({0.85, 0.04, 0.055, 0.055});
}

BellDistribution BellDistribution::werner(double fidelity) {
    if (!(fidelity >= 0 && fidelity <= 1)) {
        throw std::invalid_argument("fidelity must lie in [0, 1]");
    }
    double e = (1 - fidelity) / 3;
    return BellDistribution({fidelity, e, e, e});
}

BellState BellDistribution::sample_state(RngStream &rng) const {
    double u = rng.uniform();
    double acc = 0;
    for (uint8_t k = 0; k < 3; k++) {
        acc += weights_[k];
        if (u < acc) {
            return static_cast<BellState>(k);
        }
    }
    return BellState::psi_minus;
}

Pauli sample_raw_bell(RngStream &rng) {
    static const BellDistribution source = BellDistribution::measured_source();
    return source.sample(rng);
}

FaultSampler::FaultSampler(RngStream &rng, double p) : rng_(rng), p_(p), log_q_(std::log1p(-p)) {
    countdown_ = draw_gap();
}

uint64_t FaultSampler::draw_gap() {
    if (p_ <= 0) {
        return std::numeric_limits<uint64_t>::max();
    }
    if (p_ >= 1) {
        return 1;
    }
    // Number of sites up to and including the next fault, Geometric(p) on {1, 2, ...}.
    double u = 1.0 - rng_.uniform();
    double gap = std::floor(std::log(u) / log_q_) + 1;
    if (gap >= 1.8e19) {
        return std::numeric_limits<uint64_t>::max();
    }
    return uint64_t(gap);
}

}  // namespace hetbell
