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

#ifndef HETBELL_CIRCUIT_H
#define HETBELL_CIRCUIT_H

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hetbell/pauli.h"

namespace hetbell {

/// An ordered gate list together with its as-soon-as-possible timestep schedule.
///
/// Gates within one timestep have disjoint supports, and any two gates sharing a
/// qubit keep their relative order from the input list.
class Circuit {
   public:
    Circuit() = default;

    /// Greedy ASAP schedule: each gate lands in the earliest timestep after the
    /// last gate touching any of its operands.
    static Circuit schedule(std::vector<CliffordGate> gates, size_t register_size);

    /// Keeps the given timesteps as they are. Throws if two gates in one layer share a qubit.
    static Circuit from_layers(const std::vector<std::vector<CliffordGate>> &layers, size_t register_size);

    /// Parses the plain-text form written by `str()`. Blank lines and '#' comments are ignored.
    /// `TICK` lines separate timesteps; text without any TICK is scheduled ASAP.
    static Circuit parse(std::string_view text, size_t register_size);

    size_t register_size() const {
        return register_size_;
    }
    const std::vector<CliffordGate> &gates() const {
        return gates_;
    }
    /// Gate indices per timestep.
    const std::vector<std::vector<size_t>> &timesteps() const {
        return timesteps_;
    }
    size_t depth() const {
        return timesteps_.size();
    }
    /// Qubits not acted on by any gate in the given timestep.
    std::vector<uint32_t> idle_qubits(size_t step) const;

    std::vector<std::vector<CliffordGate>> layers() const;

    /// One gate per line (`H 3`, `CNOT 0 1`, `MEASZ 2`), with `TICK` between timesteps.
    std::string str() const;

   private:
    size_t register_size_ = 0;
    std::vector<CliffordGate> gates_;
    std::vector<std::vector<size_t>> timesteps_;
};

struct GateCounts {
    uint64_t n_1q = 0;
    uint64_t n_2q = 0;
    bool operator==(const GateCounts &) const = default;
};

struct ResourceMetrics {
    uint64_t depth = 0;
    uint64_t kq = 0;
    uint64_t n_1q = 0;
    uint64_t n_2q = 0;
};

/// Counts CNOTs as two-qubit gates and Hadamards as single-qubit gates.
/// Idle slots, preparations and measurements are not gates.
GateCounts gate_counts(const Circuit &c);

/// qubit_budget * depth. The budget may exceed the register (surface-code patches
/// are charged for their measurement ancillas too).
uint64_t kq(const Circuit &c, size_t qubit_budget);

ResourceMetrics resource_metrics(const Circuit &c, size_t qubit_budget);

}  // namespace hetbell

#endif
