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

#include "hetbell/circuit.h"

#include <sstream>
#include <stdexcept>

namespace hetbell {

Circuit Circuit::schedule(std::vector<CliffordGate> gates, size_t register_size) {
    Circuit c;
    c.register_size_ = register_size;
    std::vector<size_t> ready(register_size, 0);
    for (size_t k = 0; k < gates.size(); k++) {
        const auto &g = gates[k];
        if (g.max_qubit() >= register_size) {
            throw std::invalid_argument("gate operand outside register: " + g.str());
        }
        size_t t = ready[g.q0];
        if (g.is_two_qubit()) {
            t = std::max(t, ready[g.q1]);
        }
        if (t == c.timesteps_.size()) {
            c.timesteps_.emplace_back();
        }
        c.timesteps_[t].push_back(k);
        ready[g.q0] = t + 1;
        if (g.is_two_qubit()) {
            ready[g.q1] = t + 1;
        }
    }
    c.gates_ = std::move(gates);
    return c;
}

Circuit Circuit::from_layers(const std::vector<std::vector<CliffordGate>> &layers, size_t register_size) {
    Circuit c;
    c.register_size_ = register_size;
    for (const auto &layer : layers) {
        std::vector<bool> busy(register_size, false);
        auto claim = [&](uint32_t q, const CliffordGate &g) {
            if (busy[q]) {
                throw std::invalid_argument("two gates on one qubit in a single timestep: " + g.str());
            }
            busy[q] = true;
        };
        std::vector<size_t> step;
        for (const auto &g : layer) {
            if (g.max_qubit() >= register_size) {
                throw std::invalid_argument("gate operand outside register: " + g.str());
            }
            claim(g.q0, g);
            if (g.is_two_qubit()) {
                claim(g.q1, g);
            }
            step.push_back(c.gates_.size());
            c.gates_.push_back(g);
        }
        if (!step.empty()) {
            c.timesteps_.push_back(std::move(step));
        }
    }
    return c;
}

Circuit Circuit::parse(std::string_view text, size_t register_size) {
    std::vector<std::vector<CliffordGate>> layers(1);
    bool ticked = false;
    std::istringstream in{std::string(text)};
    std::string line;
    size_t line_number = 0;
    while (std::getline(in, line)) {
        line_number++;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        std::istringstream words(line);
        std::string name;
        if (!(words >> name)) {
            continue;
        }
        if (name == "TICK") {
            ticked = true;
            layers.emplace_back();
            continue;
        }
        auto &gates = layers.back();
        uint32_t a = 0;
        uint32_t b = 0;
        if (!(words >> a)) {
            throw std::invalid_argument("line " + std::to_string(line_number) + ": missing operand");
        }
        if (name == "H") {
            gates.push_back(CliffordGate::h(a));
        } else if (name == "CNOT") {
            if (!(words >> b)) {
                throw std::invalid_argument("line " + std::to_string(line_number) + ": CNOT needs two operands");
            }
            gates.push_back(CliffordGate::cnot(a, b));
        } else if (name == "IDLE") {
            gates.push_back(CliffordGate::idle(a));
        } else if (name == "PREPZ") {
            gates.push_back(CliffordGate::prep_z(a));
        } else if (name == "MEASZ") {
            gates.push_back(CliffordGate::meas_z(a));
        } else {
            throw std::invalid_argument("line " + std::to_string(line_number) + ": unknown gate '" + name + "'");
        }
    }
    if (ticked) {
        return from_layers(layers, register_size);
    }
    return schedule(std::move(layers.front()), register_size);
}

std::vector<uint32_t> Circuit::idle_qubits(size_t step) const {
    std::vector<bool> busy(register_size_, false);
    for (size_t k : timesteps_.at(step)) {
        busy[gates_[k].q0] = true;
        if (gates_[k].is_two_qubit()) {
            busy[gates_[k].q1] = true;
        }
    }
    std::vector<uint32_t> idle;
    for (uint32_t q = 0; q < register_size_; q++) {
        if (!busy[q]) {
            idle.push_back(q);
        }
    }
    return idle;
}

std::vector<std::vector<CliffordGate>> Circuit::layers() const {
    std::vector<std::vector<CliffordGate>> out;
    for (const auto &step : timesteps_) {
        auto &layer = out.emplace_back();
        for (size_t k : step) {
            layer.push_back(gates_[k]);
        }
    }
    return out;
}

std::string Circuit::str() const {
    std::string out;
    for (size_t t = 0; t < timesteps_.size(); t++) {
        if (t > 0) {
            out += "TICK\n";
        }
        for (size_t k : timesteps_[t]) {
            out += gates_[k].str();
            out += '\n';
        }
    }
    return out;
}

GateCounts gate_counts(const Circuit &c) {
    GateCounts counts;
    for (const auto &g : c.gates()) {
        if (g.kind == GateKind::CNOT) {
            counts.n_2q++;
        } else if (g.kind == GateKind::H) {
            counts.n_1q++;
        }
    }
    return counts;
}

uint64_t kq(const Circuit &c, size_t qubit_budget) {
    if (qubit_budget < c.register_size()) {
        throw std::invalid_argument("qubit budget smaller than the circuit register");
    }
    return uint64_t(qubit_budget) * c.depth();
}

ResourceMetrics resource_metrics(const Circuit &c, size_t qubit_budget) {
    auto counts = gate_counts(c);
    return {c.depth(), kq(c, qubit_budget), counts.n_1q, counts.n_2q};
}

}  // namespace hetbell
