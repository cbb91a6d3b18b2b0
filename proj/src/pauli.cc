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

#include "hetbell/pauli.h"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hetbell {

char pauli_char(Pauli p) {
    return "IXZY"[static_cast<uint8_t>(p)];
}

Pauli pauli_from_char(char c) {
    switch (c) {
        case 'I':
        case '_':
            return Pauli::I;
        case 'X':
            return Pauli::X;
        case 'Y':
            return Pauli::Y;
        case 'Z':
            return Pauli::Z;
    }
    throw std::invalid_argument(std::string("Not a Pauli character: '") + c + "'");
}

CliffordGate CliffordGate::cnot(uint32_t control, uint32_t target) {
    if (control == target) {
        throw std::invalid_argument("CNOT operands must be distinct");
    }
    return {GateKind::CNOT, control, target};
}

std::string CliffordGate::str() const {
    switch (kind) {
        case GateKind::H:
            return "H " + std::to_string(q0);
        case GateKind::CNOT:
            return "CNOT " + std::to_string(q0) + " " + std::to_string(q1);
        case GateKind::IDLE:
            return "IDLE " + std::to_string(q0);
        case GateKind::PREP_Z:
            return "PREPZ " + std::to_string(q0);
        case GateKind::MEAS_Z:
            return "MEASZ " + std::to_string(q0);
    }
    return "?";
}

PauliString::PauliString(size_t num_qubits)
    : num_qubits_(num_qubits), xs_((num_qubits + 63) / 64, 0), zs_((num_qubits + 63) / 64, 0) {
}

PauliString PauliString::from_str(std::string_view text) {
    PauliString result(text.size());
    for (size_t q = 0; q < text.size(); q++) {
        result.set(q, pauli_from_char(text[q]));
    }
    return result;
}

PauliString PauliString::single(size_t num_qubits, size_t qubit, Pauli p) {
    PauliString result(num_qubits);
    result.set(qubit, p);
    return result;
}

PauliString PauliString::from_masks(size_t num_qubits, uint64_t xs, uint64_t zs) {
    if (num_qubits > 64) {
        throw std::invalid_argument("from_masks supports at most 64 qubits");
    }
    PauliString result(num_qubits);
    if (num_qubits > 0) {
        uint64_t keep = num_qubits == 64 ? ~uint64_t{0} : (uint64_t{1} << num_qubits) - 1;
        result.xs_[0] = xs & keep;
        result.zs_[0] = zs & keep;
    }
    return result;
}

Pauli PauliString::get(size_t q) const {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    return make_pauli((xs_[q / 64] >> (q % 64)) & 1, (zs_[q / 64] >> (q % 64)) & 1);
}

void PauliString::set(size_t q, Pauli p) {
    if (q >= num_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
    uint64_t bit = uint64_t{1} << (q % 64);
    xs_[q / 64] = has_x(p) ? (xs_[q / 64] | bit) : (xs_[q / 64] & ~bit);
    zs_[q / 64] = has_z(p) ? (zs_[q / 64] | bit) : (zs_[q / 64] & ~bit);
}

size_t PauliString::weight() const {
    size_t w = 0;
    for (size_t k = 0; k < xs_.size(); k++) {
        w += std::popcount(xs_[k] | zs_[k]);
    }
    return w;
}

bool PauliString::is_identity() const {
    return weight() == 0;
}

PauliString &PauliString::operator*=(const PauliString &other) {
    if (other.num_qubits_ != num_qubits_) {
        throw std::invalid_argument("Pauli string size mismatch");
    }
    for (size_t k = 0; k < xs_.size(); k++) {
        xs_[k] ^= other.xs_[k];
        zs_[k] ^= other.zs_[k];
    }
    return *this;
}

std::string PauliString::str() const {
    std::string out(num_qubits_, '_');
    for (size_t q = 0; q < num_qubits_; q++) {
        Pauli p = get(q);
        if (p != Pauli::I) {
            out[q] = pauli_char(p);
        }
    }
    return out;
}

std::string PauliString::sparse_str() const {
    std::stringstream out;
    bool first = true;
    for (size_t q = 0; q < num_qubits_; q++) {
        Pauli p = get(q);
        if (p == Pauli::I) {
            continue;
        }
        if (!first) {
            out << '*';
        }
        first = false;
        out << pauli_char(p) << q;
    }
    if (first) {
        out << 'I';
    }
    return out.str();
}

PauliString compose(const PauliString &a, const PauliString &b) {
    PauliString result = a;
    result *= b;
    return result;
}

bool anticommutes(const PauliString &a, const PauliString &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("Pauli string size mismatch");
    }
    auto ax = a.x_words();
    auto az = a.z_words();
    auto bx = b.x_words();
    auto bz = b.z_words();
    uint64_t acc = 0;
    for (size_t k = 0; k < ax.size(); k++) {
        acc ^= (ax[k] & bz[k]) ^ (az[k] & bx[k]);
    }
    return std::popcount(acc) & 1;
}

void conjugate_in_place(const CliffordGate &g, PauliString &s) {
    if (g.max_qubit() >= s.size()) {
        throw std::out_of_range("gate operand outside register");
    }
    switch (g.kind) {
        case GateKind::H: {
            Pauli p = s.get(g.q0);
            s.set(g.q0, make_pauli(has_z(p), has_x(p)));
            break;
        }
        case GateKind::CNOT: {
            Pauli c = s.get(g.q0);
            Pauli t = s.get(g.q1);
            // X_c -> X_c X_t, Z_t -> Z_c Z_t.
            s.set(g.q1, make_pauli(has_x(t) ^ has_x(c), has_z(t)));
            s.set(g.q0, make_pauli(has_x(c), has_z(c) ^ has_z(t)));
            break;
        }
        case GateKind::IDLE:
        case GateKind::PREP_Z:
        case GateKind::MEAS_Z:
            break;
    }
}

PauliString conjugate_through(const CliffordGate &g, PauliString s) {
    conjugate_in_place(g, s);
    return s;
}

}  // namespace hetbell
