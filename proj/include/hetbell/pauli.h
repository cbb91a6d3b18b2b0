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

#ifndef HETBELL_PAULI_H
#define HETBELL_PAULI_H

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hetbell {

/// Phaseless single-qubit Pauli. Bit 0 is the X component, bit 1 the Z component.
enum class Pauli : uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr Pauli mul(Pauli a, Pauli b) {
    return static_cast<Pauli>(static_cast<uint8_t>(a) ^ static_cast<uint8_t>(b));
}
constexpr bool has_x(Pauli p) {
    return static_cast<uint8_t>(p) & 1;
}
constexpr bool has_z(Pauli p) {
    return static_cast<uint8_t>(p) & 2;
}
constexpr Pauli make_pauli(bool x, bool z) {
    return static_cast<Pauli>(uint8_t(x) | (uint8_t(z) << 1));
}
constexpr bool anticommutes(Pauli a, Pauli b) {
    return (has_x(a) & has_z(b)) ^ (has_z(a) & has_x(b));
}
char pauli_char(Pauli p);
Pauli pauli_from_char(char c);

enum class GateKind : uint8_t { H, CNOT, IDLE, PREP_Z, MEAS_Z };

struct CliffordGate {
    GateKind kind;
    uint32_t q0;
    uint32_t q1;  // CNOT target; unused otherwise.

    static CliffordGate h(uint32_t q) {
        return {GateKind::H, q, 0};
    }
    static CliffordGate cnot(uint32_t control, uint32_t target);
    static CliffordGate idle(uint32_t q) {
        return {GateKind::IDLE, q, 0};
    }
    static CliffordGate prep_z(uint32_t q) {
        return {GateKind::PREP_Z, q, 0};
    }
    static CliffordGate meas_z(uint32_t q) {
        return {GateKind::MEAS_Z, q, 0};
    }

    bool is_two_qubit() const {
        return kind == GateKind::CNOT;
    }
    uint32_t max_qubit() const {
        return is_two_qubit() ? std::max(q0, q1) : q0;
    }
    bool operator==(const CliffordGate &other) const = default;
    std::string str() const;
};

/// Bit-packed Pauli string over a register of any size.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(size_t num_qubits);

    /// Parses "IXYZ" style text; '_' is accepted as identity.
    static PauliString from_str(std::string_view text);
    static PauliString single(size_t num_qubits, size_t qubit, Pauli p);
    /// Builds from packed masks (bit q = qubit q). Requires num_qubits <= 64.
    static PauliString from_masks(size_t num_qubits, uint64_t xs, uint64_t zs);

    size_t size() const {
        return num_qubits_;
    }
    Pauli get(size_t q) const;
    void set(size_t q, Pauli p);
    size_t weight() const;
    bool is_identity() const;

    std::span<const uint64_t> x_words() const {
        return xs_;
    }
    std::span<const uint64_t> z_words() const {
        return zs_;
    }
    /// Low 64 qubits of the X (resp. Z) component.
    uint64_t x_mask() const {
        return xs_.empty() ? 0 : xs_[0];
    }
    uint64_t z_mask() const {
        return zs_.empty() ? 0 : zs_[0];
    }

    PauliString &operator*=(const PauliString &other);
    bool operator==(const PauliString &other) const = default;

    /// Dense form, e.g. "_X_Z".
    std::string str() const;
    /// Sparse form, e.g. "X1*Z3"; "I" for the identity.
    std::string sparse_str() const;

   private:
    size_t num_qubits_ = 0;
    std::vector<uint64_t> xs_;
    std::vector<uint64_t> zs_;
};

PauliString compose(const PauliString &a, const PauliString &b);
bool anticommutes(const PauliString &a, const PauliString &b);

/// Heisenberg image g * s * g^-1 with the phase dropped.
PauliString conjugate_through(const CliffordGate &g, PauliString s);
void conjugate_in_place(const CliffordGate &g, PauliString &s);

/// Fixed-width Pauli frame for registers of at most 64 qubits. This is the
/// representation used on the Monte Carlo hot path.
struct PauliMask {
    uint64_t x = 0;
    uint64_t z = 0;

    static PauliMask from(const PauliString &s) {
        return {s.x_mask(), s.z_mask()};
    }
    PauliString to_string(size_t num_qubits) const {
        return PauliString::from_masks(num_qubits, x, z);
    }
    bool is_identity() const {
        return (x | z) == 0;
    }
    Pauli get(uint32_t q) const {
        return make_pauli((x >> q) & 1, (z >> q) & 1);
    }
    void apply(uint32_t q, Pauli p) {
        x ^= uint64_t(has_x(p)) << q;
        z ^= uint64_t(has_z(p)) << q;
    }
    void h(uint32_t q) {
        uint64_t d = ((x >> q) ^ (z >> q)) & 1;
        x ^= d << q;
        z ^= d << q;
    }
    void cnot(uint32_t c, uint32_t t) {
        x ^= ((x >> c) & 1) << t;
        z ^= ((z >> t) & 1) << c;
    }
    void conjugate(const CliffordGate &g) {
        if (g.kind == GateKind::H) {
            h(g.q0);
        } else if (g.kind == GateKind::CNOT) {
            cnot(g.q0, g.q1);
        }
    }
    PauliMask &operator^=(const PauliMask &o) {
        x ^= o.x;
        z ^= o.z;
        return *this;
    }
    friend PauliMask operator^(PauliMask a, const PauliMask &b) {
        return a ^= b;
    }
    bool operator==(const PauliMask &) const = default;
};

inline bool anticommutes(const PauliMask &a, const PauliMask &b) {
    return std::popcount((a.x & b.z) ^ (a.z & b.x)) & 1;
}

}  // namespace hetbell

#endif
