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

#ifndef HETBELL_CODES_H
#define HETBELL_CODES_H

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hetbell/circuit.h"
#include "hetbell/pauli.h"

namespace hetbell {

enum class CodeName : uint8_t { physical, steane7, surface3 };

std::string_view code_name_str(CodeName name);
/// Throws std::invalid_argument for unknown names.
CodeName parse_code_name(std::string_view text);

/// One bit per generator, x_generators first.
struct Syndrome {
    std::vector<bool> bits;

    bool is_zero() const;
    uint64_t index() const;
    bool operator==(const Syndrome &) const = default;
};

/// A CSS stabilizer code on n physical qubits encoding one logical qubit.
///
/// Construction validates the generator set (pure types, commuting, independent)
/// and the logical pair, then builds a minimum-weight lookup decoder. Instances
/// are immutable.
class StabilizerCode {
   public:
    StabilizerCode(
        CodeName name,
        size_t n,
        Circuit encoder,
        size_t input_wire,
        std::vector<PauliString> x_generators,
        std::vector<PauliString> z_generators,
        PauliString logical_x,
        PauliString logical_z);

    CodeName name() const {
        return name_;
    }
    size_t n() const {
        return n_;
    }
    const Circuit &encoder() const {
        return encoder_;
    }
    size_t input_wire() const {
        return input_wire_;
    }
    const std::vector<PauliString> &x_generators() const {
        return x_generators_;
    }
    const std::vector<PauliString> &z_generators() const {
        return z_generators_;
    }
    /// x_generators followed by z_generators.
    std::vector<PauliString> generators() const;
    size_t num_generators() const {
        return generator_masks_.size();
    }
    const PauliString &logical_x() const {
        return logical_x_;
    }
    const PauliString &logical_z() const {
        return logical_z_;
    }
    /// The logical operator made of X (resp. Z) Paulis. After a transversal
    /// Hadamard these are logical_z (resp. logical_x).
    const PauliString &x_type_logical() const {
        return logicals_swapped_ ? logical_z_ : logical_x_;
    }
    const PauliString &z_type_logical() const {
        return logicals_swapped_ ? logical_x_ : logical_z_;
    }

    Syndrome syndrome(const PauliString &e) const;
    /// Minimum-weight correction for a syndrome.
    PauliString decode(const Syndrome &s) const;
    /// Logical action of an error with trivial syndrome. Throws std::invalid_argument otherwise.
    Pauli logical_class(const PauliString &e) const;

    // Packed views used by the simulator. Bit i of a syndrome index is generator i.
    const std::vector<PauliMask> &generator_masks() const {
        return generator_masks_;
    }
    const std::vector<uint64_t> &z_type_generator_supports() const {
        return z_type_supports_;
    }
    uint64_t syndrome_index(const PauliMask &e) const {
        uint64_t s = 0;
        for (size_t k = 0; k < generator_masks_.size(); k++) {
            s |= uint64_t(anticommutes(generator_masks_[k], e)) << k;
        }
        return s;
    }
    const PauliMask &correction(uint64_t syndrome_index) const {
        return decoder_table_[syndrome_index];
    }
    const std::vector<PauliMask> &decoder_table() const {
        return decoder_table_;
    }
    PauliMask logical_x_mask() const {
        return PauliMask::from(logical_x_);
    }
    PauliMask logical_z_mask() const {
        return PauliMask::from(logical_z_);
    }

    /// Human-readable generator and logical listing.
    std::string str() const;

   private:
    CodeName name_;
    size_t n_;
    Circuit encoder_;
    size_t input_wire_;
    std::vector<PauliString> x_generators_;
    std::vector<PauliString> z_generators_;
    PauliString logical_x_;
    PauliString logical_z_;
    bool logicals_swapped_ = false;
    std::vector<PauliMask> generator_masks_;
    std::vector<uint64_t> z_type_supports_;
    std::vector<PauliMask> decoder_table_;
};

/// Seven-qubit encoder, transcribed gate for gate. The state to encode sits on wire 3.
Circuit build_steane_encoder();
/// Thirteen-qubit distance-3 surface code encoder. The state to encode sits on wire 6.
Circuit build_surface3_encoder();

/// Stabilizers are the images of Z on every |0> ancilla, logicals the images of
/// X and Z on the input wire. Throws std::logic_error when the images do not form
/// an independent, commuting, CSS-separable generator set with distance >= 3.
StabilizerCode derive_code(CodeName name, const Circuit &encoder, size_t input_wire);

/// Derived from the encoders above.
StabilizerCode make_code(CodeName name);

/// Minimum-weight decoder over all 2^(n-k) syndromes. Ties go to the
/// lexicographically smallest (qubit, Pauli) sequence with X < Y < Z.
std::vector<PauliMask> build_decoder(size_t n, std::span<const PauliMask> generators);

/// Conjugates every generator and logical through the gates and rebuilds the decoder.
StabilizerCode conjugate_code_through(const StabilizerCode &code, std::span<const CliffordGate> gates);

std::vector<CliffordGate> transversal_h(size_t n);

/// True if no Pauli of weight 1 or 2 is an undetectable nontrivial logical.
bool has_distance_at_least_3(const StabilizerCode &code);

/// GF(2) rank of a set of Pauli strings in the symplectic representation.
size_t symplectic_rank(std::span<const PauliString> strings);

/// A code and its image under a transversal Hadamard layer.
struct CodeFamily {
    StabilizerCode reference;
    StabilizerCode rotated;

    const StabilizerCode &variant(bool is_rotated) const {
        return is_rotated ? rotated : reference;
    }
};

/// The three codes used by the protocols, derived once per process.
class CodeLibrary {
   public:
    CodeLibrary();
    const CodeFamily &family(CodeName name) const {
        return families_[static_cast<size_t>(name)];
    }

   private:
    std::vector<CodeFamily> families_;
};

const CodeLibrary &standard_codes();

}  // namespace hetbell

#endif
