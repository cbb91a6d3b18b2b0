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

#ifndef HETBELL_PROTOCOLS_H
#define HETBELL_PROTOCOLS_H

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "hetbell/circuit.h"
#include "hetbell/codes.h"
#include "hetbell/noise.h"
#include "hetbell/pauli.h"

namespace hetbell {

enum class SchemeKind : uint8_t { baseline_physical, before_encoding, after_encoding, after_encoding_strict };

/// Short CLI names: baseline, before, after, strict.
std::string_view scheme_str(SchemeKind scheme);
SchemeKind parse_scheme(std::string_view text);

/// Which stabilizer parities strict post-selection inspects.
enum class PostselectMode : uint8_t {
    /// Z-type generators of the measured blocks, computable from the Z readout record.
    basis_compatible,
    /// Additionally, the full syndrome of the measured blocks' frame.
    oracle_all,
};

/// Labeling of the reported X and Z error rates.
enum class BasisOrder : uint8_t {
    /// Classes are taken against each block's current X-type and Z-type logicals.
    /// The first round then suppresses the reported Z rate.
    z_first,
    /// Classes are taken against the logicals carried through every Hadamard
    /// layer, i.e. the pre-rotation labels. The first round suppresses the reported X rate.
    x_first,
};

std::string_view postselect_str(PostselectMode mode);
PostselectMode parse_postselect(std::string_view text);
std::string_view basis_order_str(BasisOrder order);
BasisOrder parse_basis_order(std::string_view text);

/// Qubits charged per block when computing KQ.
struct KqBudgets {
    size_t physical = 1;
    size_t steane7 = 7;
    size_t surface3 = 25;

    size_t of(CodeName name) const;
};

struct ResourceLedger {
    uint64_t raw_pairs_consumed = 0;
    uint64_t kq = 0;
    uint64_t n_1q = 0;
    uint64_t n_2q = 0;

    ResourceLedger &operator+=(const ResourceLedger &other);
    ResourceLedger &operator+=(const ResourceMetrics &m);
    bool operator==(const ResourceLedger &) const = default;
};

enum class Side : uint8_t { a, b };

/// One half of a pair: its code binding and the Pauli frame on its qubits.
struct BlockState {
    const CodeFamily *family = nullptr;
    bool rotated = false;
    PauliMask frame;

    const StabilizerCode &code() const {
        return family->variant(rotated);
    }
    size_t n() const {
        return family->reference.n();
    }
    CodeName name() const {
        return family->reference.name();
    }
};

/// A Bell pair in flight. The reference state is Phi+ between the logical
/// qubits of the two blocks; `frame` records the deviation from it.
struct PairState {
    BlockState a;
    BlockState b;
    /// Number of transversal Hadamard layers applied, mod 2.
    bool basis_parity = false;
    ResourceLedger ledger;

    BlockState &block(Side side) {
        return side == Side::a ? a : b;
    }
    const BlockState &block(Side side) const {
        return side == Side::a ? a : b;
    }
    /// Frame over both blocks, side a's qubits first.
    PauliString frame() const;
};

struct ProtocolConfig {
    NoiseModel noise;
    BellDistribution source = BellDistribution::measured_source();
    PostselectMode postselect = PostselectMode::basis_compatible;
    KqBudgets budgets;
};

/// Encoder schedule flattened into noisy timesteps.
struct EncoderProgram {
    struct Step {
        std::vector<CliffordGate> gates;
        std::vector<uint32_t> idles;
    };
    std::vector<Step> steps;
    uint64_t sites = 0;
    ResourceMetrics metrics;
};

EncoderProgram compile_encoder(const Circuit &encoder, size_t qubit_budget);

/// Bilateral purification step on two pairs with n_a- and n_b-qubit blocks.
/// Register layout: kept a, kept b, sacrificed a, sacrificed b.
Circuit build_purification_circuit(size_t n_a, size_t n_b);

/// Everything a trial reads but never writes. Built once and shared across workers.
class ProtocolSetup {
   public:
    ProtocolSetup(const CodeLibrary &codes, ProtocolConfig config);

    const CodeLibrary &codes() const {
        return *codes_;
    }
    const ProtocolConfig &config() const {
        return config_;
    }
    const EncoderProgram &encoder(CodeName name) const {
        return encoders_[static_cast<size_t>(name)];
    }
    const ResourceMetrics &purification_metrics(CodeName a, CodeName b) const {
        return purification_[static_cast<size_t>(a)][static_cast<size_t>(b)];
    }

   private:
    const CodeLibrary *codes_;
    ProtocolConfig config_;
    std::vector<EncoderProgram> encoders_;
    std::array<std::array<ResourceMetrics, 3>, 3> purification_{};
};

/// Per-trial mutable state: the random stream and the fault walker over it.
struct TrialContext {
    TrialContext(const ProtocolSetup &setup, RngStream &rng)
        : setup(setup), rng(rng), faults(rng, setup.config().noise.p) {
    }
    const ProtocolSetup &setup;
    RngStream &rng;
    FaultSampler faults;
};

PairState make_raw_pair(TrialContext &ctx);

/// Encodes one physical half into `code`, replaying the encoder with circuit noise.
PairState encode_half(PairState pair, Side side, CodeName code, TrialContext &ctx);

enum class PurifyStatus : uint8_t { success, parity_fail, postselect_fail };

struct PurifyOutcome {
    PurifyStatus status;
    /// The surviving pair on success. On failure only its ledger is meaningful:
    /// the combined cost of both inputs and the attempt.
    PairState pair;
};

PurifyOutcome purify_once(PairState kept, PairState sacrificed, bool strict, TrialContext &ctx);

/// Symmetric nested purification to depth `rounds`, regenerating both inputs on failure.
PairState build_pair(SchemeKind scheme, int rounds, CodeName code_a, CodeName code_b, TrialContext &ctx);

struct LogicalOutcome {
    bool x_error = false;
    bool z_error = false;
    bool operator==(const LogicalOutcome &) const = default;
};

/// Ideal syndrome extraction and lookup correction on each block, then the
/// residual logical error of the pair relative to Phi+.
LogicalOutcome final_evaluate(const PairState &pair, BasisOrder order = BasisOrder::z_first);

}  // namespace hetbell

#endif
