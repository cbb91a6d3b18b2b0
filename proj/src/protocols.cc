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

#include "hetbell/protocols.h"

#include <bit>
#include <stdexcept>
#include <string>
#include <utility>

namespace hetbell {

std::string_view scheme_str(SchemeKind scheme) {
    switch (scheme) {
        case SchemeKind::baseline_physical:
            return "baseline";
        case SchemeKind::before_encoding:
            return "before";
        case SchemeKind::after_encoding:
            return "after";
        case SchemeKind::after_encoding_strict:
            return "strict";
    }
    return "?";
}

SchemeKind parse_scheme(std::string_view text) {
    for (auto s : {SchemeKind::baseline_physical, SchemeKind::before_encoding, SchemeKind::after_encoding,
                   SchemeKind::after_encoding_strict}) {
        if (scheme_str(s) == text) {
            return s;
        }
    }
    throw std::invalid_argument("unknown scheme '" + std::string(text) + "'");
}

std::string_view postselect_str(PostselectMode mode) {
    return mode == PostselectMode::basis_compatible ? "basis_compatible" : "oracle_all";
}

PostselectMode parse_postselect(std::string_view text) {
    if (text == "basis_compatible") {
        return PostselectMode::basis_compatible;
    }
    if (text == "oracle_all") {
        return PostselectMode::oracle_all;
    }
    throw std::invalid_argument("unknown postselect mode '" + std::string(text) + "'");
}

std::string_view basis_order_str(BasisOrder order) {
    return order == BasisOrder::z_first ? "z_first" : "x_first";
}

BasisOrder parse_basis_order(std::string_view text) {
    if (text == "z_first") {
        return BasisOrder::z_first;
    }
    if (text == "x_first") {
        return BasisOrder::x_first;
    }
    throw std::invalid_argument("unknown basis order '" + std::string(text) + "'");
}

size_t KqBudgets::of(CodeName name) const {
    switch (name) {
        case CodeName::physical:
            return physical;
        case CodeName::steane7:
            return steane7;
        case CodeName::surface3:
            return surface3;
    }
    return 0;
}

ResourceLedger &ResourceLedger::operator+=(const ResourceLedger &other) {
    raw_pairs_consumed += other.raw_pairs_consumed;
    kq += other.kq;
    n_1q += other.n_1q;
    n_2q += other.n_2q;
    return *this;
}

ResourceLedger &ResourceLedger::operator+=(const ResourceMetrics &m) {
    kq += m.kq;
    n_1q += m.n_1q;
    n_2q += m.n_2q;
    return *this;
}

PauliString PairState::frame() const {
    size_t na = a.n();
    return PauliMask{a.frame.x | (b.frame.x << na), a.frame.z | (b.frame.z << na)}.to_string(na + b.n());
}

EncoderProgram compile_encoder(const Circuit &encoder, size_t qubit_budget) {
    EncoderProgram prog;
    for (size_t t = 0; t < encoder.depth(); t++) {
        EncoderProgram::Step step;
        for (size_t k : encoder.timesteps()[t]) {
            const auto &g = encoder.gates()[k];
            if (g.kind == GateKind::H || g.kind == GateKind::CNOT) {
                step.gates.push_back(g);
                prog.sites++;
            }
        }
        step.idles = encoder.idle_qubits(t);
        prog.sites += step.idles.size();
        prog.steps.push_back(std::move(step));
    }
    prog.metrics = resource_metrics(encoder, qubit_budget);
    return prog;
}

Circuit build_purification_circuit(size_t n_a, size_t n_b) {
    uint32_t na = uint32_t(n_a);
    uint32_t nb = uint32_t(n_b);
    uint32_t sac = na + nb;
    std::vector<CliffordGate> gates;
    for (uint32_t i = 0; i < na + nb; i++) {
        gates.push_back(CliffordGate::cnot(i, sac + i));
    }
    for (uint32_t i = 0; i < na + nb; i++) {
        gates.push_back(CliffordGate::h(i));
        gates.push_back(CliffordGate::meas_z(sac + i));
    }
    return Circuit::schedule(std::move(gates), 2 * (na + nb));
}

ProtocolSetup::ProtocolSetup(const CodeLibrary &codes, ProtocolConfig config)
    : codes_(&codes), config_(std::move(config)) {
    config_.noise.validate();
    const CodeName names[] = {CodeName::physical, CodeName::steane7, CodeName::surface3};
    for (auto name : names) {
        const auto &code = codes.family(name).reference;
        size_t budget = config_.budgets.of(name);
        if (budget < code.n()) {
            throw std::invalid_argument("KQ budget for " + std::string(code_name_str(name)) + " is below its block size");
        }
        encoders_.push_back(compile_encoder(code.encoder(), budget));
    }
    for (auto a : names) {
        for (auto b : names) {
            auto c = build_purification_circuit(codes.family(a).reference.n(), codes.family(b).reference.n());
            size_t budget = 2 * (config_.budgets.of(a) + config_.budgets.of(b));
            purification_[size_t(a)][size_t(b)] = resource_metrics(c, budget);
        }
    }
}

PairState make_raw_pair(TrialContext &ctx) {
    const auto *phys = &ctx.setup.codes().family(CodeName::physical);
    PairState pair;
    pair.a = BlockState{phys, false, {}};
    pair.b = BlockState{phys, false, {}};
    pair.b.frame.apply(0, ctx.setup.config().source.sample(ctx.rng));
    pair.ledger.raw_pairs_consumed = 1;
    return pair;
}

namespace {

void apply_1q_fault(PauliMask &frame, uint32_t q, FaultSampler &faults) {
    frame.apply(q, faults.draw_1q());
}

void run_encoder(const EncoderProgram &prog, PauliMask &frame, FaultSampler &faults) {
    for (const auto &step : prog.steps) {
        for (const auto &g : step.gates) {
            frame.conjugate(g);
            if (!faults.fault()) {
                continue;
            }
            if (g.kind == GateKind::CNOT) {
                auto [pc, pt] = faults.draw_2q();
                frame.apply(g.q0, pc);
                frame.apply(g.q1, pt);
            } else {
                apply_1q_fault(frame, g.q0, faults);
            }
        }
        for (uint32_t q : step.idles) {
            if (faults.fault()) {
                apply_1q_fault(frame, q, faults);
            }
        }
    }
}

/// Transversal CNOT from the kept block onto the sacrificed block, with 2q noise per pair of qubits.
void transversal_cnot(BlockState &kept, BlockState &sac, FaultSampler &faults) {
    sac.frame.x ^= kept.frame.x;
    kept.frame.z ^= sac.frame.z;
    uint32_t n = uint32_t(kept.n());
    if (faults.quiet_for(n)) {
        return;
    }
    for (uint32_t i = 0; i < n; i++) {
        if (faults.fault()) {
            auto [pk, ps] = faults.draw_2q();
            kept.frame.apply(i, pk);
            sac.frame.apply(i, ps);
        }
    }
}

/// Transversal Z readout; returns the mask of qubits whose outcome is flipped.
uint64_t measure_block(BlockState &block, MeasurementNoise kind, FaultSampler &faults) {
    uint32_t n = uint32_t(block.n());
    uint64_t extra = 0;
    if (!faults.quiet_for(n)) {
        for (uint32_t i = 0; i < n; i++) {
            if (!faults.fault()) {
                continue;
            }
            if (kind == MeasurementNoise::pre_measurement_pauli) {
                apply_1q_fault(block.frame, i, faults);
            } else {
                extra ^= uint64_t{1} << i;
            }
        }
    }
    return block.frame.x ^ extra;
}

void transversal_h_layer(BlockState &block, FaultSampler &faults) {
    std::swap(block.frame.x, block.frame.z);
    block.rotated = !block.rotated;
    uint32_t n = uint32_t(block.n());
    if (faults.quiet_for(n)) {
        return;
    }
    for (uint32_t i = 0; i < n; i++) {
        if (faults.fault()) {
            apply_1q_fault(block.frame, i, faults);
        }
    }
}

bool odd(uint64_t x) {
    return std::popcount(x) & 1;
}

}  // namespace

PairState encode_half(PairState pair, Side side, CodeName code, TrialContext &ctx) {
    BlockState &blk = pair.block(side);
    if (blk.name() != CodeName::physical) {
        throw std::invalid_argument("encode_half requires a physical half");
    }
    const CodeFamily &family = ctx.setup.codes().family(code);
    if (code == CodeName::physical) {
        blk.rotated = false;
        return pair;
    }
    const auto &ref = family.reference;
    const auto &prog = ctx.setup.encoder(code);
    Pauli input = blk.frame.get(0);
    PauliMask frame;
    if (ctx.faults.quiet_for(prog.sites)) {
        // No fault anywhere in the encoder: the input error maps onto its logical image.
        if (has_x(input)) {
            frame ^= ref.logical_x_mask();
        }
        if (has_z(input)) {
            frame ^= ref.logical_z_mask();
        }
    } else {
        frame.apply(uint32_t(ref.input_wire()), input);
        run_encoder(prog, frame, ctx.faults);
    }
    blk = BlockState{&family, false, frame};
    pair.ledger += prog.metrics;
    return pair;
}

PurifyOutcome purify_once(PairState kept, PairState sacrificed, bool strict, TrialContext &ctx) {
    for (Side side : {Side::a, Side::b}) {
        const auto &k = kept.block(side);
        const auto &s = sacrificed.block(side);
        if (k.family != s.family || k.rotated != s.rotated) {
            throw std::invalid_argument("purify_once: pairs are bound to different codes");
        }
    }
    if (kept.basis_parity != sacrificed.basis_parity) {
        throw std::invalid_argument("purify_once: pairs are in different bases");
    }
    const auto &cfg = ctx.setup.config();
    auto &faults = ctx.faults;

    transversal_cnot(kept.a, sacrificed.a, faults);
    transversal_cnot(kept.b, sacrificed.b, faults);
    uint64_t flips_a = measure_block(sacrificed.a, cfg.noise.measurement, faults);
    uint64_t flips_b = measure_block(sacrificed.b, cfg.noise.measurement, faults);
    // The Hadamard layer shares the readout timestep, before the outcomes are compared.
    transversal_h_layer(kept.a, faults);
    transversal_h_layer(kept.b, faults);
    kept.basis_parity = !kept.basis_parity;

    kept.ledger += sacrificed.ledger;
    kept.ledger += ctx.setup.purification_metrics(kept.a.name(), kept.b.name());

    const auto &code_a = sacrificed.a.code();
    const auto &code_b = sacrificed.b.code();
    bool logical_a = odd(flips_a & code_a.z_type_logical().z_mask());
    bool logical_b = odd(flips_b & code_b.z_type_logical().z_mask());
    if (logical_a != logical_b) {
        return {PurifyStatus::parity_fail, std::move(kept)};
    }
    if (strict) {
        for (uint64_t support : code_a.z_type_generator_supports()) {
            if (odd(flips_a & support)) {
                return {PurifyStatus::postselect_fail, std::move(kept)};
            }
        }
        for (uint64_t support : code_b.z_type_generator_supports()) {
            if (odd(flips_b & support)) {
                return {PurifyStatus::postselect_fail, std::move(kept)};
            }
        }
        if (cfg.postselect == PostselectMode::oracle_all &&
            (code_a.syndrome_index(sacrificed.a.frame) != 0 || code_b.syndrome_index(sacrificed.b.frame) != 0)) {
            return {PurifyStatus::postselect_fail, std::move(kept)};
        }
    }
    return {PurifyStatus::success, std::move(kept)};
}

namespace {

struct PairBuilder {
    SchemeKind scheme;
    CodeName code_a;
    CodeName code_b;
    TrialContext &ctx;

    bool encode_first() const {
        return scheme == SchemeKind::after_encoding || scheme == SchemeKind::after_encoding_strict;
    }

    PairState level(int k) {
        if (k == 0) {
            PairState pair = make_raw_pair(ctx);
            if (encode_first()) {
                pair = encode_half(std::move(pair), Side::a, code_a, ctx);
                pair = encode_half(std::move(pair), Side::b, code_b, ctx);
            }
            return pair;
        }
        bool strict = scheme == SchemeKind::after_encoding_strict;
        ResourceLedger discarded;
        while (true) {
            PairState kept = level(k - 1);
            PairState sac = level(k - 1);
            auto out = purify_once(std::move(kept), std::move(sac), strict, ctx);
            if (out.status == PurifyStatus::success) {
                out.pair.ledger += discarded;
                return std::move(out.pair);
            }
            discarded += out.pair.ledger;
        }
    }
};

}  // namespace

PairState build_pair(SchemeKind scheme, int rounds, CodeName code_a, CodeName code_b, TrialContext &ctx) {
    if (rounds < 0) {
        throw std::invalid_argument("rounds must be non-negative");
    }
    if (scheme == SchemeKind::baseline_physical && (code_a != CodeName::physical || code_b != CodeName::physical)) {
        throw std::invalid_argument("the physical baseline requires physical codes on both sides");
    }
    PairBuilder builder{scheme, code_a, code_b, ctx};
    PairState pair = builder.level(rounds);
    if (scheme == SchemeKind::before_encoding) {
        pair = encode_half(std::move(pair), Side::a, code_a, ctx);
        pair = encode_half(std::move(pair), Side::b, code_b, ctx);
    }
    return pair;
}

LogicalOutcome final_evaluate(const PairState &pair, BasisOrder order) {
    LogicalOutcome out;
    for (const BlockState *blk : {&pair.a, &pair.b}) {
        const auto &code = blk->code();
        PauliMask residual = blk->frame ^ code.correction(code.syndrome_index(blk->frame));
        bool x = anticommutes(residual, PauliMask::from(code.z_type_logical()));
        bool z = anticommutes(residual, PauliMask::from(code.x_type_logical()));
        if (order == BasisOrder::x_first && pair.basis_parity) {
            std::swap(x, z);
        }
        out.x_error ^= x;
        out.z_error ^= z;
    }
    return out;
}

}  // namespace hetbell
