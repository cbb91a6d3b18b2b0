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

#include <cmath>

#include "gtest/gtest.h"

using namespace hetbell;

namespace {

ProtocolConfig clean_config(BellDistribution source = BellDistribution::perfect()) {
    ProtocolConfig cfg;
    cfg.noise.p = 0;
    cfg.source = source;
    return cfg;
}

struct Harness {
    explicit Harness(ProtocolConfig cfg, uint64_t seed = 1, uint64_t stream = 0)
        : setup(standard_codes(), std::move(cfg)), rng(seed, stream), ctx(setup, rng) {
    }
    ProtocolSetup setup;
    RngStream rng;
    TrialContext ctx;
};

PairState encoded_pair(TrialContext &ctx, CodeName a, CodeName b) {
    PairState pair = make_raw_pair(ctx);
    pair = encode_half(std::move(pair), Side::a, a, ctx);
    return encode_half(std::move(pair), Side::b, b, ctx);
}

}  // namespace

TEST(protocols, names_round_trip) {
    for (auto s : {SchemeKind::baseline_physical, SchemeKind::before_encoding, SchemeKind::after_encoding,
                   SchemeKind::after_encoding_strict}) {
        EXPECT_EQ(parse_scheme(scheme_str(s)), s);
    }
    EXPECT_EQ(parse_postselect("oracle_all"), PostselectMode::oracle_all);
    EXPECT_EQ(parse_basis_order("x_first"), BasisOrder::x_first);
    EXPECT_THROW(parse_scheme("later"), std::invalid_argument);
    EXPECT_THROW(parse_postselect("none"), std::invalid_argument);
    EXPECT_THROW(parse_basis_order("y_first"), std::invalid_argument);
}

TEST(protocols, purification_circuit_metrics) {
    Harness h(clean_config());
    auto pp = h.setup.purification_metrics(CodeName::physical, CodeName::physical);
    EXPECT_EQ(pp.depth, 2u);
    EXPECT_EQ(pp.kq, 8u);
    EXPECT_EQ(pp.n_1q, 2u);
    EXPECT_EQ(pp.n_2q, 2u);
    auto ss = h.setup.purification_metrics(CodeName::steane7, CodeName::surface3);
    EXPECT_EQ(ss.depth, 2u);
    EXPECT_EQ(ss.kq, 2u * 2 * (7 + 25));
    EXPECT_EQ(ss.n_1q, 20u);
    EXPECT_EQ(ss.n_2q, 20u);
}

TEST(protocols, budget_below_block_size_is_rejected) {
    auto cfg = clean_config();
    cfg.budgets.surface3 = 12;
    EXPECT_THROW(ProtocolSetup(standard_codes(), cfg), std::invalid_argument);
}

TEST(protocols, raw_pair_from_perfect_source_is_clean) {
    Harness h(clean_config());
    auto pair = make_raw_pair(h.ctx);
    EXPECT_TRUE(pair.a.frame.is_identity());
    EXPECT_TRUE(pair.b.frame.is_identity());
    EXPECT_EQ(pair.ledger.raw_pairs_consumed, 1u);
    EXPECT_EQ(pair.ledger.kq, 0u);
    EXPECT_FALSE(pair.basis_parity);
}

TEST(protocols, noiseless_encoding_preserves_the_logical_state) {
    for (CodeName code : {CodeName::steane7, CodeName::surface3}) {
        for (Pauli input : {Pauli::I, Pauli::X, Pauli::Z, Pauli::Y}) {
            Harness h(clean_config());
            auto pair = make_raw_pair(h.ctx);
            pair.a.frame.apply(0, input);
            pair = encode_half(std::move(pair), Side::a, code, h.ctx);
            const auto &c = pair.a.code();
            EXPECT_EQ(c.syndrome_index(pair.a.frame), 0u);
            EXPECT_EQ(c.logical_class(pair.a.frame.to_string(c.n())), input);
            auto out = final_evaluate(pair);
            EXPECT_EQ(out.x_error, has_x(input));
            EXPECT_EQ(out.z_error, has_z(input));
        }
    }
}

TEST(protocols, encoding_charges_the_encoder) {
    Harness h(clean_config());
    auto pair = encoded_pair(h.ctx, CodeName::steane7, CodeName::surface3);
    EXPECT_EQ(pair.ledger.kq, 42u + 250u);
    EXPECT_EQ(pair.ledger.n_1q, 3u + 6u);
    EXPECT_EQ(pair.ledger.n_2q, 11u + 18u);
    EXPECT_THROW(encode_half(pair, Side::a, CodeName::steane7, h.ctx), std::invalid_argument);
}

TEST(protocols, noiseless_purification_succeeds_and_rotates) {
    Harness h(clean_config());
    auto kept = encoded_pair(h.ctx, CodeName::steane7, CodeName::surface3);
    auto sac = encoded_pair(h.ctx, CodeName::steane7, CodeName::surface3);
    auto out = purify_once(kept, sac, true, h.ctx);
    ASSERT_EQ(out.status, PurifyStatus::success);
    EXPECT_TRUE(out.pair.basis_parity);
    EXPECT_TRUE(out.pair.a.rotated);
    EXPECT_TRUE(out.pair.b.rotated);
    EXPECT_EQ(out.pair.ledger.raw_pairs_consumed, 2u);
    EXPECT_EQ(out.pair.ledger.kq, 2 * (42u + 250u) + 128u);
    EXPECT_EQ(final_evaluate(out.pair), LogicalOutcome{});
}

TEST(protocols, parity_mismatch_fails) {
    Harness h(clean_config());
    auto kept = make_raw_pair(h.ctx);
    auto sac = make_raw_pair(h.ctx);
    sac.b.frame.apply(0, Pauli::X);
    EXPECT_EQ(purify_once(kept, sac, false, h.ctx).status, PurifyStatus::parity_fail);
    // A Z error on the sacrificed pair is invisible to the Z readout.
    auto sac_z = make_raw_pair(h.ctx);
    sac_z.b.frame.apply(0, Pauli::Z);
    EXPECT_EQ(purify_once(kept, sac_z, false, h.ctx).status, PurifyStatus::success);
}

TEST(protocols, x_error_on_kept_pair_propagates_to_sacrificed_readout) {
    Harness h(clean_config());
    auto kept = make_raw_pair(h.ctx);
    auto sac = make_raw_pair(h.ctx);
    kept.a.frame.apply(0, Pauli::X);
    EXPECT_EQ(purify_once(kept, sac, false, h.ctx).status, PurifyStatus::parity_fail);
}

TEST(protocols, strict_mode_rejects_a_detectable_sacrificed_error) {
    Harness h(clean_config());
    auto kept = encoded_pair(h.ctx, CodeName::steane7, CodeName::surface3);
    auto sac = encoded_pair(h.ctx, CodeName::steane7, CodeName::surface3);
    // Qubit 0 of the surface block is off the Z logical, so the logical parity is unchanged
    // while a Z check fires.
    const auto &surface = sac.b.code();
    ASSERT_EQ(surface.z_type_logical().z_mask() & 1u, 0u);
    sac.b.frame.apply(0, Pauli::X);
    EXPECT_EQ(purify_once(kept, sac, true, h.ctx).status, PurifyStatus::postselect_fail);
    EXPECT_EQ(purify_once(kept, sac, false, h.ctx).status, PurifyStatus::success);
}

TEST(protocols, strict_mode_ignores_errors_on_the_kept_pair_z_component) {
    Harness h(clean_config());
    auto kept = encoded_pair(h.ctx, CodeName::steane7, CodeName::surface3);
    auto sac = encoded_pair(h.ctx, CodeName::steane7, CodeName::surface3);
    kept.a.frame.apply(2, Pauli::Z);
    auto out = purify_once(kept, sac, true, h.ctx);
    EXPECT_EQ(out.status, PurifyStatus::success);
}

TEST(protocols, oracle_postselection_sees_z_errors) {
    auto cfg = clean_config();
    cfg.postselect = PostselectMode::oracle_all;
    Harness h(cfg);
    auto kept = encoded_pair(h.ctx, CodeName::steane7, CodeName::surface3);
    auto sac = encoded_pair(h.ctx, CodeName::steane7, CodeName::surface3);
    sac.a.frame.apply(0, Pauli::Z);
    EXPECT_EQ(purify_once(kept, sac, true, h.ctx).status, PurifyStatus::postselect_fail);
    Harness plain(clean_config());
    EXPECT_EQ(purify_once(kept, sac, true, plain.ctx).status, PurifyStatus::success);
}

TEST(protocols, mismatched_pairs_are_rejected) {
    Harness h(clean_config());
    auto raw = make_raw_pair(h.ctx);
    auto enc = encoded_pair(h.ctx, CodeName::steane7, CodeName::surface3);
    EXPECT_THROW(purify_once(raw, enc, false, h.ctx), std::invalid_argument);
    auto a = make_raw_pair(h.ctx);
    auto b = make_raw_pair(h.ctx);
    b.basis_parity = true;
    EXPECT_THROW(purify_once(a, b, false, h.ctx), std::invalid_argument);
}

TEST(protocols, build_pair_validation) {
    Harness h(clean_config());
    EXPECT_THROW(build_pair(SchemeKind::baseline_physical, 1, CodeName::steane7, CodeName::physical, h.ctx),
                 std::invalid_argument);
    EXPECT_THROW(build_pair(SchemeKind::after_encoding, -1, CodeName::steane7, CodeName::surface3, h.ctx),
                 std::invalid_argument);
}

TEST(protocols, noiseless_cost_law) {
    for (int rounds = 0; rounds <= 4; rounds++) {
        uint64_t pairs = uint64_t(1) << rounds;
        uint64_t purifications = pairs - 1;
        Harness h(clean_config());
        auto base = build_pair(SchemeKind::baseline_physical, rounds, CodeName::physical, CodeName::physical, h.ctx);
        EXPECT_EQ(base.ledger.raw_pairs_consumed, pairs);
        EXPECT_EQ(base.ledger.kq, 8 * purifications);
        auto before = build_pair(SchemeKind::before_encoding, rounds, CodeName::steane7, CodeName::surface3, h.ctx);
        EXPECT_EQ(before.ledger.raw_pairs_consumed, pairs);
        EXPECT_EQ(before.ledger.kq, 8 * purifications + 42 + 250);
        for (auto scheme : {SchemeKind::after_encoding, SchemeKind::after_encoding_strict}) {
            auto after = build_pair(scheme, rounds, CodeName::steane7, CodeName::surface3, h.ctx);
            EXPECT_EQ(after.ledger.raw_pairs_consumed, pairs);
            EXPECT_EQ(after.ledger.kq, pairs * (42 + 250) + 128 * purifications);
            EXPECT_EQ(after.ledger.n_2q, pairs * (11 + 18) + 20 * purifications);
            EXPECT_EQ(after.basis_parity, rounds % 2 == 1);
            EXPECT_EQ(final_evaluate(after), LogicalOutcome{});
        }
    }
}

TEST(protocols, schemes_agree_without_purification) {
    ProtocolConfig cfg;
    cfg.noise.p = 0.01;
    for (uint64_t t = 0; t < 200; t++) {
        Harness h1(cfg, 7, t);
        Harness h2(cfg, 7, t);
        Harness h3(cfg, 7, t);
        auto before = build_pair(SchemeKind::before_encoding, 0, CodeName::steane7, CodeName::surface3, h1.ctx);
        auto after = build_pair(SchemeKind::after_encoding, 0, CodeName::steane7, CodeName::surface3, h2.ctx);
        auto strict = build_pair(SchemeKind::after_encoding_strict, 0, CodeName::steane7, CodeName::surface3, h3.ctx);
        EXPECT_EQ(before.a.frame, after.a.frame);
        EXPECT_EQ(before.b.frame, after.b.frame);
        EXPECT_EQ(after.a.frame, strict.a.frame);
        EXPECT_EQ(after.b.frame, strict.b.frame);
        EXPECT_EQ(before.ledger, after.ledger);
    }
}

TEST(protocols, build_pair_is_deterministic_per_stream) {
    ProtocolConfig cfg;
    cfg.noise.p = 0.003;
    for (uint64_t t = 0; t < 50; t++) {
        Harness h1(cfg, 11, t);
        Harness h2(cfg, 11, t);
        auto x = build_pair(SchemeKind::after_encoding_strict, 2, CodeName::steane7, CodeName::surface3, h1.ctx);
        auto y = build_pair(SchemeKind::after_encoding_strict, 2, CodeName::steane7, CodeName::surface3, h2.ctx);
        EXPECT_EQ(x.a.frame, y.a.frame);
        EXPECT_EQ(x.b.frame, y.b.frame);
        EXPECT_EQ(x.ledger, y.ledger);
    }
}

TEST(protocols, ledger_never_drops_below_the_noiseless_cost) {
    ProtocolConfig cfg;
    cfg.noise.p = 0.01;
    Harness h(cfg, 3, 0);
    for (int k = 0; k < 100; k++) {
        auto pair = build_pair(SchemeKind::after_encoding_strict, 2, CodeName::steane7, CodeName::surface3, h.ctx);
        EXPECT_GE(pair.ledger.raw_pairs_consumed, 4u);
        // Every consumed raw pair was encoded on both sides.
        uint64_t purifications = pair.ledger.raw_pairs_consumed - 1;
        EXPECT_GE(pair.ledger.kq, pair.ledger.raw_pairs_consumed * (42 + 250) + 128 * 3);
        EXPECT_LE(pair.ledger.kq, pair.ledger.raw_pairs_consumed * (42 + 250) + 128 * purifications);
        EXPECT_EQ((pair.ledger.kq - pair.ledger.raw_pairs_consumed * (42 + 250)) % 128, 0u);
    }
}

TEST(protocols, final_evaluate_examples) {
    Harness h(clean_config());
    auto pair = make_raw_pair(h.ctx);
    EXPECT_EQ(final_evaluate(pair), LogicalOutcome{});
    pair.b.frame.apply(0, Pauli::X);
    EXPECT_EQ(final_evaluate(pair), (LogicalOutcome{true, false}));
    pair.a.frame.apply(0, Pauli::X);
    EXPECT_EQ(final_evaluate(pair), LogicalOutcome{});
    pair.a.frame.apply(0, Pauli::Z);
    EXPECT_EQ(final_evaluate(pair), (LogicalOutcome{false, true}));
    pair.b.frame.apply(0, Pauli::X);
    EXPECT_EQ(final_evaluate(pair), (LogicalOutcome{true, true}));
}

TEST(protocols, final_evaluate_corrects_a_single_error) {
    Harness h(clean_config());
    auto pair = encoded_pair(h.ctx, CodeName::steane7, CodeName::surface3);
    pair.a.frame.apply(4, Pauli::Y);
    pair.b.frame.apply(9, Pauli::X);
    EXPECT_EQ(final_evaluate(pair), LogicalOutcome{});
}

TEST(protocols, basis_order_swaps_labels_after_odd_rounds) {
    Harness h(clean_config());
    auto kept = make_raw_pair(h.ctx);
    auto sac = make_raw_pair(h.ctx);
    auto out = purify_once(kept, sac, false, h.ctx);
    ASSERT_EQ(out.status, PurifyStatus::success);
    auto pair = out.pair;
    pair.b.frame.apply(0, Pauli::X);
    EXPECT_EQ(final_evaluate(pair, BasisOrder::z_first), (LogicalOutcome{true, false}));
    EXPECT_EQ(final_evaluate(pair, BasisOrder::x_first), (LogicalOutcome{false, true}));
    auto even = make_raw_pair(h.ctx);
    even.b.frame.apply(0, Pauli::X);
    EXPECT_EQ(final_evaluate(even, BasisOrder::z_first), final_evaluate(even, BasisOrder::x_first));
}

TEST(protocols, purification_success_matches_source_statistics) {
    struct Case {
        BellDistribution source;
        double expected;
    };
    const Case cases[] = {
        {BellDistribution::werner(0.85), 0.82},
        {BellDistribution::measured_source(), 0.89 * 0.89 + 0.11 * 0.11},
    };
    for (const auto &c : cases) {
        Harness h(clean_config(c.source), 5, 0);
        const int trials = 200000;
        int ok = 0;
        for (int t = 0; t < trials; t++) {
            auto kept = make_raw_pair(h.ctx);
            auto sac = make_raw_pair(h.ctx);
            ok += purify_once(kept, sac, false, h.ctx).status == PurifyStatus::success;
        }
        double rate = double(ok) / trials;
        double sigma = std::sqrt(c.expected * (1 - c.expected) / trials);
        EXPECT_NEAR(rate, c.expected, 4 * sigma);
    }
}
