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

#include "hetbell/montecarlo.h"

#include <cmath>

#include "gtest/gtest.h"

using namespace hetbell;

namespace {

RunConfig small_config(SchemeKind scheme, CodeName a, CodeName b, int rounds, double p, uint64_t trials) {
    RunConfig cfg;
    cfg.scheme = scheme;
    cfg.code_a = a;
    cfg.code_b = b;
    cfg.rounds = rounds;
    cfg.p = p;
    cfg.trials = trials;
    cfg.seed = 2024;
    return cfg;
}

void expect_same_row(const TableRow &x, const TableRow &y) {
    EXPECT_EQ(x.trials, y.trials);
    EXPECT_EQ(x.x.count, y.x.count);
    EXPECT_EQ(x.z.count, y.z.count);
    EXPECT_EQ(x.merged.count, y.merged.count);
    EXPECT_EQ(x.inefficiency, y.inefficiency);
    EXPECT_EQ(x.kq_mean, y.kq_mean);
    EXPECT_EQ(x.n_1q_mean, y.n_1q_mean);
    EXPECT_EQ(x.n_2q_mean, y.n_2q_mean);
}

}  // namespace

TEST(montecarlo, wilson_examples) {
    auto [lo0, hi0] = wilson_interval(0, 100);
    EXPECT_EQ(lo0, 0.0);
    EXPECT_NEAR(hi0, 0.036994, 1e-5);

    auto [lo1, hi1] = wilson_interval(100, 100);
    EXPECT_NEAR(lo1, 0.963006, 1e-5);
    EXPECT_EQ(hi1, 1.0);

    auto [lo2, hi2] = wilson_interval(50, 100);
    EXPECT_NEAR(lo2 + hi2, 1.0, 1e-12);
    EXPECT_NEAR(lo2, 0.403832, 1e-5);

    auto [lo3, hi3] = wilson_interval(10, 1000, 0.99);
    EXPECT_LT(lo3, 0.01);
    EXPECT_GT(hi3, 0.01);
    EXPECT_THROW(wilson_interval(1, 0), std::invalid_argument);
    EXPECT_THROW(wilson_interval(5, 4), std::invalid_argument);
}

TEST(montecarlo, wilson_narrows_with_more_trials) {
    auto [a_lo, a_hi] = wilson_interval(10, 100);
    auto [b_lo, b_hi] = wilson_interval(1000, 10000);
    EXPECT_LT(b_hi - b_lo, a_hi - a_lo);
}

TEST(montecarlo, config_validation) {
    RunConfig cfg;
    EXPECT_NO_THROW(cfg.validate());
    cfg.code_a = CodeName::steane7;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.p = 1.5;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.trials = 0;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    cfg = RunConfig{};
    cfg.rounds = -1;
    EXPECT_THROW(cfg.validate(), std::invalid_argument);
    EXPECT_EQ(parse_source("werner"), SourceKind::werner);
    EXPECT_THROW(parse_source("laser"), std::invalid_argument);
}

TEST(montecarlo, totals_add) {
    TrialTotals a{1, 2, 3, 4, 5, 6, 7, 8};
    TrialTotals b{10, 20, 30, 40, 50, 60, 70, 80};
    a += b;
    EXPECT_EQ(a, (TrialTotals{11, 22, 33, 44, 55, 66, 77, 88}));
}

TEST(montecarlo, results_do_not_depend_on_thread_count) {
    auto cfg = small_config(SchemeKind::after_encoding_strict, CodeName::steane7, CodeName::surface3, 2, 2e-3, 3001);
    auto one = run_row(cfg, 1);
    auto three = run_row(cfg, 3);
    auto many = run_row(cfg, 7);
    expect_same_row(one, three);
    expect_same_row(one, many);
}

TEST(montecarlo, split_ranges_sum_to_the_whole) {
    auto cfg = small_config(SchemeKind::baseline_physical, CodeName::physical, CodeName::physical, 2, 1e-3, 2000);
    ProtocolSetup setup(standard_codes(), cfg.protocol_config());
    auto whole = run_trials(cfg, setup, 0, 2000);
    auto left = run_trials(cfg, setup, 0, 777);
    left += run_trials(cfg, setup, 777, 2000);
    EXPECT_EQ(whole, left);
}

TEST(montecarlo, seed_changes_results) {
    auto cfg = small_config(SchemeKind::baseline_physical, CodeName::physical, CodeName::physical, 1, 1e-3, 5000);
    auto a = run_row(cfg, 1);
    cfg.seed++;
    auto b = run_row(cfg, 1);
    EXPECT_TRUE(a.merged.count != b.merged.count || a.inefficiency != b.inefficiency);
}

TEST(montecarlo, row_invariants) {
    for (auto scheme : {SchemeKind::baseline_physical, SchemeKind::before_encoding, SchemeKind::after_encoding,
                        SchemeKind::after_encoding_strict}) {
        bool baseline = scheme == SchemeKind::baseline_physical;
        CodeName a = baseline ? CodeName::physical : CodeName::steane7;
        CodeName b = baseline ? CodeName::physical : CodeName::surface3;
        auto rows = run_table(small_config(scheme, a, b, 0, 1e-3, 3000), 3, 1);
        ASSERT_EQ(rows.size(), 4u);
        for (const auto &row : rows) {
            EXPECT_LE(row.x.count, row.merged.count);
            EXPECT_LE(row.z.count, row.merged.count);
            EXPECT_LE(row.merged.count, row.x.count + row.z.count);
            EXPECT_GE(row.inefficiency, double(1 << row.rounds));
            EXPECT_LE(row.merged.ci_lo, row.merged.rate);
            EXPECT_GE(row.merged.ci_hi, row.merged.rate);
            EXPECT_GT(row.kq_mean, 0.0 - (baseline && row.rounds == 0 ? 1.0 : 0.0));
        }
    }
}

TEST(montecarlo, perfect_source_without_noise_is_clean) {
    auto cfg = small_config(SchemeKind::after_encoding, CodeName::steane7, CodeName::surface3, 3, 0, 200);
    cfg.source = SourceKind::perfect;
    auto row = run_row(cfg, 1);
    EXPECT_EQ(row.merged.count, 0u);
    EXPECT_EQ(row.inefficiency, 8.0);
    EXPECT_EQ(row.kq_mean, 8 * (42.0 + 250.0) + 7 * 128.0);
}

TEST(montecarlo, first_round_success_matches_werner_statistics) {
    auto cfg = small_config(SchemeKind::baseline_physical, CodeName::physical, CodeName::physical, 1, 1e-5, 20000);
    cfg.source = SourceKind::werner;
    cfg.werner_fidelity = 0.85;
    auto row = run_row(cfg, 1);
    double s = 0.82;
    double sigma = std::sqrt(4 * (1 - s) / (s * s) / double(cfg.trials));
    EXPECT_NEAR(row.inefficiency, 2 / s, 4 * sigma + 0.005);
}

TEST(montecarlo, summarize_rejects_empty_totals) {
    EXPECT_THROW(summarize(0, TrialTotals{}), std::invalid_argument);
}
