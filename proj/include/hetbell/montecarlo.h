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

#ifndef HETBELL_MONTECARLO_H
#define HETBELL_MONTECARLO_H

#include <cstdint>
#include <utility>
#include <vector>

#include "hetbell/protocols.h"

namespace hetbell {

enum class SourceKind : uint8_t { measured, werner, perfect };

std::string_view source_str(SourceKind kind);
SourceKind parse_source(std::string_view text);

struct RunConfig {
    SchemeKind scheme = SchemeKind::baseline_physical;
    CodeName code_a = CodeName::physical;
    CodeName code_b = CodeName::physical;
    int rounds = 0;
    double p = 1e-3;
    uint64_t trials = 1000000;
    uint64_t seed = 1;
    MeasurementNoise measurement = MeasurementNoise::pre_measurement_pauli;
    PostselectMode postselect = PostselectMode::basis_compatible;
    BasisOrder basis_order = BasisOrder::z_first;
    SourceKind source = SourceKind::measured;
    /// Only read when source == werner.
    double werner_fidelity = 0.85;
    KqBudgets budgets;

    /// Throws std::invalid_argument on an unusable configuration.
    void validate() const;
    ProtocolConfig protocol_config() const;
};

/// Integer sums over a batch of trials. Merging is commutative, so any split of
/// the trial range across workers produces the same totals.
struct TrialTotals {
    uint64_t trials = 0;
    uint64_t x_errors = 0;
    uint64_t z_errors = 0;
    uint64_t merged_errors = 0;
    uint64_t raw_pairs = 0;
    uint64_t kq = 0;
    uint64_t n_1q = 0;
    uint64_t n_2q = 0;

    TrialTotals &operator+=(const TrialTotals &other);
    bool operator==(const TrialTotals &) const = default;
};

struct RateEstimate {
    uint64_t count = 0;
    double rate = 0;
    double ci_lo = 0;
    double ci_hi = 0;
};

struct TableRow {
    int rounds = 0;
    uint64_t trials = 0;
    RateEstimate x;
    RateEstimate z;
    RateEstimate merged;
    double inefficiency = 0;
    double kq_mean = 0;
    double n_1q_mean = 0;
    double n_2q_mean = 0;
};

/// Wilson score interval for a binomial proportion.
std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials, double confidence = 0.95);

/// Runs trials [begin, end) of the configuration. Trial i always uses stream i.
TrialTotals run_trials(const RunConfig &cfg, const ProtocolSetup &setup, uint64_t begin, uint64_t end);

TableRow summarize(int rounds, const TrialTotals &totals);

/// Runs cfg.trials trials on `jobs` worker threads. The result does not depend on `jobs`.
TableRow run_row(const RunConfig &cfg, unsigned jobs = 1);

/// One row per rounds value in [0, max_rounds], cfg.rounds ignored.
std::vector<TableRow> run_table(const RunConfig &cfg, int max_rounds, unsigned jobs = 1);

}  // namespace hetbell

#endif
