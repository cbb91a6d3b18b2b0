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

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>

#include <boost/math/distributions/normal.hpp>

namespace hetbell {

std::string_view source_str(SourceKind kind) {
    switch (kind) {
        case SourceKind::measured:
            return "measured";
        case SourceKind::werner:
            return "werner";
        case SourceKind::perfect:
            return "perfect";
    }
    return "?";
}

SourceKind parse_source(std::string_view text) {
    for (auto k : {SourceKind::measured, SourceKind::werner, SourceKind::perfect}) {
        if (source_str(k) == text) {
            return k;
        }
    }
    throw std::invalid_argument("unknown source '" + std::string(text) + "'");
}

void RunConfig::validate() const {
    if (rounds < 0) {
        throw std::invalid_argument("rounds must be non-negative");
    }
    if (trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("p must lie in [0, 1]");
    }
    if (scheme == SchemeKind::baseline_physical && (code_a != CodeName::physical || code_b != CodeName::physical)) {
        throw std::invalid_argument("the baseline scheme requires --code-a physical --code-b physical");
    }
    if (source == SourceKind::werner && !(werner_fidelity >= 0 && werner_fidelity <= 1)) {
        throw std::invalid_argument("werner fidelity must lie in [0, 1]");
    }
}

ProtocolConfig RunConfig::protocol_config() const {
    ProtocolConfig pc;
    pc.noise = NoiseModel{p, measurement};
    switch (source) {
        case SourceKind::measured:
            pc.source = BellDistribution::measured_source();
            break;
        case SourceKind::werner:
            pc.source = BellDistribution::werner(werner_fidelity);
            break;
        case SourceKind::perfect:
            pc.source = BellDistribution::perfect();
            break;
    }
    pc.postselect = postselect;
    pc.budgets = budgets;
    return pc;
}

TrialTotals &TrialTotals::operator+=(const TrialTotals &o) {
    trials += o.trials;
    x_errors += o.x_errors;
    z_errors += o.z_errors;
    merged_errors += o.merged_errors;
    raw_pairs += o.raw_pairs;
    kq += o.kq;
    n_1q += o.n_1q;
    n_2q += o.n_2q;
    return *this;
}

std::pair<double, double> wilson_interval(uint64_t successes, uint64_t trials, double confidence) {
    if (trials == 0 || successes > trials) {
        throw std::invalid_argument("wilson_interval requires 0 <= successes <= trials and trials >= 1");
    }
    if (!(confidence > 0 && confidence < 1)) {
        throw std::invalid_argument("confidence must lie in (0, 1)");
    }
    boost::math::normal_distribution<double> unit;
    double z = boost::math::quantile(unit, 0.5 + confidence / 2);
    double n = double(trials);
    double phat = double(successes) / n;
    double z2 = z * z;
    double denom = 1 + z2 / n;
    double center = (phat + z2 / (2 * n)) / denom;
    double half = z * std::sqrt(phat * (1 - phat) / n + z2 / (4 * n * n)) / denom;
    double lo = successes == 0 ? 0.0 : std::max(0.0, center - half);
    double hi = successes == trials ? 1.0 : std::min(1.0, center + half);
    return {lo, hi};
}

TrialTotals run_trials(const RunConfig &cfg, const ProtocolSetup &setup, uint64_t begin, uint64_t end) {
    TrialTotals totals;
    for (uint64_t t = begin; t < end; t++) {
        RngStream rng(cfg.seed, t);
        TrialContext ctx(setup, rng);
        PairState pair = build_pair(cfg.scheme, cfg.rounds, cfg.code_a, cfg.code_b, ctx);
        LogicalOutcome out = final_evaluate(pair, cfg.basis_order);
        totals.trials++;
        totals.x_errors += out.x_error;
        totals.z_errors += out.z_error;
        totals.merged_errors += out.x_error || out.z_error;
        totals.raw_pairs += pair.ledger.raw_pairs_consumed;
        totals.kq += pair.ledger.kq;
        totals.n_1q += pair.ledger.n_1q;
        totals.n_2q += pair.ledger.n_2q;
    }
    return totals;
}

TableRow summarize(int rounds, const TrialTotals &totals) {
    if (totals.trials == 0) {
        throw std::invalid_argument("no trials to summarize");
    }
    auto estimate = [&](uint64_t count) {
        auto [lo, hi] = wilson_interval(count, totals.trials);
        return RateEstimate{count, double(count) / double(totals.trials), lo, hi};
    };
    double n = double(totals.trials);
    TableRow row;
    row.rounds = rounds;
    row.trials = totals.trials;
    row.x = estimate(totals.x_errors);
    row.z = estimate(totals.z_errors);
    row.merged = estimate(totals.merged_errors);
    row.inefficiency = double(totals.raw_pairs) / n;
    row.kq_mean = double(totals.kq) / n;
    row.n_1q_mean = double(totals.n_1q) / n;
    row.n_2q_mean = double(totals.n_2q) / n;
    return row;
}

TableRow run_row(const RunConfig &cfg, unsigned jobs) {
    cfg.validate();
    ProtocolSetup setup(standard_codes(), cfg.protocol_config());
    jobs = std::max(1u, jobs);
    uint64_t chunks = std::min<uint64_t>(jobs, cfg.trials);
    std::vector<TrialTotals> partial(chunks);
    if (chunks == 1) {
        partial[0] = run_trials(cfg, setup, 0, cfg.trials);
    } else {
        std::vector<std::thread> workers;
        for (uint64_t c = 0; c < chunks; c++) {
            uint64_t begin = cfg.trials * c / chunks;
            uint64_t end = cfg.trials * (c + 1) / chunks;
            workers.emplace_back([&, c, begin, end] {
                partial[c] = run_trials(cfg, setup, begin, end);
            });
        }
        for (auto &w : workers) {
            w.join();
        }
    }
    TrialTotals totals;
    for (const auto &t : partial) {
        totals += t;
    }
    return summarize(cfg.rounds, totals);
}

std::vector<TableRow> run_table(const RunConfig &cfg, int max_rounds, unsigned jobs) {
    std::vector<TableRow> rows;
    for (int r = 0; r <= max_rounds; r++) {
        RunConfig c = cfg;
        c.rounds = r;
        rows.push_back(run_row(c, jobs));
    }
    return rows;
}

}  // namespace hetbell
