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

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "hetbell/analytic.h"
#include "hetbell/codes.h"
#include "hetbell/montecarlo.h"
#include "hetbell/output.h"
#include "hetbell/protocols.h"

using namespace hetbell;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

/// Thrown for bad user input detected after CLI parsing.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Default seed, optionally taken from HETBELL_SEED.
struct SeedDefault {
    uint64_t value = 1;
    bool from_env = false;
};

SeedDefault seed_default() {
    SeedDefault d;
    if (const char *env = std::getenv("HETBELL_SEED"); env != nullptr && *env != '\0') {
        try {
            size_t used = 0;
            d.value = std::stoull(env, &used);
            if (env[used] != '\0') {
                throw std::invalid_argument("trailing characters");
            }
        } catch (const std::exception &) {
            throw UsageError("HETBELL_SEED must be a non-negative integer");
        }
        d.from_env = true;
    }
    return d;
}

unsigned default_jobs() {
    return std::max(1u, std::thread::hardware_concurrency());
}

template <typename F>
auto parse_or_usage(F &&f, std::string_view text) {
    try {
        return f(text);
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
}

/// Flat key=value config file turned into "--key value" tokens.
std::vector<std::string> config_tokens(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw UsageError("cannot open config file " + path);
    }
    std::vector<std::string> tokens;
    for (const auto &item : CLI::ConfigINI().from_config(in)) {
        if (!item.parents.empty() || item.name == "config") {
            throw UsageError("config key '" + item.fullname() + "' is not a run option");
        }
        // Keys may be spelled like the flags (code-a) or with underscores (code_a).
        std::string key = item.name;
        std::replace(key.begin(), key.end(), '_', '-');
        tokens.push_back("--" + key);
        for (const auto &v : item.inputs) {
            tokens.push_back(v);
        }
    }
    return tokens;
}

/// Moves `--config PATH` out of the run arguments and splices the file's
/// contents in front of the remaining flags, so that explicit flags win.
std::vector<std::string> expand_config(std::vector<std::string> args) {
    // args[0] is the program name and args[1] the subcommand.
    std::string path;
    std::vector<std::string> rest;
    for (size_t i = 2; i < args.size(); i++) {
        const std::string &a = args[i];
        if (a == "--config") {
            if (i + 1 >= args.size()) {
                throw UsageError("--config needs a path");
            }
            path = args[++i];
        } else if (a.rfind("--config=", 0) == 0) {
            path = a.substr(9);
        } else {
            rest.push_back(a);
        }
    }
    if (path.empty()) {
        return args;
    }
    std::vector<std::string> out = {args[0], args[1]};
    for (auto &t : config_tokens(path)) {
        out.push_back(std::move(t));
    }
    for (auto &t : rest) {
        out.push_back(std::move(t));
    }
    return out;
}

struct RunOptions {
    std::string scheme;
    std::string code_a = "physical";
    std::string code_b = "physical";
    int rounds = 0;
    double p = 1e-3;
    uint64_t trials = 1000000;
    uint64_t seed = 1;
    std::string format = "csv";
    std::string out;
    unsigned jobs = 1;
    std::string postselect = "basis_compatible";
    std::string measurement = "pauli";
    std::string basis_order = "z_first";
    std::string source = "measured";
    double werner_fidelity = 0.85;
    bool perfect_source = false;
    size_t budget_steane7 = 7;
    size_t budget_surface3 = 25;
    size_t budget_physical = 1;
};

RunConfig to_run_config(const RunOptions &o) {
    RunConfig cfg;
    cfg.scheme = parse_or_usage(parse_scheme, o.scheme);
    cfg.code_a = parse_or_usage(parse_code_name, o.code_a);
    cfg.code_b = parse_or_usage(parse_code_name, o.code_b);
    cfg.rounds = o.rounds;
    cfg.p = o.p;
    cfg.trials = o.trials;
    cfg.seed = o.seed;
    cfg.measurement = parse_or_usage(parse_measurement_noise, o.measurement);
    cfg.postselect = parse_or_usage(parse_postselect, o.postselect);
    cfg.basis_order = parse_or_usage(parse_basis_order, o.basis_order);
    cfg.source = o.perfect_source ? SourceKind::perfect : parse_or_usage(parse_source, o.source);
    cfg.werner_fidelity = o.werner_fidelity;
    cfg.budgets.steane7 = o.budget_steane7;
    cfg.budgets.surface3 = o.budget_surface3;
    cfg.budgets.physical = o.budget_physical;
    try {
        cfg.validate();
        ProtocolSetup check(standard_codes(), cfg.protocol_config());
    } catch (const std::invalid_argument &e) {
        throw UsageError(e.what());
    }
    return cfg;
}

std::vector<std::pair<std::string, std::string>> with_seed_source(
    std::vector<std::pair<std::string, std::string>> meta, bool seed_flag_given, const SeedDefault &sd) {
    if (!seed_flag_given && sd.from_env) {
        meta.emplace_back("seed_source", "env:HETBELL_SEED");
    }
    return meta;
}

/// Writes to `path`, or stdout when it is empty or "-".
void emit(const std::string &path, const std::string &text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw std::runtime_error("cannot write " + path);
    }
    f << text;
    if (!f) {
        throw std::runtime_error("failed writing " + path);
    }
}

int cmd_run(const RunOptions &o, bool seed_flag_given, const SeedDefault &sd) {
    RunConfig cfg = to_run_config(o);
    TableRow row = run_row(cfg, o.jobs);
    auto meta = with_seed_source(run_metadata(cfg), seed_flag_given, sd);
    meta.emplace_back("rounds", std::to_string(cfg.rounds));
    std::ostringstream text;
    if (o.format == "json") {
        write_json(text, meta, {row});
    } else {
        write_csv(text, meta, {row});
    }
    emit(o.out, text.str());
    return 0;
}

struct TablesOptions {
    std::string which = "all";
    uint64_t trials = 1000000;
    uint64_t seed = 1;
    std::string outdir = ".";
    unsigned jobs = 1;
};

int cmd_tables(const TablesOptions &o, bool seed_flag_given, const SeedDefault &sd) {
    std::vector<int> numbers;
    if (o.which == "all") {
        for (const auto &t : table_catalogue()) {
            numbers.push_back(t.number);
        }
    } else {
        int k = 0;
        auto [ptr, ec] = std::from_chars(o.which.data(), o.which.data() + o.which.size(), k);
        if (ec != std::errc() || ptr != o.which.data() + o.which.size() || k < 1 || k > 6) {
            throw UsageError("--which must be 1..6 or all");
        }
        numbers.push_back(k);
    }
    if (o.trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    std::filesystem::create_directories(o.outdir);
    for (int number : numbers) {
        const TableSpec &spec = table_spec(number);
        for (size_t i = 0; i < 3; i++) {
            RunConfig cfg;
            cfg.scheme = spec.scheme;
            cfg.code_a = spec.code_a;
            cfg.code_b = spec.code_b;
            cfg.p = kTableErrorRates[i];
            cfg.trials = o.trials;
            cfg.seed = o.seed;
            auto rows = run_table(cfg, 4, o.jobs);
            auto meta = with_seed_source(run_metadata(cfg), seed_flag_given, sd);
            meta.insert(meta.begin() + 1, {"table", std::to_string(number) + char('a' + i)});
            std::ostringstream text;
            write_csv(text, meta, rows);
            auto path = (std::filesystem::path(o.outdir) / table_file_name(number, i)).string();
            emit(path, text.str());
            std::cerr << "wrote " << path << "\n";
        }
    }
    return 0;
}

struct PlotOptions {
    uint64_t trials = 100000;
    uint64_t seed = 1;
    std::string out;
    unsigned jobs = 1;
};

int cmd_plotdata(const PlotOptions &o, bool seed_flag_given, const SeedDefault &sd) {
    if (o.trials < 1) {
        throw UsageError("--trials must be at least 1");
    }
    struct Series {
        SchemeKind scheme;
        CodeName a;
        CodeName b;
    };
    const Series series[] = {
        {SchemeKind::baseline_physical, CodeName::physical, CodeName::physical},
        {SchemeKind::before_encoding, CodeName::steane7, CodeName::surface3},
        {SchemeKind::after_encoding, CodeName::steane7, CodeName::surface3},
        {SchemeKind::after_encoding_strict, CodeName::steane7, CodeName::surface3},
    };
    std::ostringstream text;
    text << "# tool=" << kToolVersion << "\n";
    text << "# trials=" << o.trials << "\n";
    text << "# seed=" << o.seed << "\n";
    if (!seed_flag_given && sd.from_env) {
        text << "# seed_source=env:HETBELL_SEED\n";
    }
    text << "p,scheme,code_a,code_b,rounds,ineff,merged_rate,merged_ci_lo,merged_ci_hi\n";
    for (double p : kTableErrorRates) {
        for (const auto &s : series) {
            RunConfig cfg;
            cfg.scheme = s.scheme;
            cfg.code_a = s.a;
            cfg.code_b = s.b;
            cfg.p = p;
            cfg.trials = o.trials;
            cfg.seed = o.seed;
            for (const auto &r : run_table(cfg, 4, o.jobs)) {
                text << format_double(p) << ',' << scheme_str(s.scheme) << ',' << code_name_str(s.a) << ','
                     << code_name_str(s.b) << ',' << r.rounds << ',' << format_double(r.inefficiency) << ','
                     << format_double(r.merged.rate) << ',' << format_double(r.merged.ci_lo) << ','
                     << format_double(r.merged.ci_hi) << "\n";
            }
        }
    }
    emit(o.out, text.str());
    return 0;
}

struct AnalyticOptions {
    double f_min = 0.5;
    double f_max = 1.0;
    int steps = 51;
    std::string out;
};

int cmd_analytic(const AnalyticOptions &o) {
    if (!(o.f_min >= 0 && o.f_max <= 1)) {
        throw UsageError("fidelities must lie in [0, 1]");
    }
    if (o.f_min > o.f_max) {
        throw UsageError("--f-min must not exceed --f-max");
    }
    if (o.steps < 1 || (o.steps == 1 && o.f_min != o.f_max)) {
        throw UsageError("--steps must be at least 2 for a non-empty range");
    }
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.12g", v);
        return std::string(buf);
    };
    std::ostringstream text;
    text << "f,distilled_two_rounds,success_probability,phi_plus,phi_minus,psi_plus,psi_minus\n";
    for (int i = 0; i < o.steps; i++) {
        double f = o.steps == 1 ? o.f_min : o.f_min + (o.f_max - o.f_min) * i / (o.steps - 1);
        auto w = werner_components(f);
        text << fmt(f) << ',' << fmt(distilled_fidelity_two_rounds(f)) << ',' << fmt(purification_success_probability(f));
        for (double c : w) {
            text << ',' << fmt(c);
        }
        text << "\n";
    }
    emit(o.out, text.str());
    return 0;
}

int cmd_dump_circuit(const std::string &code, const std::string &purify) {
    if (!purify.empty()) {
        auto comma = purify.find(',');
        if (comma == std::string::npos) {
            throw UsageError("--purification expects CODE_A,CODE_B");
        }
        auto a = parse_or_usage(parse_code_name, purify.substr(0, comma));
        auto b = parse_or_usage(parse_code_name, purify.substr(comma + 1));
        const auto &codes = standard_codes();
        std::cout << build_purification_circuit(codes.family(a).reference.n(), codes.family(b).reference.n()).str();
        return 0;
    }
    auto name = parse_or_usage(parse_code_name, code);
    std::cout << standard_codes().family(name).reference.encoder().str();
    return 0;
}

int cmd_dump_code(const std::string &code) {
    auto name = parse_or_usage(parse_code_name, code);
    std::cout << standard_codes().family(name).reference.str();
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Monte Carlo simulator for heterogeneously encoded Bell pairs"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    RunOptions ro;
    TablesOptions to;
    PlotOptions po;
    AnalyticOptions ao;
    std::string dump_code_name = "steane7";
    std::string dump_purification;
    try {
        SeedDefault sd = seed_default();
        ro.seed = to.seed = po.seed = sd.value;
        ro.jobs = to.jobs = po.jobs = default_jobs();

        auto *run = app.add_subcommand("run", "Run one configuration and print a table row");
        run->add_option("--scheme", ro.scheme, "baseline | before | after | strict")->required();
        run->add_option("--code-a", ro.code_a, "steane7 | surface3 | physical")->capture_default_str();
        run->add_option("--code-b", ro.code_b, "steane7 | surface3 | physical")->capture_default_str();
        run->add_option("--rounds", ro.rounds, "Purification rounds")->capture_default_str();
        run->add_option("--p", ro.p, "Local gate error probability")->capture_default_str();
        run->add_option("--trials", ro.trials, "Number of trials")->capture_default_str();
        auto *run_seed = run->add_option("--seed", ro.seed, "Master seed (default 1 or $HETBELL_SEED)");
        run->add_option("--format", ro.format, "csv | json")
            ->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        run->add_option("--out", ro.out, "Output file (default stdout)");
        run->add_option("--jobs", ro.jobs, "Worker threads; results do not depend on it");
        run->add_option("--postselect", ro.postselect, "basis_compatible | oracle_all")->capture_default_str();
        run->add_option("--measurement", ro.measurement, "pauli | flip")->capture_default_str();
        run->add_option("--basis-order", ro.basis_order, "z_first | x_first")->capture_default_str();
        run->add_option("--source", ro.source, "measured | werner | perfect")->capture_default_str();
        run->add_option("--werner-fidelity", ro.werner_fidelity, "Fidelity for --source werner")
            ->capture_default_str();
        run->add_flag("--perfect-source", ro.perfect_source, "Shorthand for --source perfect");
        run->add_option("--kq-budget-steane7", ro.budget_steane7)->capture_default_str();
        run->add_option("--kq-budget-surface3", ro.budget_surface3)->capture_default_str();
        run->add_option("--kq-budget-physical", ro.budget_physical)->capture_default_str();
        // Accepted here for --help; expand_config() consumes it before parsing.
        run->add_option("--config", "Flat key=value file of run options; flags win");

        auto *tables = app.add_subcommand("tables", "Regenerate the six standard sweeps as CSV files");
        tables->add_option("--which", to.which, "1..6 or all")->capture_default_str();
        tables->add_option("--trials", to.trials, "Trials per row")->capture_default_str();
        auto *tables_seed = tables->add_option("--seed", to.seed, "Master seed");
        tables->add_option("--outdir", to.outdir, "Directory for tableNx.csv files")->capture_default_str();
        tables->add_option("--jobs", to.jobs, "Worker threads; results do not depend on it");

        auto *plot = app.add_subcommand("plotdata", "Merged error rate versus raw pairs consumed, per scheme");
        plot->add_option("--trials", po.trials, "Trials per point")->capture_default_str();
        auto *plot_seed = plot->add_option("--seed", po.seed, "Master seed");
        plot->add_option("--out", po.out, "Output file (default stdout)");
        plot->add_option("--jobs", po.jobs, "Worker threads; results do not depend on it");

        auto *analytic = app.add_subcommand("analytic", "Closed-form fidelity and success-probability sweep");
        analytic->add_option("--f-min", ao.f_min)->capture_default_str();
        analytic->add_option("--f-max", ao.f_max)->capture_default_str();
        analytic->add_option("--steps", ao.steps, "Number of evenly spaced points")->capture_default_str();
        analytic->add_option("--out", ao.out, "Output file (default stdout)");

        auto *dump_circuit = app.add_subcommand("dump-circuit", "Print an encoder or purification circuit");
        dump_circuit->add_option("--code", dump_code_name, "Encoder to print")->capture_default_str();
        dump_circuit->add_option("--purification", dump_purification, "CODE_A,CODE_B purification step instead");

        auto *dump_code = app.add_subcommand("dump-code", "Print derived stabilizers and logicals");
        dump_code->add_option("--code", dump_code_name)->capture_default_str();

        std::vector<std::string> args(argv, argv + argc);
        if (args.size() >= 2 && args[1] == "run") {
            args = expand_config(std::move(args));
        }
        std::vector<std::string> reversed(args.rbegin(), args.rend() - 1);
        try {
            app.parse(std::move(reversed));
        } catch (const CLI::CallForHelp &e) {
            return app.exit(e);
        } catch (const CLI::CallForAllHelp &e) {
            return app.exit(e);
        } catch (const CLI::ParseError &e) {
            app.exit(e);
            return kExitUsage;
        }

        if (run->parsed()) {
            return cmd_run(ro, run_seed->count() > 0, sd);
        }
        if (tables->parsed()) {
            return cmd_tables(to, tables_seed->count() > 0, sd);
        }
        if (plot->parsed()) {
            return cmd_plotdata(po, plot_seed->count() > 0, sd);
        }
        if (analytic->parsed()) {
            return cmd_analytic(ao);
        }
        if (dump_circuit->parsed()) {
            return cmd_dump_circuit(dump_code_name, dump_purification);
        }
        if (dump_code->parsed()) {
            return cmd_dump_code(dump_code_name);
        }
        return kExitUsage;
    } catch (const UsageError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRuntime;
    }
}
