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

#include "hetbell/output.h"

#include <charconv>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace hetbell {

std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::vector<std::pair<std::string, std::string>> run_metadata(const RunConfig &cfg) {
    std::vector<std::pair<std::string, std::string>> m = {
        {"tool", std::string(kToolVersion)},
        {"scheme", std::string(scheme_str(cfg.scheme))},
        {"code_a", std::string(code_name_str(cfg.code_a))},
        {"code_b", std::string(code_name_str(cfg.code_b))},
        {"p", format_double(cfg.p)},
        {"trials", std::to_string(cfg.trials)},
        {"seed", std::to_string(cfg.seed)},
        {"measurement", std::string(measurement_noise_str(cfg.measurement))},
        {"postselect", std::string(postselect_str(cfg.postselect))},
        {"basis_order", std::string(basis_order_str(cfg.basis_order))},
        {"source", std::string(source_str(cfg.source))},
    };
    if (cfg.source == SourceKind::werner) {
        m.emplace_back("werner_fidelity", format_double(cfg.werner_fidelity));
    }
    m.emplace_back("kq_budget_steane7", std::to_string(cfg.budgets.steane7));
    m.emplace_back("kq_budget_surface3", std::to_string(cfg.budgets.surface3));
    m.emplace_back("kq_budget_physical", std::to_string(cfg.budgets.physical));
    return m;
}

std::string csv_row(const TableRow &r) {
    std::string s = std::to_string(r.rounds);
    for (double v : {r.x.rate, r.z.rate, r.merged.rate, r.inefficiency, r.kq_mean, r.n_1q_mean, r.n_2q_mean,
                     r.x.ci_lo, r.x.ci_hi, r.z.ci_lo, r.z.ci_hi, r.merged.ci_lo, r.merged.ci_hi}) {
        s += ',';
        s += format_double(v);
    }
    return s;
}

void write_csv(std::ostream &out, const std::vector<std::pair<std::string, std::string>> &metadata,
               const std::vector<TableRow> &rows) {
    for (const auto &[k, v] : metadata) {
        out << "# " << k << "=" << v << "\n";
    }
    out << kCsvHeader << "\n";
    for (const auto &r : rows) {
        out << csv_row(r) << "\n";
    }
}

void write_json(std::ostream &out, const std::vector<std::pair<std::string, std::string>> &metadata,
                const std::vector<TableRow> &rows) {
    nlohmann::ordered_json doc;
    auto &meta = doc["metadata"];
    meta = nlohmann::ordered_json::object();
    for (const auto &[k, v] : metadata) {
        meta[k] = v;
    }
    doc["rows"] = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        nlohmann::ordered_json j;
        j["rounds"] = r.rounds;
        j["x_rate"] = r.x.rate;
        j["z_rate"] = r.z.rate;
        j["merged_rate"] = r.merged.rate;
        j["ineff"] = r.inefficiency;
        j["kq"] = r.kq_mean;
        j["n_1q"] = r.n_1q_mean;
        j["n_2q"] = r.n_2q_mean;
        j["x_ci_lo"] = r.x.ci_lo;
        j["x_ci_hi"] = r.x.ci_hi;
        j["z_ci_lo"] = r.z.ci_lo;
        j["z_ci_hi"] = r.z.ci_hi;
        j["merged_ci_lo"] = r.merged.ci_lo;
        j["merged_ci_hi"] = r.merged.ci_hi;
        j["trials"] = r.trials;
        doc["rows"].push_back(std::move(j));
    }
    out << doc.dump(2) << "\n";
}

const std::vector<TableSpec> &table_catalogue() {
    static const std::vector<TableSpec> tables = {
        {1, SchemeKind::baseline_physical, CodeName::physical, CodeName::physical, "physical purification only"},
        {2, SchemeKind::before_encoding, CodeName::steane7, CodeName::surface3, "purify before encoding"},
        {3, SchemeKind::after_encoding, CodeName::steane7, CodeName::surface3, "purify after encoding"},
        {4, SchemeKind::after_encoding_strict, CodeName::steane7, CodeName::surface3,
         "purify after encoding, strict post-selection"},
        {5, SchemeKind::after_encoding_strict, CodeName::steane7, CodeName::physical,
         "purify after encoding, strict post-selection"},
        {6, SchemeKind::after_encoding_strict, CodeName::surface3, CodeName::physical,
         "purify after encoding, strict post-selection"},
    };
    return tables;
}

const TableSpec &table_spec(int number) {
    for (const auto &t : table_catalogue()) {
        if (t.number == number) {
            return t;
        }
    }
    throw std::invalid_argument("no table numbered " + std::to_string(number));
}

std::string table_file_name(int number, size_t index) {
    if (index >= 3) {
        throw std::invalid_argument("sub-table index must be 0, 1 or 2");
    }
    return "table" + std::to_string(number) + char('a' + index) + ".csv";
}

}  // namespace hetbell
