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
#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"

using namespace hetbell;

namespace {

TableRow example_row() {
    TableRow row;
    row.rounds = 2;
    row.trials = 1000;
    row.x = {12, 0.012, 0.006, 0.02};
    row.z = {3, 0.003, 0.001, 0.009};
    row.merged = {15, 0.015, 0.009, 0.024};
    row.inefficiency = 4.875;
    row.kq_mean = 39;
    row.n_1q_mean = 9.75;
    row.n_2q_mean = 9.75;
    return row;
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) {
        out.push_back(cell);
    }
    return out;
}

}  // namespace

TEST(output, format_double_round_trips) {
    for (double v : {0.0, 1.0, 0.1, 1e-3, 0.0123456789, 25.83, 1.0 / 3.0}) {
        std::string s = format_double(v);
        double back = 0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        EXPECT_EQ(back, v) << s;
    }
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(8), "8");
}

TEST(output, csv_row_follows_header) {
    auto cols = split(std::string(kCsvHeader), ',');
    auto cells = split(csv_row(example_row()), ',');
    ASSERT_EQ(cols.size(), cells.size());
    EXPECT_EQ(cols.size(), 14u);
    EXPECT_EQ(cells[0], "2");
    EXPECT_EQ(cells[1], "0.012");
    EXPECT_EQ(cells[3], "0.015");
    EXPECT_EQ(cells[4], "4.875");
    EXPECT_EQ(cells[5], "39");
    EXPECT_EQ(cells[13], "0.024");
}

TEST(output, csv_layout) {
    std::ostringstream out;
    write_csv(out, {{"scheme", "baseline"}, {"p", "0.001"}}, {example_row(), example_row()});
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "# scheme=baseline");
    std::getline(in, line);
    EXPECT_EQ(line, "# p=0.001");
    std::getline(in, line);
    EXPECT_EQ(line, kCsvHeader);
    int rows = 0;
    while (std::getline(in, line)) {
        rows++;
    }
    EXPECT_EQ(rows, 2);
}

TEST(output, json_layout) {
    std::ostringstream out;
    write_json(out, {{"scheme", "strict"}}, {example_row()});
    auto doc = nlohmann::json::parse(out.str());
    EXPECT_EQ(doc["metadata"]["scheme"], "strict");
    ASSERT_EQ(doc["rows"].size(), 1u);
    const auto &row = doc["rows"][0];
    for (const auto &name : split(std::string(kCsvHeader), ',')) {
        EXPECT_TRUE(row.contains(name)) << name;
    }
    EXPECT_EQ(row["rounds"], 2);
    EXPECT_EQ(row["trials"], 1000);
    EXPECT_DOUBLE_EQ(row["ineff"].get<double>(), 4.875);
}

TEST(output, metadata_records_the_run) {
    RunConfig cfg;
    cfg.scheme = SchemeKind::after_encoding_strict;
    cfg.code_a = CodeName::steane7;
    cfg.code_b = CodeName::surface3;
    cfg.seed = 99;
    auto meta = run_metadata(cfg);
    auto find = [&](const std::string &key) -> std::string {
        for (const auto &[k, v] : meta) {
            if (k == key) {
                return v;
            }
        }
        return "<missing>";
    };
    EXPECT_EQ(find("tool"), kToolVersion);
    EXPECT_EQ(find("scheme"), "strict");
    EXPECT_EQ(find("code_a"), "steane7");
    EXPECT_EQ(find("code_b"), "surface3");
    EXPECT_EQ(find("seed"), "99");
    EXPECT_EQ(find("p"), "0.001");
    EXPECT_EQ(find("measurement"), "pauli");
    EXPECT_EQ(find("postselect"), "basis_compatible");
    EXPECT_EQ(find("kq_budget_surface3"), "25");
    EXPECT_EQ(find("werner_fidelity"), "<missing>");
}

TEST(output, table_catalogue) {
    const auto &cat = table_catalogue();
    ASSERT_EQ(cat.size(), 6u);
    for (int n = 1; n <= 6; n++) {
        EXPECT_EQ(table_spec(n).number, n);
    }
    EXPECT_EQ(table_spec(1).scheme, SchemeKind::baseline_physical);
    EXPECT_EQ(table_spec(2).scheme, SchemeKind::before_encoding);
    EXPECT_EQ(table_spec(3).scheme, SchemeKind::after_encoding);
    EXPECT_EQ(table_spec(4).scheme, SchemeKind::after_encoding_strict);
    EXPECT_EQ(table_spec(5).code_b, CodeName::physical);
    EXPECT_EQ(table_spec(6).code_a, CodeName::surface3);
    EXPECT_THROW(table_spec(7), std::invalid_argument);
    EXPECT_EQ(table_file_name(4, 0), "table4a.csv");
    EXPECT_EQ(table_file_name(1, 2), "table1c.csv");
}
