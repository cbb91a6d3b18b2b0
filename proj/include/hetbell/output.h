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

#ifndef HETBELL_OUTPUT_H
#define HETBELL_OUTPUT_H

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hetbell/montecarlo.h"

namespace hetbell {

inline constexpr std::string_view kToolVersion = "hetbell 0.1.0";

inline constexpr std::string_view kCsvHeader =
    "rounds,x_rate,z_rate,merged_rate,ineff,kq,n_1q,n_2q,x_ci_lo,x_ci_hi,z_ci_lo,z_ci_hi,merged_ci_lo,merged_ci_hi";

/// Key/value pairs describing a run. Together with the tool version they are
/// enough to reproduce every row bit-exactly. Worker count is deliberately absent.
std::vector<std::pair<std::string, std::string>> run_metadata(const RunConfig &cfg);

/// Shortest decimal text that parses back to exactly `v`.
std::string format_double(double v);

std::string csv_row(const TableRow &row);

/// `# key=value` lines, the header, then one line per row.
void write_csv(std::ostream &out, const std::vector<std::pair<std::string, std::string>> &metadata,
               const std::vector<TableRow> &rows);

/// {"metadata": {...}, "rows": [{...}]} using the CSV column names.
void write_json(std::ostream &out, const std::vector<std::pair<std::string, std::string>> &metadata,
                const std::vector<TableRow> &rows);

/// One standard sweep: a scheme on a code pair at three error rates.
struct TableSpec {
    int number;
    SchemeKind scheme;
    CodeName code_a;
    CodeName code_b;
    std::string_view title;
};

inline constexpr double kTableErrorRates[3] = {1e-3, 1e-4, 1e-5};

const std::vector<TableSpec> &table_catalogue();
const TableSpec &table_spec(int number);

/// File name for sub-table `index` (0, 1, 2 -> a, b, c), e.g. "table4a.csv".
std::string table_file_name(int number, size_t index);

}  // namespace hetbell

#endif
