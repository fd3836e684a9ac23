// Copyright 2026 The qladder Authors
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

#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace qladder::cli {

using Cell = std::variant<double, long long, std::string>;

/// Result table shared by the CSV and JSON writers.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
    /// Extra metadata, written into the JSON meta block and as a second CSV
    /// comment line.
    std::vector<std::pair<std::string, Cell>> summary;

    void add_row(std::vector<Cell> row);
};

struct RunInfo {
    std::string mode;
    std::uint64_t seed = 0;
    std::uint64_t config_hash = 0;
};

enum class Format { csv, json };

/// Doubles are written with 17 significant digits.
std::string format_cell(const Cell &c);
void write_csv(std::ostream &out, const Table &t, const RunInfo &info);
void write_json(std::ostream &out, const Table &t, const RunInfo &info);
void write_table(std::ostream &out, const Table &t, const RunInfo &info, Format format);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view text);
std::string hex64(std::uint64_t v);

}  // namespace qladder::cli
