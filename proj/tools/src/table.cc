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

#include "table.h"

#include <stdexcept>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "qladder/version.h"

namespace qladder::cli {

void Table::add_row(std::vector<Cell> row) {
    if (row.size() != columns.size()) {
        throw std::logic_error("table row has " + std::to_string(row.size()) + " cells for " +
                               std::to_string(columns.size()) + " columns");
    }
    rows.push_back(std::move(row));
}

std::string format_cell(const Cell &c) {
    if (const auto *d = std::get_if<double>(&c)) {
        return fmt::format("{:.17g}", *d == 0.0 ? 0.0 : *d);
    }
    if (const auto *i = std::get_if<long long>(&c)) {
        return fmt::format("{}", *i);
    }
    const auto &s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string quoted = "\"";
    for (char ch : s) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    return quoted + "\"";
}

namespace {

std::string join(const std::vector<std::string> &parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) {
            out += sep;
        }
        out += parts[i];
    }
    return out;
}

nlohmann::json to_json(const Cell &c) {
    if (const auto *d = std::get_if<double>(&c)) {
        return *d == 0.0 ? 0.0 : *d;
    }
    return std::visit([](const auto &v) { return nlohmann::json(v); }, c);
}

}  // namespace

void write_csv(std::ostream &out, const Table &t, const RunInfo &info) {
    out << fmt::format("# qladder {} mode={} seed={} config_hash={}\n", kVersion, info.mode, info.seed,
                       hex64(info.config_hash));
    if (!t.summary.empty()) {
        std::vector<std::string> parts;
        for (const auto &[k, v] : t.summary) {
            parts.push_back(k + "=" + format_cell(v));
        }
        out << "# " << join(parts, " ") << "\n";
    }
    out << join(t.columns, ",") << "\n";
    for (const auto &row : t.rows) {
        std::vector<std::string> cells;
        cells.reserve(row.size());
        for (const auto &c : row) {
            cells.push_back(format_cell(c));
        }
        out << join(cells, ",") << "\n";
    }
}

void write_json(std::ostream &out, const Table &t, const RunInfo &info) {
    nlohmann::ordered_json meta;
    meta["version"] = kVersion;
    meta["mode"] = info.mode;
    meta["seed"] = info.seed;
    meta["config_hash"] = hex64(info.config_hash);
    for (const auto &[k, v] : t.summary) {
        meta[k] = to_json(v);
    }
    nlohmann::ordered_json doc;
    doc["meta"] = meta;
    doc["columns"] = t.columns;
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &row : t.rows) {
        nlohmann::json r = nlohmann::json::array();
        for (const auto &c : row) {
            r.push_back(to_json(c));
        }
        rows.push_back(std::move(r));
    }
    doc["rows"] = std::move(rows);
    out << doc.dump(2) << "\n";
}

void write_table(std::ostream &out, const Table &t, const RunInfo &info, Format format) {
    if (format == Format::csv) {
        write_csv(out, t, info);
    } else {
        write_json(out, t, info);
    }
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    return fmt::format("{:016x}", v);
}

}  // namespace qladder::cli
