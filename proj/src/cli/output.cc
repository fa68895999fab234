// Copyright 2026 The cvtele Authors
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

#include "cvtele/cli/output.hpp"

#include <cmath>
#include <string_view>

#include <fmt/format.h>
#include <fmt/ranges.h>

namespace cvtele::cli {
namespace {

std::string csv_field(std::string_view s) {
    if (s.find_first_of(",\"\r\n") == std::string_view::npos) {
        return std::string(s);
    }
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') {
            out += '"';
        }
        out += c;
    }
    out += '"';
    return out;
}

double rounded(double v, int digits) {
    if (!std::isfinite(v)) {
        return v;
    }
    return std::stod(format_real(v, digits));
}

std::string cell_text(const Cell& cell, int digits) {
    struct Visitor {
        int digits;
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(double v) const { return format_real(v, digits); }
        std::string operator()(std::int64_t v) const { return fmt::format("{}", v); }
        std::string operator()(const std::string& v) const { return csv_field(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    };
    return std::visit(Visitor{digits}, cell);
}

Json cell_json(const Cell& cell, int digits) {
    struct Visitor {
        int digits;
        Json operator()(std::monostate) const { return nullptr; }
        Json operator()(double v) const {
            return std::isfinite(v) ? Json(rounded(v, digits)) : Json(nullptr);
        }
        Json operator()(std::int64_t v) const { return v; }
        Json operator()(const std::string& v) const { return v; }
        Json operator()(bool v) const { return v; }
    };
    return std::visit(Visitor{digits}, cell);
}

}  // namespace

std::string format_real(double v, int digits) {
    if (std::isnan(v)) {
        return "nan";
    }
    if (std::isinf(v)) {
        return v > 0 ? "inf" : "-inf";
    }
    std::string s = fmt::format("{:.{}f}", v, digits);
    if (s.front() == '-' && s.find_first_not_of("-0.") == std::string::npos) {
        s.erase(0, 1);
    }
    return s;
}

Json round_reals(const Json& j, int digits) {
    if (j.is_number_float()) {
        double v = j.get<double>();
        return std::isfinite(v) ? Json(rounded(v, digits)) : Json(nullptr);
    }
    if (j.is_structured()) {
        Json out = j;
        for (auto it = out.begin(); it != out.end(); ++it) {
            *it = round_reals(*it, digits);
        }
        return out;
    }
    return j;
}

std::string render_csv(const Report& report, int digits) {
    std::string out = fmt::format("# cvtele {} csv-schema {} command {} columns {}\n", kVersion,
                                  kCsvSchema, report.command, fmt::join(report.columns, ","));
    out += "# config " + report.config.dump() + "\n";
    out += fmt::format("{}\n", fmt::join(report.columns, ","));
    for (const auto& row : report.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                out += ',';
            }
            out += cell_text(row[i], digits);
        }
        out += '\n';
    }
    if (!report.diagnostics.empty()) {
        out += "# diagnostics " + round_reals(report.diagnostics, digits).dump() + "\n";
    }
    return out;
}

std::string render_json(const Report& report, int digits) {
    Json results = Json::array();
    for (const auto& row : report.rows) {
        Json obj = Json::object();
        for (size_t i = 0; i < row.size() && i < report.columns.size(); ++i) {
            obj[report.columns[i]] = cell_json(row[i], digits);
        }
        results.push_back(std::move(obj));
    }
    Json doc = Json::object();
    doc["command"] = report.command;
    doc["config"] = report.config;
    doc["results"] = std::move(results);
    doc["diagnostics"] = round_reals(report.diagnostics, digits);
    doc["version"] = kVersion;
    return doc.dump(2) + "\n";
}

}  // namespace cvtele::cli
