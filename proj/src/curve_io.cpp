// Copyright 2026 The loe-page Authors
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

#include "loe/curve_io.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "json.hpp"

#include "loe/error.hpp"

namespace loe {

namespace {

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> out;
    std::string field;
    std::istringstream is(line);
    while (std::getline(is, field, sep)) {
        out.push_back(field);
    }
    if (!line.empty() && line.back() == sep) {
        out.emplace_back();
    }
    return out;
}

std::string join(const std::vector<std::string> &fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out += (i ? "," : "") + fields[i];
    }
    return out;
}

double parse_double(const std::string &text, int line) {
    if (text == "nan") {
        return std::nan("");
    }
    double x = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    require(ec == std::errc() && end == text.data() + text.size() && !text.empty(), "schema_error",
            "line " + std::to_string(line) + ": '" + text + "' is not a number");
    return x;
}

std::int64_t parse_int(const std::string &text, int line) {
    std::int64_t x = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
    require(ec == std::errc() && end == text.data() + text.size() && !text.empty(), "schema_error",
            "line " + std::to_string(line) + ": '" + text + "' is not an integer");
    return x;
}

nlohmann::json json_number(double x) { return std::isnan(x) ? nlohmann::json(nullptr) : nlohmann::json(x); }

}  // namespace

std::string format_double(double x) {
    if (std::isnan(x)) {
        return "nan";
    }
    char buf[64];
    const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, end);
}

void write_curve_csv(const EntropyCurve &curve, std::ostream &out) {
    out << join(kCurveColumns) << '\n';
    for (const auto &r : curve.rows) {
        out << r.n_a << ',' << r.order.label() << ',' << format_double(r.mean_entropy) << ','
            << format_double(r.std_error) << ',' << format_double(r.annealed_entropy) << ','
            << format_double(r.mean_purity) << ',' << format_double(r.purity_variance) << ',' << r.samples << '\n';
    }
}

void write_curve_json(const EntropyCurve &curve, std::ostream &out) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &r : curve.rows) {
        rows.push_back({{"nA", r.n_a},
                        {"k", r.order.label()},
                        {"mean_entropy", json_number(r.mean_entropy)},
                        {"std_error", json_number(r.std_error)},
                        {"annealed_entropy", json_number(r.annealed_entropy)},
                        {"mean_purity", json_number(r.mean_purity)},
                        {"purity_variance", json_number(r.purity_variance)},
                        {"samples", r.samples}});
    }
    out << rows.dump(2) << '\n';
}

void write_prediction_csv(const std::vector<PageCurvePoint> &points, std::ostream &out) {
    out << join(kPredictionColumns) << '\n';
    for (const auto &p : points) {
        out << p.n_a << ',' << format_double(p.entropy) << '\n';
    }
}

void write_prediction_json(const std::vector<PageCurvePoint> &points, std::ostream &out) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &p : points) {
        rows.push_back({{"nA", p.n_a}, {"entropy_pred", json_number(p.entropy)}});
    }
    out << rows.dump(2) << '\n';
}

std::vector<EntropyRow> read_curve_csv(std::istream &in) {
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), "schema_error", "empty CSV");
    require(line == join(kCurveColumns), "schema_error", "unexpected header '" + line + "'");
    std::vector<EntropyRow> rows;
    int number = 1;
    while (std::getline(in, line)) {
        ++number;
        if (line.empty()) {
            continue;
        }
        const auto f = split(line, ',');
        require(f.size() == kCurveColumns.size(), "schema_error",
                "line " + std::to_string(number) + ": expected 8 fields, found " + std::to_string(f.size()));
        EntropyRow r;
        r.n_a = static_cast<int>(parse_int(f[0], number));
        require(r.n_a >= 0, "schema_error", "line " + std::to_string(number) + ": negative nA");
        try {
            r.order = EntropyOrder::parse(f[1]);
        } catch (const Error &e) {
            fail("schema_error", "line " + std::to_string(number) + ": " + e.what());
        }
        r.mean_entropy = parse_double(f[2], number);
        r.std_error = parse_double(f[3], number);
        r.annealed_entropy = parse_double(f[4], number);
        r.mean_purity = parse_double(f[5], number);
        r.purity_variance = parse_double(f[6], number);
        r.samples = parse_int(f[7], number);
        require(r.samples >= 2, "schema_error", "line " + std::to_string(number) + ": samples < 2");
        require(!(r.std_error < 0) && !(r.purity_variance < 0), "schema_error",
                "line " + std::to_string(number) + ": negative spread");
        require(r.order.has_purity() || std::isnan(r.mean_purity), "schema_error",
                "line " + std::to_string(number) + ": purity given for an order without one");
        rows.push_back(r);
    }
    return rows;
}

}  // namespace loe
