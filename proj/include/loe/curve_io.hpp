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

#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "loe/montecarlo.hpp"
#include "loe/page.hpp"

namespace loe {

/// Column order of every entropy-curve CSV.
inline const std::vector<std::string> kCurveColumns = {
    "nA", "k", "mean_entropy", "std_error", "annealed_entropy", "mean_purity", "purity_variance", "samples"};

/// Columns of the analytic page-curve CSV.
inline const std::vector<std::string> kPredictionColumns = {"nA", "entropy_pred"};

/// Shortest round-trip decimal with 17 significant digits; "nan" for NaN.
std::string format_double(double x);

void write_curve_csv(const EntropyCurve &curve, std::ostream &out);
void write_curve_json(const EntropyCurve &curve, std::ostream &out);
void write_prediction_csv(const std::vector<PageCurvePoint> &points, std::ostream &out);
void write_prediction_json(const std::vector<PageCurvePoint> &points, std::ostream &out);

/// Parses and validates an entropy-curve CSV: exact header, eight fields
/// per row, integer nA >= 0 and samples >= 2, a valid order label, numeric
/// (or nan) values, purity_variance >= 0 and std_error >= 0.
std::vector<EntropyRow> read_curve_csv(std::istream &in);

}  // namespace loe
