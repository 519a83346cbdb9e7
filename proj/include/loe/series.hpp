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

#include <cstdint>
#include <functional>
#include <vector>

#include "loe/weingarten.hpp"

namespace loe {

/// Dense polynomial, coefficient of x^i at index i.
using ExactPolynomial = std::vector<ExactScalar>;

ExactPolynomial polynomial_multiply(const ExactPolynomial &a, const ExactPolynomial &b);
ExactScalar polynomial_evaluate(const ExactPolynomial &p, const ExactScalar &x);
/// Newton interpolation through (xs[i], ys[i]); xs distinct.
ExactPolynomial polynomial_interpolate(const std::vector<ExactScalar> &xs, const std::vector<ExactScalar> &ys);

/// prod_c (x + c)^{m_c}
ExactPolynomial polynomial_from_linear_factors(const std::vector<std::pair<int, int>> &factors);

/// Coefficients c_j with num(D)/den(D) = sum_{j>=0} c_j D^{-j}; needs
/// deg num <= deg den.
std::vector<ExactScalar> inverse_power_expansion(const ExactPolynomial &num, const ExactPolynomial &den, int terms);

/// Exact recovery of the 1/D expansion of a rational function f whose
/// denominator divides `den` and whose numerator f*den has degree at most
/// `numerator_degree`. f is sampled at the given dimensions (at least
/// numerator_degree + 3 of them); the last two samples certify the
/// reconstruction and a mismatch raises a runtime error.
std::vector<ExactScalar> recover_inverse_power_series(const std::function<ExactScalar(std::int64_t)> &f,
                                                      const std::vector<std::int64_t> &dims,
                                                      const ExactPolynomial &den, int numerator_degree, int terms);

}  // namespace loe
