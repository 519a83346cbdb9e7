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

#include "loe/series.hpp"

#include "loe/error.hpp"

namespace loe {

namespace {

void trim(ExactPolynomial &p) {
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

}  // namespace

ExactPolynomial polynomial_multiply(const ExactPolynomial &a, const ExactPolynomial &b) {
    if (a.empty() || b.empty()) {
        return {};
    }
    ExactPolynomial out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

ExactScalar polynomial_evaluate(const ExactPolynomial &p, const ExactScalar &x) {
    ExactScalar acc = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

ExactPolynomial polynomial_interpolate(const std::vector<ExactScalar> &xs, const std::vector<ExactScalar> &ys) {
    require(xs.size() == ys.size() && !xs.empty(), "invalid_argument", "interpolation needs matching samples");
    const std::size_t n = xs.size();
    std::vector<ExactScalar> coef = ys;  // divided differences in place
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - level]);
        }
    }
    // Horner-style expansion of the Newton form.
    ExactPolynomial p{coef[n - 1]};
    for (std::size_t i = n - 1; i-- > 0;) {
        p = polynomial_multiply(p, ExactPolynomial{-xs[i], 1});
        p[0] += coef[i];
    }
    trim(p);
    return p;
}

ExactPolynomial polynomial_from_linear_factors(const std::vector<std::pair<int, int>> &factors) {
    ExactPolynomial p{1};
    for (const auto &[c, m] : factors) {
        for (int i = 0; i < m; ++i) {
            p = polynomial_multiply(p, ExactPolynomial{c, 1});
        }
    }
    return p;
}

std::vector<ExactScalar> inverse_power_expansion(const ExactPolynomial &num_in, const ExactPolynomial &den_in,
                                                 int terms) {
    ExactPolynomial num = num_in;
    ExactPolynomial den = den_in;
    trim(num);
    trim(den);
    require(!den.empty(), "invalid_argument", "zero denominator");
    std::vector<ExactScalar> out(static_cast<std::size_t>(terms));
    if (num.empty()) {
        return out;
    }
    const auto deg_num = static_cast<int>(num.size()) - 1;
    const auto deg_den = static_cast<int>(den.size()) - 1;
    if (deg_num > deg_den) {
        fail_runtime("series_divergent", "function grows with D; no expansion in 1/D");
    }
    // With x = 1/D: num(D)/den(D) = x^{deg_den - deg_num} * rnum(x) / rden(x),
    // where rnum, rden are the coefficient-reversed polynomials.
    const int shift = deg_den - deg_num;
    auto coeff = [](const ExactPolynomial &p, int i) -> ExactScalar {
        const int idx = static_cast<int>(p.size()) - 1 - i;
        return idx >= 0 ? p[static_cast<std::size_t>(idx)] : ExactScalar(0);
    };
    std::vector<ExactScalar> quotient;  // rnum / rden as a power series in x
    for (int j = 0; j + shift < terms; ++j) {
        ExactScalar acc = coeff(num, j);
        for (int i = 1; i <= j; ++i) {
            acc -= coeff(den, i) * quotient[static_cast<std::size_t>(j - i)];
        }
        quotient.push_back(acc / den.back());
        out[static_cast<std::size_t>(j + shift)] = quotient.back();
    }
    return out;
}

std::vector<ExactScalar> recover_inverse_power_series(const std::function<ExactScalar(std::int64_t)> &f,
                                                      const std::vector<std::int64_t> &dims,
                                                      const ExactPolynomial &den, int numerator_degree, int terms) {
    const auto needed = static_cast<std::size_t>(numerator_degree + 1);
    require(dims.size() >= needed + 2, "invalid_argument",
            "series recovery needs " + std::to_string(needed + 2) + " sample dimensions");
    std::vector<ExactScalar> xs;
    std::vector<ExactScalar> ys;
    for (std::size_t i = 0; i < needed; ++i) {
        const ExactScalar d(dims[i]);
        xs.push_back(d);
        ys.push_back(f(dims[i]) * polynomial_evaluate(den, d));
    }
    const ExactPolynomial num = polynomial_interpolate(xs, ys);
    for (std::size_t i = needed; i < dims.size(); ++i) {
        const ExactScalar d(dims[i]);
        if (polynomial_evaluate(num, d) != f(dims[i]) * polynomial_evaluate(den, d)) {
            fail_runtime("series_certificate",
                         "reconstructed rational function disagrees with a check sample at D=" +
                             std::to_string(dims[i]));
        }
    }
    return inverse_power_expansion(num, den, terms);
}

}  // namespace loe
