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

#include "loe/entropy_order.hpp"
#include "loe/operators.hpp"

namespace loe {

/// Default cap on the number of amplitudes q^{2N} of a vectorized operator.
inline constexpr std::int64_t kDefaultAmplitudeCap = std::int64_t{1} << 20;

/// Bipartition of q^N sites: sites 1..n_a form A (most significant).
struct Cut {
    int qubits = 1;
    int local_dim = 2;
    int n_a = 0;

    std::int64_t dim_a() const;
    std::int64_t dim_b() const;
};

/// Schmidt coefficients squared of |O_U>> = (O_U (x) 1)|phi+> across
/// (A, A') | (B, B'), where O_U = U^dag O U is passed in directly. The
/// amplitude vector is reshaped to dim_a^2 x dim_b^2 and the smaller Gram
/// matrix diagonalized; tiny negative eigenvalues are set to zero.
/// Returned in descending order.
std::vector<double> loe_spectrum(const ComplexMatrix &evolved, const Cut &cut,
                                 std::int64_t amplitude_cap = kDefaultAmplitudeCap);

/// Same for a pure state of length dim_a * dim_b (no doubling).
std::vector<double> state_spectrum(const Eigen::VectorXcd &state, std::int64_t dim_a, std::int64_t dim_b);

/// sum_i lambda_i^k.
double purity_from_spectrum(const std::vector<double> &spectrum, int k);

/// One entropy per requested order, in nats. Eigenvalues below 1e-14 are
/// dropped; a spectrum whose sum is off by more than 1e-8 is rejected.
std::vector<double> entropies_from_spectrum(const std::vector<double> &spectrum, const std::vector<EntropyOrder> &orders);

struct EntropyRow {
    int n_a = 0;
    EntropyOrder order;
    double mean_entropy = 0;
    double std_error = 0;
    /// (1-k)^{-1} log(mean purity); NaN for vn, 0 and inf.
    double annealed_entropy = 0;
    double mean_purity = 0;
    double purity_variance = 0;
    std::int64_t samples = 0;
};

struct EntropyCurve {
    int qubits = 0;
    int local_dim = 2;
    std::vector<EntropyRow> rows;

    const EntropyRow &at(int n_a, const EntropyOrder &order) const;
};

struct ScanOptions {
    std::int64_t samples = 100;
    std::vector<EntropyOrder> orders{EntropyOrder::von_neumann()};
    std::uint64_t seed = 0;
    int threads = 1;
    int max_qubits = 10;
    std::int64_t amplitude_cap = kDefaultAmplitudeCap;
    /// Restrict to these cuts; empty means n_a = 0..N.
    std::vector<int> cuts;
};

/// Haar average over U of the LOE at every cut. Sample i uses the unitary
/// seeded by derive_seed(seed, unitary stream, i); random operators are
/// drawn once from the operator stream. Results are reduced in sample
/// order, so the output does not depend on the thread count.
EntropyCurve page_curve_scan(const OperatorSpec &op, const ScanOptions &options);

/// Same, for a fixed operator matrix on q^N dimensions.
EntropyCurve page_curve_scan(const ComplexMatrix &op, int qubits, int local_dim, const ScanOptions &options);

/// Haar pure states of length q^{2N} cut as (q^{2 n_a}, q^{2(N - n_a)}).
EntropyCurve state_page_scan(int qubits, int local_dim, const ScanOptions &options);

struct FluctuationPoint {
    int qubits = 0;
    std::int64_t dim = 0;  // q^N
    double mean_purity = 0;
    double purity_variance = 0;
    /// Var(P) / mean(P)^2.
    double relative_variance = 0;
    double mean_entropy = 0;
    double annealed_entropy = 0;
    std::int64_t samples = 0;
};

struct FluctuationResult {
    int k = 2;
    std::vector<FluctuationPoint> points;
    /// Least-squares slope of log relative_variance against log D.
    double slope = 0;
};

/// Relative variance of the half-chain k-purity (cut at floor(N/2)) for each
/// N, seeded per N from the master seed.
FluctuationResult fluctuation_scan(const std::string &operator_text, int k, const std::vector<int> &qubit_list,
                                   const ScanOptions &options, int local_dim = 2);

/// Sum in a fixed pairwise order.
double pairwise_sum(const std::vector<double> &values);

/// Slope of the least-squares line through (x_i, y_i).
double least_squares_slope(const std::vector<double> &x, const std::vector<double> &y);

/// Runs body(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::int64_t count, int threads, const std::function<void(std::int64_t)> &body);

}  // namespace loe
