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
#include <optional>
#include <vector>

#include "loe/entropy_order.hpp"
#include "loe/moments.hpp"

namespace loe {

/// Leading-order Haar k-purity for an arbitrary operator:
///   sum over sigma in S_{2k} of kappa_sigma
///     dim_a^{#(sigma) + #(sigma^{-1} tau_g) - 3k} dim_b^{#(sigma) + #(sigma^{-1} tau_e) - 3k}.
/// Cumulants must cover order 2k; k <= 6 (k = 6 enumerates S_12 once and
/// takes minutes).
double purity_leading_general(int k, std::int64_t dim_a, std::int64_t dim_b, const CumulantProfile<double> &cumulants);

/// Traceless, kappa_2 = 1: sum over pi in NC(k) of
///   dim_a^{-2 dist(gamma, pi)} dim_b^{-2 dist(e, pi)}.
/// A trivial cut (either side of dimension 1) returns exactly 1. k <= 12.
double page_purity(int k, std::int64_t dim_a, std::int64_t dim_b);

/// Number of pi in NC(k) with #(pi) = j, for j = 1..k (entry j-1).
std::vector<std::uint64_t> nc_cycle_count_profile(int k);

/// The 1/D coefficient f_k of the half-chain purity (kappa_2 = 1):
/// 1 + 2 kappa4, 6 + 12 kappa4, 29 + 56 kappa4 for k = 2, 3, 4; f_1 = 0.
/// Empty for any other k.
std::optional<double> half_chain_correction(int k, double kappa4);

/// C_k / D^{k-1} + f_k / D^k. D must be a perfect square; k in {1, 2, 3, 4}
/// (other k raise `unavailable`).
double half_chain_purity_corrected(int k, std::int64_t dim, double kappa4);

/// (1-k)^{-1} log of the predicted purity, in nats. With kappa4 at a
/// half cut and k <= 4 the corrected purity is used, otherwise page_purity.
/// k = 1 is routed to vn_page_entropy.
double renyi_page_entropy(int k, std::int64_t dim_a, std::int64_t dim_b, std::optional<double> kappa4 = {});

/// Von Neumann prediction in nats. With m = min(dim_a, dim_b)^2 and
/// n = max(dim_a, dim_b)^2 this is ln m - m / (2n), i.e. ln D - 1/2 at the
/// half cut, and 0 on a trivial cut. At the half cut an optional kappa4
/// adds -f'(1)/D, where f is the cubic through f_1..f_4; this k -> 1
/// limit is an extrapolation from four known points.
double vn_page_entropy(std::int64_t dim_a, std::int64_t dim_b, std::optional<double> kappa4 = {});

/// The k -> 1 slope f'(1) of the half-chain correction, split as
/// value + slope_kappa4 * kappa4.
struct CorrectionSlope {
    double value = 0;
    double slope_kappa4 = 0;
};
CorrectionSlope half_chain_correction_slope();

/// log((2k-1)!!) / (1-k), k >= 2.
double haar_ose_correction(int k);

struct PageCurvePoint {
    int n_a = 0;
    EntropyOrder order;
    double entropy = 0;
};

/// Prediction for n_a = 0..qubits with local dimension q. Supports Renyi
/// and von Neumann orders.
std::vector<PageCurvePoint> predicted_page_curve(EntropyOrder order, int qubits, std::optional<double> kappa4 = {},
                                                 int local_dim = 2);

}  // namespace loe
