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
#include <map>
#include <vector>

#include "loe/moments.hpp"
#include "loe/permutation.hpp"
#include "loe/weingarten.hpp"

namespace loe {

/// Haar-averaged operator k-purity of U^dag O U across A | A-bar, where
/// D = dim_a * dim_b.
struct PurityQuery {
    int k = 2;
    std::int64_t dim_a = 1;
    std::int64_t dim_b = 1;
    MomentProfile<ExactScalar> profile;
    /// Skip the <O^2> = 1 check.
    bool raw = false;
};

struct ExactPurityResult {
    ExactScalar value;
    /// Contribution of each conjugacy class of the outer permutation sigma;
    /// filled only on request.
    std::map<CycleType, ExactScalar> breakdown;
};

inline constexpr int kMaxExactOrder = 4;

/// sum over pi, sigma in S_{2k} of
///   Wg_{pi sigma} <O>_pi D^{#(pi)-k} D_A^{#(sigma^{-1} tau_g)} D_B^{#(sigma^{-1} tau_e)}.
///
/// The inner pi-sum is a class function of sigma and is evaluated once per
/// cycle type from D-independent class-convolution counts; the outer sum
/// uses a cached histogram of the boundary exponents. Requires k <= 4 and
/// D >= 2k.
ExactPurityResult average_purity_exact(const PurityQuery &query, bool with_breakdown = false,
                                       WeingartenBackend backend = WeingartenBackend::characters);

/// Haar average of the squared 2-purity, a sum over S_8 with the boundary
/// pairings doubled. Requires k == 2 and D >= 8.
ExactPurityResult average_purity_second_moment_exact(const PurityQuery &query);

enum class StateSpace {
    /// Haar state on the doubled space, subsystem dims dim_a^2 and dim_b^2.
    doubled,
    /// Haar state on dim_a * dim_b.
    plain,
};

/// E[tr rho_A^k] for a Haar-random pure state:
/// sum over sigma in S_k of d_A^{#(sigma gamma)} d_B^{#(sigma)} / (d (d+1) ... (d+k-1)).
ExactPurityResult average_state_purity_exact(int k, std::int64_t dim_a, std::int64_t dim_b,
                                             StateSpace space = StateSpace::doubled);

/// Exact 1/D expansion at the half cut D_A = D_B = sqrt(D): entry j is the
/// coefficient of D^{-j}. Reconstructed from exact evaluations at several
/// square dimensions against the known Weingarten denominator.
std::vector<ExactScalar> operator_purity_series(int k, const MomentProfile<ExactScalar> &profile, int terms);
std::vector<ExactScalar> second_moment_series(const MomentProfile<ExactScalar> &profile, int terms);
/// Doubled-space state purity at the half cut, same convention.
std::vector<ExactScalar> state_purity_series(int k, int terms);

}  // namespace loe
