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
#include <vector>

#include "loe/permutation.hpp"

namespace loe {

/// Non-crossing permutations of S_k: every cycle is an increasing run of
/// points and no two cycles cross when drawn on a circle.
struct NCSet {
    int k = 0;
    std::vector<Permutation> elements;
};

/// Points on a geodesic from the identity to `anchor` in the Cayley metric.
struct GeodesicSet {
    Permutation anchor;
    std::vector<Permutation> members;
};

/// Exact Catalan number (k <= 35 fits in 64 bits).
std::uint64_t catalan(int k);

/// Gamma(2x+1) / (Gamma(x+1) Gamma(x+2)), defined for x > -1/2.
double catalan_continued(double x);

/// d/dx log catalan_continued(x) = 2 psi(2x+1) - psi(x+1) - psi(x+2).
double catalan_log_derivative(double x);

/// Default combinatorial guard for enumerate_nc.
inline constexpr int kMaxNcDegree = 10;

/// All of NC(k), sorted lexicographically by one-line word.
/// Filters S_k by #(pi) + #(pi^{-1} gamma) = k + 1 for k <= 6, and builds
/// non-crossing set partitions recursively above that.
NCSet enumerate_nc(int k, int max_k = kMaxNcDegree);

/// Reference enumeration by filtering all of S_k; k <= 9.
NCSet enumerate_nc_by_filter(int k);

/// Pairings sigma of 2k points with
/// dist(tau_g, sigma) + dist(sigma, tau_e) = dist(tau_g, tau_e);
/// these are exactly the non-crossing perfect matchings.
std::vector<BrauerPairing> enumerate_nc_pairings(int two_k);

/// prod over cycles c of a^{-1} b of (-1)^{|c|-1} C_{|c|-1}.
std::int64_t mobius(const Permutation &a, const Permutation &b);

/// {pi : dist(sigma, pi) + dist(pi, e) = dist(sigma, e)}, degree <= 10.
GeodesicSet geodesic_set(const Permutation &sigma);

/// Partial order pi <= sigma of the geodesic lattice.
bool on_geodesic(const Permutation &pi, const Permutation &sigma);

}  // namespace loe
