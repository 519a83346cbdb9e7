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
#include <random>

#include "loe/operators.hpp"

namespace loe {

/// SplitMix64 finalizer; derives independent stream seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Seed of sample `index` under `master`. Stream ids keep operator draws,
/// unitary draws and state draws apart.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

inline constexpr std::uint64_t kUnitaryStream = 1;
inline constexpr std::uint64_t kOperatorStream = 2;
inline constexpr std::uint64_t kStateStream = 3;

/// D x D matrix of i.i.d. standard complex normals, E|z|^2 = 1.
ComplexMatrix ginibre(int dim, std::mt19937_64 &rng);

/// Haar unitary: QR of a Ginibre matrix with each column of Q multiplied
/// by r_jj / |r_jj|.
ComplexMatrix haar_sample(int dim, std::uint64_t seed);

/// Haar-random unit vector of length dim.
Eigen::VectorXcd haar_state(std::int64_t dim, std::uint64_t seed);

}  // namespace loe
