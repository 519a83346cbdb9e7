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

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

#include <Eigen/Dense>

#include "loe/moments.hpp"

namespace loe {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

/// Which initial operator O to build on q^N dimensions.
struct OperatorSpec {
    enum class Kind {
        pauli,             // tensor product of single-site Paulis
        gaussian,          // GUE, projected traceless and normalized
        random_traceless,  // Haar-rotated uniform spectrum, projected and normalized
        trace,             // w 1 + sqrt(1 - w^2) Z_1, so <O> = w
        matrix,            // read from a file, projected and normalized
    };
    Kind kind = Kind::pauli;
    int qubits = 1;
    int local_dim = 2;
    /// Pauli letters per site ('I', 'X', 'Y', 'Z'), site 1 first.
    std::string pauli;
    double trace_weight = 0;
    std::string path;

    /// "pauli:Z1", "pauli:X1Z3", "gue" (alias "gaussian"), "random_traceless",
    /// "trace:<w>", "file:<path>".
    static OperatorSpec parse(std::string_view text, int qubits, int local_dim = 2);
    std::string describe() const;
    bool is_random() const { return kind == Kind::gaussian || kind == Kind::random_traceless; }
};

/// Materializes the operator. Random kinds draw from `seed`; site 1 is the
/// most significant tensor factor.
ComplexMatrix build_operator(const OperatorSpec &spec, std::uint64_t seed);

/// Removes the trace and rescales to tr[O^dag O]/D = 1.
ComplexMatrix project_traceless_normalized(const ComplexMatrix &op);

/// Matrix file: first line the dimension, then dim*dim row-major entries
/// written as `re,im`, separated by whitespace.
ComplexMatrix read_operator_file(const std::string &path);

/// <O^l> = tr[O^l]/D for l = 1..max_order (real parts; O Hermitian).
MomentProfile<double> operator_moments(const ComplexMatrix &op, int max_order);

/// Single-site Pauli matrix for 'I', 'X', 'Y', 'Z'.
ComplexMatrix pauli_matrix(char letter);

}  // namespace loe
