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

#include "loe/operators.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "loe/error.hpp"
#include "loe/haar.hpp"

namespace loe {

namespace {

constexpr double kHermitianTolerance = 1e-10;

std::int64_t total_dim(const OperatorSpec &spec) {
    require(spec.qubits >= 1, "invalid_argument", "need at least one site");
    require(spec.local_dim >= 2, "invalid_argument", "local dimension must be >= 2");
    const double log2_dim = spec.qubits * std::log2(static_cast<double>(spec.local_dim));
    require(log2_dim <= 14, "guard", "operator dimension above 2^14 is not supported");
    std::int64_t dim = 1;
    for (int i = 0; i < spec.qubits; ++i) {
        dim *= spec.local_dim;
    }
    return dim;
}

std::string parse_pauli_string(std::string_view text, int qubits) {
    require(!text.empty(), "invalid_operator", "empty Pauli string");
    std::string letters(static_cast<std::size_t>(qubits), 'I');
    std::size_t i = 0;
    while (i < text.size()) {
        const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
        require(letter == 'I' || letter == 'X' || letter == 'Y' || letter == 'Z', "invalid_operator",
                "unknown Pauli letter in '" + std::string(text) + "'");
        ++i;
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            ++i;
        }
        require(i > start, "invalid_operator", "Pauli letter without a site index in '" + std::string(text) + "'");
        const int site = std::stoi(std::string(text.substr(start, i - start)));
        require(site >= 1 && site <= qubits, "invalid_operator",
                "Pauli site " + std::to_string(site) + " outside 1.." + std::to_string(qubits));
        require(letters[static_cast<std::size_t>(site - 1)] == 'I', "invalid_operator",
                "site " + std::to_string(site) + " given twice");
        letters[static_cast<std::size_t>(site - 1)] = letter;
    }
    return letters;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

ComplexMatrix z_on_first_site(const OperatorSpec &spec) {
    std::string letters(static_cast<std::size_t>(spec.qubits), 'I');
    letters[0] = 'Z';
    ComplexMatrix op = ComplexMatrix::Identity(1, 1);
    for (char c : letters) {
        op = kron(op, pauli_matrix(c));
    }
    return op;
}

}  // namespace

ComplexMatrix pauli_matrix(char letter) {
    ComplexMatrix m(2, 2);
    switch (letter) {
    case 'I':
        m << 1, 0, 0, 1;
        break;
    case 'X':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
        m << 0, Complex(0, -1), Complex(0, 1), 0;
        break;
    case 'Z':
        m << 1, 0, 0, -1;
        break;
    default:
        fail("invalid_operator", std::string("unknown Pauli letter '") + letter + "'");
    }
    return m;
}

OperatorSpec OperatorSpec::parse(std::string_view text, int qubits, int local_dim) {
    OperatorSpec spec;
    spec.qubits = qubits;
    spec.local_dim = local_dim;
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
    if (head == "pauli") {
        spec.kind = Kind::pauli;
        spec.pauli = parse_pauli_string(arg, qubits);
    } else if (head == "gue" || head == "gaussian") {
        spec.kind = Kind::gaussian;
    } else if (head == "random_traceless") {
        spec.kind = Kind::random_traceless;
    } else if (head == "trace") {
        spec.kind = Kind::trace;
        std::size_t used = 0;
        try {
            spec.trace_weight = std::stod(std::string(arg), &used);
        } catch (const std::exception &) {
            used = 0;
        }
        require(used > 0 && used == arg.size(), "invalid_operator", "cannot parse trace weight '" + std::string(arg) + "'");
        require(std::abs(spec.trace_weight) <= 1, "invalid_operator", "trace weight must satisfy |w| <= 1");
    } else if (head == "file") {
        spec.kind = Kind::matrix;
        require(!arg.empty(), "invalid_operator", "file: needs a path");
        spec.path = std::string(arg);
    } else {
        fail("invalid_operator", "unknown operator kind '" + std::string(head) + "'");
    }
    require((spec.kind != Kind::pauli && spec.kind != Kind::trace) || local_dim == 2, "invalid_operator",
            "Pauli-based operators need local dimension 2");
    total_dim(spec);
    return spec;
}

std::string OperatorSpec::describe() const {
    switch (kind) {
    case Kind::pauli: {
        std::string out = "pauli:";
        for (std::size_t i = 0; i < pauli.size(); ++i) {
            if (pauli[i] != 'I') {
                out += pauli[i] + std::to_string(i + 1);
            }
        }
        return out == "pauli:" ? "pauli:I1" : out;
    }
    case Kind::gaussian:
        return "gue";
    case Kind::random_traceless:
        return "random_traceless";
    case Kind::trace: {
        std::ostringstream os;
        os.precision(17);
        os << "trace:" << trace_weight;
        return os.str();
    }
    case Kind::matrix:
        return "file:" + path;
    }
    return "";
}

ComplexMatrix project_traceless_normalized(const ComplexMatrix &op) {
    const auto dim = op.rows();
    ComplexMatrix out = op;
    out.diagonal().array() -= op.trace() / static_cast<double>(dim);
    const double norm2 = out.squaredNorm() / static_cast<double>(dim);
    if (norm2 < 1e-24) {
        fail_runtime("degenerate_operator", "operator is proportional to the identity");
    }
    return out / std::sqrt(norm2);
}

ComplexMatrix read_operator_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail_runtime("io_error", "cannot open operator file '" + path + "'");
    }
    long dim = 0;
    if (!(in >> dim) || dim < 1 || dim > (1 << 14)) {
        fail("invalid_operator", "operator file '" + path + "' must start with a positive dimension");
    }
    ComplexMatrix op(dim, dim);
    std::string token;
    for (long i = 0; i < dim; ++i) {
        for (long j = 0; j < dim; ++j) {
            if (!(in >> token)) {
                fail("invalid_operator", "operator file '" + path + "' ends early");
            }
            const auto comma = token.find(',');
            try {
                std::size_t used_re = 0;
                std::size_t used_im = 0;
                require(comma != std::string::npos, "invalid_operator", "");
                const double re = std::stod(token.substr(0, comma), &used_re);
                const std::string im_text = token.substr(comma + 1);
                const double im = std::stod(im_text, &used_im);
                require(used_re == comma && used_im == im_text.size(), "invalid_operator", "");
                op(i, j) = Complex(re, im);
            } catch (const std::exception &) {
                fail("invalid_operator", "bad entry '" + token + "' in operator file '" + path + "'");
            }
        }
    }
    if (in >> token) {
        fail("invalid_operator", "trailing data in operator file '" + path + "'");
    }
    if ((op - op.adjoint()).norm() > kHermitianTolerance * std::max(1.0, op.norm())) {
        fail("invalid_operator", "operator in '" + path + "' is not Hermitian");
    }
    return op;
}

ComplexMatrix build_operator(const OperatorSpec &spec, std::uint64_t seed) {
    const std::int64_t dim = total_dim(spec);
    switch (spec.kind) {
    case OperatorSpec::Kind::pauli: {
        require(static_cast<int>(spec.pauli.size()) == spec.qubits, "invalid_operator", "Pauli string length mismatch");
        ComplexMatrix op = ComplexMatrix::Identity(1, 1);
        for (char c : spec.pauli) {
            op = kron(op, pauli_matrix(c));
        }
        return op;
    }
    case OperatorSpec::Kind::trace: {
        const double w = spec.trace_weight;
        ComplexMatrix op = std::sqrt(1 - w * w) * z_on_first_site(spec);
        op.diagonal().array() += w;
        return op;
    }
    case OperatorSpec::Kind::gaussian: {
        std::mt19937_64 rng(seed);
        const ComplexMatrix g = ginibre(static_cast<int>(dim), rng);
        return project_traceless_normalized((g + g.adjoint()) / 2.0);
    }
    case OperatorSpec::Kind::random_traceless: {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> uniform(-1.0, 1.0);
        Eigen::VectorXd spectrum(dim);
        for (std::int64_t i = 0; i < dim; ++i) {
            spectrum(i) = uniform(rng);
        }
        const ComplexMatrix u = haar_sample(static_cast<int>(dim), splitmix64(seed));
        const ComplexMatrix op = u * spectrum.cast<Complex>().asDiagonal() * u.adjoint();
        return project_traceless_normalized(op);
    }
    case OperatorSpec::Kind::matrix: {
        const ComplexMatrix op = read_operator_file(spec.path);
        require(op.rows() == dim, "invalid_operator",
                "operator file dimension " + std::to_string(op.rows()) + " does not match q^N = " + std::to_string(dim));
        return project_traceless_normalized(op);
    }
    }
    fail("invalid_operator", "unknown operator kind");
}

MomentProfile<double> operator_moments(const ComplexMatrix &op, int max_order) {
    require(max_order >= 1, "invalid_argument", "moment order must be positive");
    const double dim = static_cast<double>(op.rows());
    std::vector<double> m;
    ComplexMatrix power = op;
    for (int l = 1; l <= max_order; ++l) {
        if (l > 1) {
            power = power * op;
        }
        m.push_back(power.trace().real() / dim);
    }
    return MomentProfile<double>(std::move(m));
}

}  // namespace loe
