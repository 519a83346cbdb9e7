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

#include <string>
#include <vector>

#include <gmpxx.h>

#include "loe/error.hpp"
#include "loe/nc_lattice.hpp"
#include "loe/permutation.hpp"

namespace loe {

/// Normalized single-operator moments <O^l> = tr[O^l]/D for l = 1..L.
/// Scalar is mpq_class for the exact engines or double for sampled data;
/// the two are never mixed within a call.
template <class Scalar>
class MomentProfile {
  public:
    MomentProfile() = default;
    /// moments[0] is <O>, moments[l-1] is <O^l>.
    explicit MomentProfile(std::vector<Scalar> moments) : m_(std::move(moments)) {}

    int max_order() const { return static_cast<int>(m_.size()); }
    /// <O^l>; l = 0 gives 1.
    Scalar at(int l) const {
        if (l == 0) {
            return Scalar(1);
        }
        require(l >= 1 && l <= max_order(), "profile_too_short",
                "moment of order " + std::to_string(l) + " requested from a profile of length " +
                    std::to_string(max_order()));
        return m_[static_cast<std::size_t>(l - 1)];
    }
    const std::vector<Scalar> &values() const { return m_; }
    bool normalized() const { return max_order() >= 2 && m_[1] == Scalar(1); }
    bool traceless() const { return max_order() >= 1 && m_[0] == Scalar(0); }

  private:
    std::vector<Scalar> m_;
};

/// Free cumulants kappa_1..kappa_L.
template <class Scalar>
class CumulantProfile {
  public:
    CumulantProfile() = default;
    explicit CumulantProfile(std::vector<Scalar> kappa) : k_(std::move(kappa)) {}

    int max_order() const { return static_cast<int>(k_.size()); }
    Scalar at(int n) const {
        require(n >= 1 && n <= max_order(), "profile_too_short",
                "cumulant of order " + std::to_string(n) + " requested from a profile of length " +
                    std::to_string(max_order()));
        return k_[static_cast<std::size_t>(n - 1)];
    }
    const std::vector<Scalar> &values() const { return k_; }

  private:
    std::vector<Scalar> k_;
};

inline constexpr int kMaxCumulantOrder = 10;

/// <O>_pi: product of <O^{|c|}> over the cycles c of pi.
template <class Scalar>
Scalar moment_of_cycle_type(const MomentProfile<Scalar> &profile, const CycleType &type) {
    Scalar value(1);
    for (int len : type.parts()) {
        value *= profile.at(len);
    }
    return value;
}

template <class Scalar>
Scalar moment_of_permutation(const MomentProfile<Scalar> &profile, const Permutation &pi) {
    return moment_of_cycle_type(profile, pi.cycle_type());
}

/// kappa_pi: product of kappa_{|c|} over the cycles c of pi.
template <class Scalar>
Scalar cumulant_of_cycle_type(const CumulantProfile<Scalar> &cumulants, const CycleType &type) {
    Scalar value(1);
    for (int len : type.parts()) {
        value *= cumulants.at(len);
    }
    return value;
}

template <class Scalar>
Scalar cumulant_of_permutation(const CumulantProfile<Scalar> &cumulants, const Permutation &pi) {
    return cumulant_of_cycle_type(cumulants, pi.cycle_type());
}

/// kappa_n = sum over sigma in NC(n) of <O>_sigma mu(sigma, gamma).
///
/// The Mobius factor is the signed-Catalan product over the cycles of
/// sigma^{-1} gamma (the Kreweras complement). Writing it as mu(gamma, sigma)
/// gives the same number, since gamma^{-1} sigma is the inverse of
/// sigma^{-1} gamma and has the same cycle type.
template <class Scalar>
CumulantProfile<Scalar> cumulants_from_moments(const MomentProfile<Scalar> &profile) {
    const int order = profile.max_order();
    require(order <= kMaxCumulantOrder, "guard",
            "cumulant conversion limited to order " + std::to_string(kMaxCumulantOrder));
    std::vector<Scalar> kappa;
    for (int n = 1; n <= order; ++n) {
        const Permutation gamma = Permutation::full_cycle(n);
        Scalar sum(0);
        for (const auto &sigma : enumerate_nc(n).elements) {
            sum += moment_of_permutation(profile, sigma) * Scalar(static_cast<long>(mobius(sigma, gamma)));
        }
        kappa.push_back(sum);
    }
    return CumulantProfile<Scalar>(std::move(kappa));
}

/// m_n = sum over pi in NC(n) of kappa_pi.
template <class Scalar>
MomentProfile<Scalar> moments_from_cumulants(const CumulantProfile<Scalar> &cumulants) {
    const int order = cumulants.max_order();
    require(order <= kMaxCumulantOrder, "guard",
            "cumulant conversion limited to order " + std::to_string(kMaxCumulantOrder));
    std::vector<Scalar> m;
    for (int n = 1; n <= order; ++n) {
        Scalar sum(0);
        for (const auto &pi : enumerate_nc(n).elements) {
            sum += cumulant_of_permutation(cumulants, pi);
        }
        m.push_back(sum);
    }
    return MomentProfile<Scalar>(std::move(m));
}

/// Haar value of the k-point correlator D^{-1} tr[(U^dag O U X)^k]:
/// sum over sigma in NC(k) of kappa_sigma(O) <X>_{sigma^{-1} gamma}.
template <class Scalar>
Scalar haar_otoc(const CumulantProfile<Scalar> &op_cumulants, const MomentProfile<Scalar> &x_moments, int k) {
    require(k >= 1, "invalid_order", "OTOC order must be positive");
    const Permutation gamma = Permutation::full_cycle(k);
    Scalar sum(0);
    for (const auto &sigma : enumerate_nc(k).elements) {
        sum += cumulant_of_permutation(op_cumulants, sigma) *
               moment_of_permutation(x_moments, compose(sigma.inverse(), gamma));
    }
    return sum;
}

/// Moments of a single-site Pauli string: odd orders 0, even orders 1.
template <class Scalar>
MomentProfile<Scalar> pauli_moments(int max_order) {
    std::vector<Scalar> m;
    for (int l = 1; l <= max_order; ++l) {
        m.push_back(Scalar(l % 2 == 0 ? 1 : 0));
    }
    return MomentProfile<Scalar>(std::move(m));
}

/// Moments of the standard semicircle: Catalan numbers at even orders.
template <class Scalar>
MomentProfile<Scalar> semicircle_moments(int max_order) {
    std::vector<Scalar> m;
    for (int l = 1; l <= max_order; ++l) {
        m.push_back(l % 2 == 0 ? Scalar(static_cast<long>(catalan(l / 2))) : Scalar(0));
    }
    return MomentProfile<Scalar>(std::move(m));
}

}  // namespace loe
