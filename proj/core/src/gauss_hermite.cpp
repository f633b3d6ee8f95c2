// Copyright 2026 The hkdlab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hkd/gauss_hermite.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace hkd {

namespace {

template <typename Real>
struct HermiteFunctionSums {
    Real sum_sq = 0;
    Real last = 0; // psi_n
    Real prev = 0; // psi_{n-1}
};

// Normalized Hermite functions psi_k(x) = p_k(x) exp(-x^2/2): sum of squares
// over k < n, plus psi_n and psi_{n-1} for the Newton step.
template <typename Real>
HermiteFunctionSums<Real> hermite_functions(Real x, int n) {
    using std::exp;
    using std::pow;
    using std::sqrt;
    HermiteFunctionSums<Real> out;
    Real prev = 0;
    Real cur = pow(std::numbers::pi_v<Real>, Real(-0.25)) * exp(Real(-0.5) * x * x);
    for (int k = 0; k < n; ++k) {
        out.sum_sq += cur * cur;
        const Real next = sqrt(Real(2) / (k + 1)) * x * cur - sqrt(Real(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
    }
    out.last = cur;
    out.prev = prev;
    return out;
}

} // namespace

template <typename Real>
GaussHermiteRule<Real> gauss_hermite(int n) {
    if (n < 1) {
        throw std::invalid_argument("Gauss-Hermite rule needs at least one node");
    }
    // Golub-Welsch starting guesses from the Jacobi matrix, refined by Newton in Real.
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(n - 1);
    for (int k = 1; k < n; ++k) {
        sub[k - 1] = std::sqrt(0.5 * k);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

    GaussHermiteRule<Real> rule;
    rule.nodes.resize(n);
    rule.log_weights.resize(n);
    for (int i = 0; i < n; ++i) {
        Real x = solver.eigenvalues()[i];
        // psi_n' = sqrt(2n) psi_{n-1} - x psi_n
        for (int it = 0; it < 4; ++it) {
            const auto h = hermite_functions(x, n);
            const Real deriv = std::sqrt(Real(2) * n) * h.prev - x * h.last;
            if (deriv == 0) {
                break;
            }
            x -= h.last / deriv;
        }
        rule.nodes[i] = x;
        // Christoffel numbers: w = exp(-x^2) / sum_k psi_k(x)^2. psi_0 underflows in
        // double past |x| ~ 38, i.e. for rules beyond ~700 nodes.
        rule.log_weights[i] = -x * x - std::log(hermite_functions(x, n).sum_sq);
    }
    return rule;
}

template <typename Real>
ScaledPolynomials<Real> hermite_orthonormal(std::complex<Real> x, int count) {
    constexpr Real kRescaleAbove = Real(1e150);
    ScaledPolynomials<Real> out;
    out.mantissa.resize(count);
    out.log_scale.resize(count);
    std::complex<Real> prev = 0;
    std::complex<Real> cur = std::pow(std::numbers::pi_v<Real>, Real(-0.25));
    Real scale = 0;
    for (int k = 0; k < count; ++k) {
        out.mantissa[k] = cur;
        out.log_scale[k] = scale;
        const std::complex<Real> next =
            std::sqrt(Real(2) / (k + 1)) * x * cur - std::sqrt(Real(k) / (k + 1)) * prev;
        prev = cur;
        cur = next;
        if (std::abs(cur) > kRescaleAbove) {
            prev /= kRescaleAbove;
            cur /= kRescaleAbove;
            scale += std::log(kRescaleAbove);
        }
    }
    return out;
}

template GaussHermiteRule<double> gauss_hermite<double>(int);
template GaussHermiteRule<long double> gauss_hermite<long double>(int);
template ScaledPolynomials<double> hermite_orthonormal<double>(std::complex<double>, int);
template ScaledPolynomials<long double> hermite_orthonormal<long double>(std::complex<long double>,
                                                                         int);

} // namespace hkd
