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

/**
 * @file
 * Truncated number-basis representation of the oscillator operators.
 *
 * The ladder operators follow the convention
 *
 *   a = (1/2) (p / sqrt(var_p0) - i q / sqrt(var_q0))
 *
 * so that q = i sqrt(var_q0) (a - a^dag) and p = sqrt(var_p0) (a + a^dag).
 * Number state |n> therefore corresponds to the wave function i^n phi_n(q),
 * phi_n being the usual real Hermite functions; expand_state() accounts for
 * that phase.
 *
 * Truncation only corrupts the trailing rows and columns of products, so
 * identity checks are taken on the interior block (the last kInteriorTrim
 * rows/columns removed).
 */

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "hkd/constants.hpp"
#include "hkd/gaussian_state.hpp"

namespace hkd {

using FockMatrix = Eigen::MatrixXcd;
using FockCoefficients = Eigen::VectorXcd;

inline constexpr int kDefaultFockDim = 64;
inline constexpr int kInteriorTrim = 2;

struct FockOperator {
    std::string label;
    FockMatrix matrix;

    int dim() const { return static_cast<int>(matrix.rows()); }
};

/// Fock-basis expansion of a state together with the norm lost to truncation.
struct FockVector {
    FockCoefficients coefficients;
    double truncation_loss = 0.0;

    int dim() const { return static_cast<int>(coefficients.size()); }
};

struct LadderPair {
    FockOperator lower; // a or b
    FockOperator raise; // a^dag or b^dag
};

struct Quadratures {
    FockOperator q;
    FockOperator p;
};

struct Schrodingerian {
    FockOperator j;     // dp dq
    FockOperator sigma; // (1/2){dp, dq}
    FockOperator j0;    // (i/2)[p, q]
};

struct BogoliubovPair {
    std::complex<double> u;
    std::complex<double> v;
};

FockOperator identity(int dim);
LadderPair build_ladder(int dim);
FockOperator build_number_a(int dim);
Quadratures build_qp(int dim, const Scales& scales = Scales::internal());
/// p^2 / 2m + m omega^2 q^2 / 2 from the truncated q, p matrices.
FockOperator build_hamiltonian(int dim, const Scales& scales = Scales::internal());

/// Quasiparticle ladder operators built directly from q and p.
LadderPair build_b(int dim, const ThermalState& state);
/// b^dag b.
FockOperator build_number_b(int dim, const ThermalState& state);
/// The same operator written through p^2, q^2 and {p, q}:
/// (coth/4) [p^2/var_p0 - 2 coth^-1 (I + (alpha/hbar){p, q}) + q^2/var_q0].
FockOperator number_b_from_quadratures(int dim, const ThermalState& state);

/// Zero-mean states only (the cold and thermal vacua).
Schrodingerian build_schrodingerian(int dim, const ThermalState& state);

/**
 * Expansion coefficients c_n = <n|psi_T>, n < dim, by a 2*dim point
 * Gauss-Hermite rule on the rotated contour that turns phi_n psi_T into
 * polynomial * exp(-z^2). Throws QuadratureError if the coefficients carry
 * more than unit norm beyond rounding.
 */
FockVector expand_state(const ThermalState& state, int dim = kDefaultFockDim);

/// v^dag M v / v^dag v.
std::complex<double> expectation(const FockOperator& op, const FockVector& v);
std::complex<double> expectation(const FockMatrix& op, const FockCoefficients& v);

BogoliubovPair bogoliubov_coefficients(double theta);

/// Operator 2-norm of the leading (dim - trim) block.
double interior_norm(const FockMatrix& m, int trim = kInteriorTrim);
FockMatrix commutator(const FockMatrix& a, const FockMatrix& b);
FockMatrix anticommutator(const FockMatrix& a, const FockMatrix& b);

/// Interior-block norm of H - hbar omega coth^-1 [N_b + (1/2)(I + (alpha/hbar){p, q})].
double hamiltonian_identity_residual(int dim, const ThermalState& state);

/// Candidate ways of combining (u, v) with (a, a^dag), compared against b.
struct BogoliubovVariant {
    std::string form;
    double residual;
};

struct BogoliubovDiagnostic {
    std::vector<BogoliubovVariant> variants;
    std::optional<std::string> match; // first form with residual < tolerance
};

BogoliubovDiagnostic bogoliubov_diagnostic(int dim, const ThermalState& state,
                                           double tolerance = 1e-10);

class QuadratureError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace hkd
