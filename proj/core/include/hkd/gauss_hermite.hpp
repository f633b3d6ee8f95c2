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
 * Gauss-Hermite rules for the weight exp(-x^2), with log-weights so that
 * rules of several hundred nodes stay representable. Instantiated for
 * double and long double.
 */

#pragma once

#include <complex>
#include <vector>

namespace hkd {

template <typename Real>
struct GaussHermiteRule {
    std::vector<Real> nodes;       // ascending
    std::vector<Real> log_weights; // log of the weight for exp(-x^2)
};

/// N-point rule, exact for polynomials up to degree 2N - 1. Throws for N < 1.
template <typename Real = double>
GaussHermiteRule<Real> gauss_hermite(int n);

/**
 * Orthonormal Hermite polynomials p_0..p_{count-1} (w.r.t. exp(-x^2)) at a
 * complex point, as mantissa/log-scale pairs: p_n = mantissa[n] * exp(log_scale[n]).
 */
template <typename Real>
struct ScaledPolynomials {
    std::vector<std::complex<Real>> mantissa;
    std::vector<Real> log_scale;
};

template <typename Real>
ScaledPolynomials<Real> hermite_orthonormal(std::complex<Real> x, int count);

extern template GaussHermiteRule<double> gauss_hermite<double>(int);
extern template GaussHermiteRule<long double> gauss_hermite<long double>(int);
extern template ScaledPolynomials<double> hermite_orthonormal<double>(std::complex<double>, int);
extern template ScaledPolynomials<long double> hermite_orthonormal<long double>(
    std::complex<long double>, int);

} // namespace hkd
