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
 * Position-space oracle. Works on sampled wave functions only and never
 * touches the number-basis machinery, so its results are an independent
 * check of the Fock-space ones.
 */

#pragma once

#include <stdexcept>

#include "hkd/gaussian_state.hpp"

namespace hkd {

inline constexpr int kMinGridPoints = 128;
inline constexpr double kGridSpanSigmas = 10.0;  // default half-span in units of sqrt(var_q)
inline constexpr double kMinGridSpanSigmas = 8.0;

/// Uniform grid including both end points.
struct Grid {
    double q_min = -1.0;
    double q_max = 1.0;
    int n = kMinGridPoints;

    double spacing() const { return (q_max - q_min) / (n - 1); }
    double at(int i) const { return q_min + i * spacing(); }

    /// Symmetric grid of half-width span_sigmas * sqrt(var_q).
    static Grid for_state(const ThermalState& state, int n, double span_sigmas = kGridSpanSigmas);
};

class GridError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Throws GridError (naming the required span) when the grid is too coarse or narrow.
void check_grid(const Grid& grid, const ThermalState& state);

/**
 * ||b psi_T|| / ||psi_T|| on the grid, with p = -i hbar d/dq taken by an
 * eighth-order centered difference. At T = 0 b reduces to a.
 *
 * alpha_scale multiplies the phase parameter of the sampled wave function
 * (not of the operator); values other than 1 probe that the residual
 * actually sees the phase.
 */
double apply_b_residual(const ThermalState& state, const Grid& grid, double alpha_scale = 1.0);

/// Constant delta of the coordinate-momentum entropy; 2 pi gives the effective entropy.
inline constexpr double kDefaultEntropyDelta = 6.283185307179586476925286766559;

/**
 * Coordinate-momentum entropy in units of k_B, by trapezoidal quadrature of
 * -rho ln rho over the reduced variables q / sqrt(var_q0) and p / sqrt(var_p0),
 * minus ln(delta).
 */
double entropy_qp(const ThermalState& state, double delta = kDefaultEntropyDelta,
                  int n = 4096);

/// Closed form 1 + ln(2 pi / delta) + ln coth(theta).
double entropy_qp_closed_form(const ThermalState& state, double delta = kDefaultEntropyDelta);

} // namespace hkd
