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

#include "hkd/grid.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <sstream>
#include <vector>

namespace hkd {

namespace {

using cd = std::complex<double>;

// Eighth-order centered first derivative, offsets 1..4.
constexpr std::array<double, 4> kStencil = {4.0 / 5.0, -1.0 / 5.0, 4.0 / 105.0, -1.0 / 280.0};
constexpr int kHalfWidth = static_cast<int>(kStencil.size());

// -rho ln rho with the log-of-zero tail dropped.
double neg_rho_log_rho(double rho) { return rho < 1e-300 ? 0.0 : -rho * std::log(rho); }

} // namespace

Grid Grid::for_state(const ThermalState& state, int n, double span_sigmas) {
    const double half = span_sigmas * std::sqrt(state.var_q());
    return Grid{-half, half, n};
}

void check_grid(const Grid& grid, const ThermalState& state) {
    const double need = kMinGridSpanSigmas * std::sqrt(state.var_q());
    if (grid.n < kMinGridPoints) {
        std::ostringstream msg;
        msg << "grid needs at least " << kMinGridPoints << " points, got " << grid.n;
        throw GridError(msg.str());
    }
    if (!(grid.q_max > grid.q_min) || grid.q_min > -need || grid.q_max < need) {
        std::ostringstream msg;
        msg << "grid [" << grid.q_min << ", " << grid.q_max << "] must span at least [" << -need
            << ", " << need << "]";
        throw GridError(msg.str());
    }
}

double apply_b_residual(const ThermalState& state, const Grid& grid, double alpha_scale) {
    check_grid(grid, state);
    const double h = grid.spacing();
    const double hbar = state.hbar();
    const double c = state.coth_theta();
    const double alpha = state.alpha();
    const double sq = std::sqrt(state.var_q0());
    const double sp = std::sqrt(state.var_p0());

    // Sampled wave function with kHalfWidth ghost points on each side.
    const double var_q = state.var_q();
    const double amp = std::pow(2.0 * std::numbers::pi * var_q, -0.25);
    const cd k = cd(1.0, -alpha * alpha_scale) / (4.0 * var_q);
    std::vector<cd> wave(grid.n + 2 * kHalfWidth);
    for (int i = 0; i < static_cast<int>(wave.size()); ++i) {
        const double q = grid.q_min + (i - kHalfWidth) * h;
        wave[i] = amp * std::exp(-k * (q * q));
    }

    const cd q_coeff = cd(0.0, -1.0) * cd(1.0, -alpha) / (sq * c);
    double res2 = 0.0;
    double norm2 = 0.0;
    for (int i = 0; i < grid.n; ++i) {
        const int j = i + kHalfWidth;
        cd deriv = 0.0;
        for (int s = 0; s < kHalfWidth; ++s) {
            deriv += kStencil[s] * (wave[j + s + 1] - wave[j - s - 1]);
        }
        deriv /= h;
        const cd p_psi = cd(0.0, -hbar) * deriv;
        const cd b_psi = 0.5 * std::sqrt(c) * (p_psi / sp + q_coeff * grid.at(i) * wave[j]);
        res2 += std::norm(b_psi);
        norm2 += std::norm(wave[j]);
    }
    return std::sqrt(res2 / norm2);
}

double entropy_qp(const ThermalState& state, double delta, int n) {
    if (!(delta > 0.0)) {
        throw std::domain_error("delta must be positive");
    }
    if (n < kMinGridPoints) {
        throw GridError("entropy quadrature needs at least " + std::to_string(kMinGridPoints) +
                        " points");
    }
    const double sq = std::sqrt(state.var_q0());
    const double sp = std::sqrt(state.var_p0());
    // Reduced densities have variance coth(theta) in both variables.
    const double half = kGridSpanSigmas * std::sqrt(state.coth_theta());
    const double h = 2.0 * half / (n - 1);

    double sum_q = 0.0;
    double sum_p = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = -half + i * h;
        const double w = (i == 0 || i == n - 1) ? 0.5 : 1.0;
        const double rho_q = std::norm(psi(state, x * sq)) * sq;
        const double rho_p = density_p(state, x * sp) * sp;
        sum_q += w * neg_rho_log_rho(rho_q);
        sum_p += w * neg_rho_log_rho(rho_p);
    }
    return h * (sum_q + sum_p) - std::log(delta);
}

double entropy_qp_closed_form(const ThermalState& state, double delta) {
    return 1.0 + std::log(2.0 * std::numbers::pi / delta) + std::log(state.coth_theta());
}

} // namespace hkd
