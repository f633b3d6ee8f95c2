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

#include "hkd/gaussian_state.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace hkd {

namespace {

using cd = std::complex<double>;

// Complex Gaussian exponent k in psi = A exp(-k q^2).
cd exponent(const ThermalState& s) { return cd(1.0, -s.alpha()) / (4.0 * s.var_q()); }

double amplitude(const ThermalState& s) {
    return std::pow(2.0 * std::numbers::pi * s.var_q(), -0.25);
}

} // namespace

ThermalState::ThermalState(double theta, const Scales& scales) : theta_(theta), scales_(scales) {
    if (!(theta > 0.0)) {
        throw std::domain_error("theta must be positive");
    }
    if (std::isinf(theta)) {
        alpha_ = 0.0;
        coth_ = 1.0;
    } else {
        // sinh overflows to inf for theta > ~710, which gives alpha == 0 exactly.
        alpha_ = 1.0 / std::sinh(theta);
        coth_ = 1.0 / std::tanh(theta);
    }
}

ThermalState ThermalState::ground(const OscillatorParams& params,
                                  const PhysicalConstants& constants) {
    params.validate();
    if (params.temperature != 0.0) {
        throw std::domain_error("ground state requires T = 0");
    }
    return thermal(params, constants);
}

ThermalState ThermalState::thermal(const OscillatorParams& params,
                                   const PhysicalConstants& constants) {
    const InternalParams ip = to_internal(params, constants);
    return ThermalState(ip.theta, ip.scales);
}

ThermalState ThermalState::at_theta(double theta, const Scales& scales) {
    return ThermalState(theta, scales);
}

double ThermalState::var_q0() const {
    return scales_.hbar / (2.0 * scales_.mass * scales_.omega);
}

double ThermalState::var_p0() const {
    return scales_.hbar * scales_.mass * scales_.omega / 2.0;
}

std::complex<double> psi(const ThermalState& state, double q) {
    const double a = amplitude(state);
    if (state.is_cold()) {
        return {a * std::exp(-q * q / (4.0 * state.var_q())), 0.0};
    }
    return a * std::exp(-exponent(state) * (q * q));
}

double density_q(const ThermalState& state, double q) {
    const double v = state.var_q();
    return std::exp(-q * q / (2.0 * v)) / std::sqrt(2.0 * std::numbers::pi * v);
}

double density_p(const ThermalState& state, double p) {
    const double v = state.var_p();
    return std::exp(-p * p / (2.0 * v)) / std::sqrt(2.0 * std::numbers::pi * v);
}

double pq_anticommutator_mean(const ThermalState& state) { return state.hbar() * state.alpha(); }

std::complex<double> schrodinger_correlator(const ThermalState& state) {
    return {0.5 * state.hbar() * state.alpha(), -0.5 * state.hbar()};
}

std::complex<double> overlap(const ThermalState& a, const ThermalState& b) {
    const Scales& sa = a.scales();
    const Scales& sb = b.scales();
    if (sa.mass != sb.mass || sa.omega != sb.omega || sa.hbar != sb.hbar) {
        throw std::invalid_argument("overlap requires states of the same oscillator");
    }
    // int conj(A_a e^{-k_a q^2}) A_b e^{-k_b q^2} dq = A_a A_b sqrt(pi / (conj(k_a) + k_b))
    const cd k = std::conj(exponent(a)) + exponent(b);
    return amplitude(a) * amplitude(b) * std::sqrt(std::numbers::pi / k);
}

} // namespace hkd
