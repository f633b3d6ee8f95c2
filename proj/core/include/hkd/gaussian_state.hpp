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
 * Closed-form description of the oscillator vacua: the cold vacuum (the
 * real Gaussian ground state) and the thermal vacuum, a complex Gaussian
 * whose width and phase both depend on temperature.
 *
 *   psi_T(q) = [2 pi var_q]^(-1/4) exp{ -q^2 (1 - i alpha) / (4 var_q) }
 *
 * with var_q = var_q0 coth(theta), var_p = var_p0 coth(theta) and
 * alpha = 1 / sinh(theta). All quantities are reported in the unit system of
 * the Scales the state was built with.
 */

#pragma once

#include <complex>

#include "hkd/constants.hpp"

namespace hkd {

class ThermalState {
public:
    /// Cold vacuum; throws std::domain_error if params.temperature != 0.
    static ThermalState ground(const OscillatorParams& params,
                               const PhysicalConstants& constants = PhysicalConstants::codata());
    static ThermalState thermal(const OscillatorParams& params,
                                const PhysicalConstants& constants = PhysicalConstants::codata());
    /// State at a given theta (kThetaCold for T = 0); internal units unless scales given.
    static ThermalState at_theta(double theta, const Scales& scales = Scales::internal());

    double theta() const { return theta_; }
    double alpha() const { return alpha_; }
    double coth_theta() const { return coth_; }
    bool is_cold() const { return alpha_ == 0.0; }
    const Scales& scales() const { return scales_; }

    double hbar() const { return scales_.hbar; }
    double var_q0() const; // hbar / (2 m omega)
    double var_p0() const; // hbar m omega / 2
    double var_q() const { return var_q0() * coth_; }
    double var_p() const { return var_p0() * coth_; }

private:
    ThermalState(double theta, const Scales& scales);

    double theta_;
    double alpha_;
    double coth_;
    Scales scales_;
};

/// Amplitude psi_T(q); real and positive for the cold vacuum.
std::complex<double> psi(const ThermalState& state, double q);

double density_q(const ThermalState& state, double q);
double density_p(const ThermalState& state, double p);

/// <{p, q}> = hbar alpha.
double pq_anticommutator_mean(const ThermalState& state);

/// Mean of the Schrodingerian, sigma - i J0 with sigma = hbar alpha / 2 and J0 = hbar / 2.
std::complex<double> schrodinger_correlator(const ThermalState& state);

/// <a|b> in closed form. Both states must share mass, omega and hbar.
std::complex<double> overlap(const ThermalState& a, const ThermalState& b);

} // namespace hkd
