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
 * Thermodynamic macroparameters of an oscillator in equilibrium with the
 * quantum heat bath, all driven by the effective action
 * J_ef = (hbar/2) coth(theta).
 */

#pragma once

#include <complex>

#include "hkd/constants.hpp"
#include "hkd/fock.hpp"

namespace hkd {

struct MacroState {
    double U = 0.0;      // internal energy
    double E_Pl = 0.0;   // Planck energy
    double J_ef = 0.0;   // effective action
    double J0 = 0.0;     // hbar / 2
    double sigma = 0.0;  // external action, hbar alpha / 2
    std::complex<double> J_tilde; // sigma - i J0
    double T_ef = 0.0;   // effective temperature
    double S_ef = 0.0;   // effective entropy
    double Omega = 1.0;  // J_ef / J0
};

MacroState macro_state(const OscillatorParams& params,
                       const PhysicalConstants& constants = PhysicalConstants::codata());

/// (hbar omega / 2) coth(theta).
double planck_energy(const OscillatorParams& params,
                     const PhysicalConstants& constants = PhysicalConstants::codata());
/// hbar omega / (exp(hbar omega / k_B T) - 1) + hbar omega / 2, the other route.
double planck_energy_bose(const OscillatorParams& params,
                          const PhysicalConstants& constants = PhysicalConstants::codata());

/// The three contributions to <H> over the thermal vacuum:
/// prefactor * (<N_b> + 1/2 + (alpha / 2 hbar) <{p, q}>), prefactor = hbar omega / coth.
struct InternalEnergyTerms {
    double prefactor = 0.0;
    double quasiparticles = 0.0; // <N_b>, zero over the quasiparticle vacuum
    double vacuum = 0.5;
    double correlation = 0.0;    // (alpha / 2 hbar) <{p, q}> = alpha^2 / 2

    double total() const { return prefactor * (quasiparticles + vacuum + correlation); }
};

InternalEnergyTerms internal_energy_terms(const OscillatorParams& params,
                                          const PhysicalConstants& constants = PhysicalConstants::codata());
double internal_energy(const OscillatorParams& params,
                       const PhysicalConstants& constants = PhysicalConstants::codata());

/// (hbar / 2) coth(theta).
double effective_action(const OscillatorParams& params,
                        const PhysicalConstants& constants = PhysicalConstants::codata());
/// sqrt(sigma^2 + hbar^2 / 4).
double effective_action_from_correlator(const OscillatorParams& params,
                                        const PhysicalConstants& constants = PhysicalConstants::codata());

/// omega J_ef / k_B.
double effective_temperature(const OscillatorParams& params,
                             const PhysicalConstants& constants = PhysicalConstants::codata());

/// k_B (1 + ln(J_ef / J0)).
double effective_entropy(const OscillatorParams& params,
                         const PhysicalConstants& constants = PhysicalConstants::codata());

/// J_ef / S_ef = kappa coth(theta) / (1 + ln coth(theta)); requires T > 0.
double ratio_hkd(const OscillatorParams& params,
                 const PhysicalConstants& constants = PhysicalConstants::codata());

/// Low-temperature statistical-mechanics counterpart, built from
/// J = hbar e^{-x} and S = k_B x e^{-x}, x = hbar omega / k_B T.
struct QsmRatio {
    double x = 0.0;
    double J = 0.0;
    double S = 0.0;
    double ratio = 0.0; // T / omega
};

QsmRatio qsm_terms(const OscillatorParams& params,
                   const PhysicalConstants& constants = PhysicalConstants::codata());
/// T / omega; requires T > 0.
double ratio_qsm(const OscillatorParams& params,
                 const PhysicalConstants& constants = PhysicalConstants::codata());

struct ZeroLawVerdict {
    bool equilibrium = false;
    double imbalance = 0.0; // J_object - J_bath
};

/// Equilibrium iff |J_object - J_bath| <= delta_J.
ZeroLawVerdict zero_law_check(double J_object, double J_bath, double delta_J);

inline constexpr double kMaxTruncationLoss = 1e-8;

/**
 * Standard deviation sqrt(<j^dag j> - |<j>|^2) of the Schrodingerian over the
 * thermal vacuum, evaluated in the truncated number basis. Throws
 * std::runtime_error if the expansion loses more than max_loss of its norm.
 */
double action_fluctuation(const ThermalState& state, int dim = kDefaultFockDim,
                          double max_loss = kMaxTruncationLoss);

} // namespace hkd
