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
 * Physical constants, the stochasticity parameter theta and conversion
 * between SI quantities and internal oscillator units (hbar = m = omega = 1).
 */

#pragma once

#include <limits>

namespace hkd {

/// Values of hbar and k_B used by every conversion. Defaults to CODATA 2018.
struct PhysicalConstants {
    double hbar = 1.054571817e-34; // J s
    double k_B = 1.380649e-23;     // J / K, exact since the 2019 SI

    static constexpr PhysicalConstants codata() { return {}; }
    /// hbar = k_B = 1, used by the dimensionless sweeps.
    static constexpr PhysicalConstants natural() { return {1.0, 1.0}; }

    /// Throws std::domain_error unless both constants are positive and finite.
    void validate() const;
};

/// Oscillator mass, angular frequency and bath temperature (T = 0 is the cold vacuum).
struct OscillatorParams {
    double mass = 1.0;
    double omega = 1.0;
    double temperature = 0.0;

    void validate() const;
};

/// theta value used for the exact zero-temperature regime.
inline constexpr double kThetaCold = std::numeric_limits<double>::infinity();

/**
 * Conversion factors from internal units back to the unit system defined by
 * a PhysicalConstants instance. All four derived scales follow from
 * (hbar, k_B, m, omega).
 */
struct Scales {
    double hbar = 1.0;
    double k_B = 1.0;
    double mass = 1.0;
    double omega = 1.0;

    static constexpr Scales internal() { return {}; }

    double action() const { return hbar; }
    double energy() const { return hbar * omega; }
    double length() const;   // sqrt(hbar / (m omega))
    double momentum() const; // sqrt(hbar m omega)
    /// hbar omega / k_B; T = temperature() / (2 theta).
    double temperature() const { return hbar * omega / k_B; }
    /// hbar / (2 k_B)
    double ratio() const { return hbar / (2.0 * k_B); }
};

struct InternalParams {
    double theta = kThetaCold;
    Scales scales;
};

/// hbar omega / (2 k_B T); kThetaCold when T == 0.
double theta(const OscillatorParams& params,
             const PhysicalConstants& constants = PhysicalConstants::codata());

/// Limiting ratio hbar / (2 k_B), in K s for CODATA constants.
double kappa(const PhysicalConstants& constants = PhysicalConstants::codata());

InternalParams to_internal(const OscillatorParams& params,
                           const PhysicalConstants& constants = PhysicalConstants::codata());
OscillatorParams from_internal(const InternalParams& internal);

/// Temperature that produces the given theta for the oscillator (inverse of theta()).
double temperature_for_theta(double theta, double omega,
                             const PhysicalConstants& constants = PhysicalConstants::codata());

/// Scales only (theta discarded); convenient when the state is built separately.
Scales make_scales(double mass, double omega,
                   const PhysicalConstants& constants = PhysicalConstants::codata());

} // namespace hkd
