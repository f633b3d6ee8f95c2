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

#include "hkd/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hkd {

namespace {

bool positive_finite(double x) { return std::isfinite(x) && x > 0.0; }

} // namespace

void PhysicalConstants::validate() const {
    if (!positive_finite(hbar)) {
        throw std::domain_error("hbar must be positive and finite");
    }
    if (!positive_finite(k_B)) {
        throw std::domain_error("k_B must be positive and finite");
    }
}

void OscillatorParams::validate() const {
    if (!positive_finite(mass)) {
        throw std::domain_error("mass must be positive, got " + std::to_string(mass));
    }
    if (!positive_finite(omega)) {
        throw std::domain_error("omega must be positive, got " + std::to_string(omega));
    }
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
        throw std::domain_error("temperature must be >= 0, got " + std::to_string(temperature));
    }
}

double Scales::length() const { return std::sqrt(hbar / (mass * omega)); }
double Scales::momentum() const { return std::sqrt(hbar * mass * omega); }

double theta(const OscillatorParams& params, const PhysicalConstants& constants) {
    params.validate();
    constants.validate();
    if (params.temperature == 0.0) {
        return kThetaCold;
    }
    return constants.hbar * params.omega / (2.0 * constants.k_B * params.temperature);
}

double kappa(const PhysicalConstants& constants) {
    constants.validate();
    return constants.hbar / (2.0 * constants.k_B);
}

Scales make_scales(double mass, double omega, const PhysicalConstants& constants) {
    OscillatorParams{mass, omega, 0.0}.validate();
    constants.validate();
    return Scales{constants.hbar, constants.k_B, mass, omega};
}

InternalParams to_internal(const OscillatorParams& params, const PhysicalConstants& constants) {
    return InternalParams{theta(params, constants),
                          make_scales(params.mass, params.omega, constants)};
}

OscillatorParams from_internal(const InternalParams& internal) {
    const Scales& s = internal.scales;
    if (!(internal.theta > 0.0)) {
        throw std::domain_error("theta must be positive");
    }
    const double T = std::isinf(internal.theta) ? 0.0 : s.temperature() / (2.0 * internal.theta);
    return OscillatorParams{s.mass, s.omega, T};
}

double temperature_for_theta(double theta, double omega, const PhysicalConstants& constants) {
    if (!(theta > 0.0)) {
        throw std::domain_error("theta must be positive");
    }
    return from_internal({theta, make_scales(1.0, omega, constants)}).temperature;
}

} // namespace hkd
