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

#include "hkd/macro.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hkd/gaussian_state.hpp"

namespace hkd {

namespace {

void require_warm(const OscillatorParams& params) {
    params.validate();
    if (!(params.temperature > 0.0)) {
        throw std::domain_error("ratio requires T > 0");
    }
}

} // namespace

double planck_energy(const OscillatorParams& params, const PhysicalConstants& constants) {
    const ThermalState s = ThermalState::thermal(params, constants);
    return 0.5 * s.scales().energy() * s.coth_theta();
}

double planck_energy_bose(const OscillatorParams& params, const PhysicalConstants& constants) {
    const double th = theta(params, constants);
    const double e = constants.hbar * params.omega;
    // expm1 keeps the classical limit accurate; exp(2 theta) = inf gives the vacuum term.
    return e / std::expm1(2.0 * th) + 0.5 * e;
}

InternalEnergyTerms internal_energy_terms(const OscillatorParams& params,
                                          const PhysicalConstants& constants) {
    const ThermalState s = ThermalState::thermal(params, constants);
    InternalEnergyTerms t;
    t.prefactor = s.scales().energy() / s.coth_theta();
    t.quasiparticles = 0.0;
    t.vacuum = 0.5;
    t.correlation = s.alpha() / (2.0 * s.hbar()) * pq_anticommutator_mean(s);
    return t;
}

double internal_energy(const OscillatorParams& params, const PhysicalConstants& constants) {
    return internal_energy_terms(params, constants).total();
}

double effective_action(const OscillatorParams& params, const PhysicalConstants& constants) {
    const ThermalState s = ThermalState::thermal(params, constants);
    return 0.5 * s.hbar() * s.coth_theta();
}

double effective_action_from_correlator(const OscillatorParams& params,
                                        const PhysicalConstants& constants) {
    return std::abs(schrodinger_correlator(ThermalState::thermal(params, constants)));
}

double effective_temperature(const OscillatorParams& params, const PhysicalConstants& constants) {
    return params.omega * effective_action(params, constants) / constants.k_B;
}

double effective_entropy(const OscillatorParams& params, const PhysicalConstants& constants) {
    const double J0 = 0.5 * constants.hbar;
    return constants.k_B * (1.0 + std::log(effective_action(params, constants) / J0));
}

double ratio_hkd(const OscillatorParams& params, const PhysicalConstants& constants) {
    require_warm(params);
    const double c = ThermalState::thermal(params, constants).coth_theta();
    return kappa(constants) * c / (1.0 + std::log(c));
}

QsmRatio qsm_terms(const OscillatorParams& params, const PhysicalConstants& constants) {
    require_warm(params);
    QsmRatio r;
    r.x = constants.hbar * params.omega / (constants.k_B * params.temperature);
    const double boltzmann = std::exp(-r.x);
    r.J = constants.hbar * boltzmann;
    r.S = constants.k_B * r.x * boltzmann;
    // The Boltzmann factors cancel; J / S underflows to 0/0 for large x.
    r.ratio = params.temperature / params.omega;
    return r;
}

double ratio_qsm(const OscillatorParams& params, const PhysicalConstants& constants) {
    return qsm_terms(params, constants).ratio;
}

MacroState macro_state(const OscillatorParams& params, const PhysicalConstants& constants) {
    const ThermalState s = ThermalState::thermal(params, constants);
    MacroState m;
    m.E_Pl = planck_energy(params, constants);
    m.U = internal_energy(params, constants);
    m.J_ef = effective_action(params, constants);
    m.J0 = 0.5 * constants.hbar;
    m.J_tilde = schrodinger_correlator(s);
    m.sigma = m.J_tilde.real();
    m.T_ef = effective_temperature(params, constants);
    m.Omega = m.J_ef / m.J0;
    m.S_ef = effective_entropy(params, constants);
    return m;
}

ZeroLawVerdict zero_law_check(double J_object, double J_bath, double delta_J) {
    if (!(J_object > 0.0) || !(J_bath > 0.0)) {
        throw std::domain_error("actions must be positive");
    }
    if (!(delta_J >= 0.0)) {
        throw std::domain_error("delta_J must be non-negative");
    }
    const double imbalance = J_object - J_bath;
    return {std::abs(imbalance) <= delta_J, imbalance};
}

double action_fluctuation(const ThermalState& state, int dim, double max_loss) {
    if (dim < 32) {
        throw std::invalid_argument("action fluctuation needs dim >= 32");
    }
    const FockVector v = expand_state(state, dim);
    if (v.truncation_loss > max_loss) {
        throw std::runtime_error("truncation loss " + std::to_string(v.truncation_loss) +
                                 " above " + std::to_string(max_loss) + " at dim " +
                                 std::to_string(dim));
    }
    const FockMatrix& j = build_schrodingerian(dim, state).j.matrix;
    const double second = expectation(j.adjoint() * j, v.coefficients).real();
    const double first = std::norm(expectation(j, v.coefficients));
    return std::sqrt(std::max(0.0, second - first));
}

} // namespace hkd
