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

#include "hkd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "hkd/gaussian_state.hpp"
#include "hkd/macro.hpp"

namespace hkd {

namespace {

using cd = std::complex<double>;

struct Check {
    const char* name;
    const char* relation;
    Oracle oracle;
    double tolerance;
    // Residual at one theta.
    std::function<double(const ThermalState&, const VerifyOptions&)> residual;
};

double rel(double value, double expected) { return std::abs(value - expected) / std::abs(expected); }

double hermitian_defect(const FockMatrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

OscillatorParams natural_params(const ThermalState& s) {
    return from_internal({s.theta(), s.scales()});
}

const std::vector<Check>& registry() {
    static const std::vector<Check> checks = {
        {"analytic.bogoliubov_canonicity", "|u|^2 - |v|^2 = 1", Oracle::analytic, 1e-12,
         [](const ThermalState& s, const VerifyOptions&) {
             const BogoliubovPair uv = bogoliubov_coefficients(s.theta());
             return std::abs(std::norm(uv.u) - std::norm(uv.v) - 1.0);
         }},
        {"analytic.energy_chain", "U = E_Pl = omega J_ef = k_B T_ef", Oracle::analytic, 1e-12,
         [](const ThermalState& s, const VerifyOptions&) {
             const OscillatorParams p = natural_params(s);
             const auto k = PhysicalConstants::natural();
             const double E = planck_energy(p, k);
             return std::max({rel(internal_energy(p, k), E), rel(planck_energy_bose(p, k), E),
                              rel(p.omega * effective_action(p, k), E),
                              rel(k.k_B * effective_temperature(p, k), E)});
         }},
        {"analytic.entropy_effective", "S_ef = k_B (1 + ln(J_ef / J0)) = S_qp(delta = 2 pi)",
         Oracle::analytic, 1e-12,
         [](const ThermalState& s, const VerifyOptions&) {
             const OscillatorParams p = natural_params(s);
             const double S = effective_entropy(p, PhysicalConstants::natural());
             return rel(S, entropy_qp_closed_form(s, 2.0 * std::numbers::pi));
         }},
        {"analytic.sur_saturation", "var_q var_p = sigma^2 + hbar^2 / 4", Oracle::analytic, 1e-12,
         [](const ThermalState& s, const VerifyOptions&) {
             const double sigma = schrodinger_correlator(s).real();
             const double h2 = s.hbar() * s.hbar() / 4.0;
             return rel(s.var_q() * s.var_p() - sigma * sigma, h2);
         }},
        {"fock.anticommutator_mean", "<{p, q}> = hbar alpha", Oracle::fock, 1e-7,
         [](const ThermalState& s, const VerifyOptions& o) {
             const Quadratures qp = build_qp(o.dim, s.scales());
             const FockVector v = expand_state(s, o.dim);
             const cd m = expectation(anticommutator(qp.p.matrix, qp.q.matrix), v.coefficients);
             return std::abs(m - pq_anticommutator_mean(s)) / s.hbar();
         }},
        {"fock.b_annihilates_thermal_vacuum", "b |psi_T> = 0", Oracle::fock, 1e-8,
         [](const ThermalState& s, const VerifyOptions& o) {
             const FockVector v = expand_state(s, o.dim);
             const FockCoefficients r = build_b(o.dim, s).lower.matrix * v.coefficients;
             return r.head(o.dim - kInteriorTrim).norm() / v.coefficients.norm();
         }},
        {"fock.b_commutator", "[b, b^dag] = I", Oracle::fock, 1e-9,
         [](const ThermalState& s, const VerifyOptions& o) {
             const LadderPair b = build_b(o.dim, s);
             return interior_norm(commutator(b.lower.matrix, b.raise.matrix) -
                                  identity(o.dim).matrix);
         }},
        {"fock.canonical_commutator", "[q, p] = i hbar I", Oracle::fock, 1e-10,
         [](const ThermalState& s, const VerifyOptions& o) {
             const Quadratures qp = build_qp(o.dim, s.scales());
             const FockMatrix target = cd(0.0, s.hbar()) * identity(o.dim).matrix;
             return interior_norm(commutator(qp.q.matrix, qp.p.matrix) - target) / s.hbar();
         }},
        {"fock.cold_vacuum_annihilation", "a |psi_0> = 0 and psi_0 = |0>", Oracle::fock, 1e-12,
         [](const ThermalState& s, const VerifyOptions& o) {
             const ThermalState cold = ThermalState::at_theta(kThetaCold, s.scales());
             const FockVector v = expand_state(cold, o.dim);
             const FockCoefficients r = build_ladder(o.dim).lower.matrix * v.coefficients;
             return std::max(r.norm(), std::abs(v.coefficients[0] - 1.0));
         }},
        {"fock.ground_energy", "<0| H |0> = hbar omega / 2", Oracle::fock, 1e-12,
         [](const ThermalState& s, const VerifyOptions& o) {
             const Scales& sc = s.scales();
             return rel(build_hamiltonian(o.dim, sc).matrix(0, 0).real(), 0.5 * sc.energy());
         }},
        {"fock.hamiltonian_number_form", "H = hbar omega (N_a + I / 2)", Oracle::fock, 1e-10,
         [](const ThermalState& s, const VerifyOptions& o) {
             const Scales& sc = s.scales();
             const FockMatrix rhs =
                 sc.energy() * (build_number_a(o.dim).matrix + 0.5 * identity(o.dim).matrix);
             return interior_norm(build_hamiltonian(o.dim, sc).matrix - rhs) / sc.energy();
         }},
        {"fock.hamiltonian_quasiparticle_form",
         "H = hbar omega coth^-1 [N_b + (I + (alpha / hbar){p, q}) / 2]", Oracle::fock, 1e-8,
         [](const ThermalState& s, const VerifyOptions& o) {
             return hamiltonian_identity_residual(o.dim, s) / s.scales().energy();
         }},
        {"fock.hermiticity", "q, p, H, N_a, N_b, sigma, j0 Hermitian", Oracle::fock, 1e-12,
         [](const ThermalState& s, const VerifyOptions& o) {
             const Quadratures qp = build_qp(o.dim, s.scales());
             const Schrodingerian j = build_schrodingerian(o.dim, s);
             return std::max({hermitian_defect(qp.q.matrix), hermitian_defect(qp.p.matrix),
                              hermitian_defect(build_hamiltonian(o.dim, s.scales()).matrix),
                              hermitian_defect(build_number_a(o.dim).matrix),
                              hermitian_defect(build_number_b(o.dim, s).matrix),
                              hermitian_defect(j.sigma.matrix), hermitian_defect(j.j0.matrix)});
         }},
        {"fock.internal_energy", "<psi_T| H |psi_T> = (hbar omega / 2) coth", Oracle::fock, 1e-8,
         [](const ThermalState& s, const VerifyOptions& o) {
             const FockVector v = expand_state(s, o.dim);
             const double U = expectation(build_hamiltonian(o.dim, s.scales()), v).real();
             return rel(U, 0.5 * s.scales().energy() * s.coth_theta());
         }},
        {"fock.minimum_action", "j0 = (i/2)[p, q] = (hbar / 2) I", Oracle::fock, 1e-10,
         [](const ThermalState& s, const VerifyOptions& o) {
             const Schrodingerian j = build_schrodingerian(o.dim, s);
             return interior_norm(j.j0.matrix - 0.5 * s.hbar() * identity(o.dim).matrix) / s.hbar();
         }},
        {"fock.number_b_quadrature_form", "b^dag b = (coth/4)[P^2 - 2 coth^-1 (I + (alpha/hbar){p,q}) + Q^2]",
         Oracle::fock, 1e-9,
         [](const ThermalState& s, const VerifyOptions& o) {
             return interior_norm(build_number_b(o.dim, s).matrix -
                                  number_b_from_quadratures(o.dim, s).matrix);
         }},
        {"fock.quasiparticle_vacuum_number", "<psi_T| N_b |psi_T> = 0", Oracle::fock, 1e-8,
         [](const ThermalState& s, const VerifyOptions& o) {
             return std::abs(expectation(build_number_b(o.dim, s), expand_state(s, o.dim)));
         }},
        {"fock.schrodingerian_decomposition", "j = sigma - i j0", Oracle::fock, 1e-12,
         [](const ThermalState& s, const VerifyOptions& o) {
             const Schrodingerian j = build_schrodingerian(o.dim, s);
             const FockMatrix d = j.j.matrix - (j.sigma.matrix - cd(0.0, 1.0) * j.j0.matrix);
             return d.cwiseAbs().maxCoeff() / s.hbar();
         }},
        {"fock.sigma_mean", "<sigma> = hbar alpha / 2", Oracle::fock, 1e-8,
         [](const ThermalState& s, const VerifyOptions& o) {
             const cd m = expectation(build_schrodingerian(o.dim, s).sigma, expand_state(s, o.dim));
             return std::abs(m - 0.5 * s.hbar() * s.alpha()) / s.hbar();
         }},
        {"fock.sur_saturation", "<dq^2><dp^2> = |<j>|^2", Oracle::fock, 1e-7,
         [](const ThermalState& s, const VerifyOptions& o) {
             const Quadratures qp = build_qp(o.dim, s.scales());
             const FockVector v = expand_state(s, o.dim);
             const double vq = expectation(qp.q.matrix * qp.q.matrix, v.coefficients).real();
             const double vp = expectation(qp.p.matrix * qp.p.matrix, v.coefficients).real();
             const double j2 = std::norm(expectation(build_schrodingerian(o.dim, s).j, v));
             return rel(vq * vp, j2);
         }},
        {"fock.truncation_loss", "1 - sum |c_n|^2 = 0", Oracle::fock, 1e-10,
         [](const ThermalState& s, const VerifyOptions& o) {
             return expand_state(s, o.dim).truncation_loss;
         }},
        {"fock.variances", "<q^2> = var_q and <p^2> = var_p", Oracle::fock, 1e-7,
         [](const ThermalState& s, const VerifyOptions& o) {
             const Quadratures qp = build_qp(o.dim, s.scales());
             const FockVector v = expand_state(s, o.dim);
             const double vq = expectation(qp.q.matrix * qp.q.matrix, v.coefficients).real();
             const double vp = expectation(qp.p.matrix * qp.p.matrix, v.coefficients).real();
             return std::max(rel(vq, s.var_q()), rel(vp, s.var_p()));
         }},
        {"grid.a_annihilates_cold_vacuum", "a psi_0(q) = 0", Oracle::grid, 1e-7,
         [](const ThermalState& s, const VerifyOptions& o) {
             const ThermalState cold = ThermalState::at_theta(kThetaCold, s.scales());
             return apply_b_residual(cold, Grid::for_state(cold, o.grid_n));
         }},
        {"grid.b_annihilates_thermal_vacuum", "b psi_T(q) = 0", Oracle::grid, 1e-7,
         [](const ThermalState& s, const VerifyOptions& o) {
             return apply_b_residual(s, Grid::for_state(s, o.grid_n));
         }},
        {"grid.entropy_delta_shift", "S_qp(2 pi e) = S_qp(2 pi) - k_B", Oracle::grid, 1e-8,
         [](const ThermalState& s, const VerifyOptions& o) {
             const double two_pi = 2.0 * std::numbers::pi;
             return std::abs(entropy_qp(s, two_pi * std::numbers::e, o.grid_n) -
                             (entropy_qp(s, two_pi, o.grid_n) - 1.0));
         }},
        {"grid.entropy_qp", "-int rho ln rho (q, p) - ln delta = 1 + ln(2 pi / delta) + ln coth",
         Oracle::grid, 1e-8,
         [](const ThermalState& s, const VerifyOptions& o) {
             return std::abs(entropy_qp(s, o.delta, o.grid_n) - entropy_qp_closed_form(s, o.delta));
         }},
        {"grid.normalization", "int |psi_T|^2 dq = 1", Oracle::grid, 1e-10,
         [](const ThermalState& s, const VerifyOptions& o) {
             const Grid g = Grid::for_state(s, o.grid_n);
             double sum = 0.0;
             for (int i = 0; i < g.n; ++i) {
                 const double w = (i == 0 || i == g.n - 1) ? 0.5 : 1.0;
                 sum += w * std::norm(psi(s, g.at(i)));
             }
             return std::abs(sum * g.spacing() - 1.0);
         }},
    };
    return checks;
}

VerificationReport run_check(const Check& check, const VerifyOptions& options) {
    VerificationReport report;
    report.identity = check.name;
    report.relation = check.relation;
    report.oracle = check.oracle;
    report.tolerance = check.tolerance;
    try {
        double worst = -1.0;
        double worst_theta = 0.0;
        for (double th : options.thetas) {
            const double r = check.residual(ThermalState::at_theta(th), options);
            if (!(r <= worst) || std::isnan(r)) {
                worst = r;
                worst_theta = th;
            }
            if (std::isnan(r)) {
                break;
            }
        }
        report.residual = std::isnan(worst) ? std::numeric_limits<double>::infinity() : worst;
        std::ostringstream d;
        d << "worst theta " << worst_theta;
        report.detail = d.str();
    } catch (const std::exception& e) {
        report.residual = std::numeric_limits<double>::infinity();
        report.detail = e.what();
    }
    report.pass = report.residual <= report.tolerance;
    return report;
}

} // namespace

std::string_view to_string(Oracle oracle) {
    switch (oracle) {
    case Oracle::analytic: return "analytic";
    case Oracle::fock: return "fock";
    case Oracle::grid: return "grid";
    }
    return "unknown";
}

std::vector<std::string> identity_names() {
    std::vector<std::string> names;
    for (const Check& c : registry()) {
        names.emplace_back(c.name);
    }
    std::sort(names.begin(), names.end());
    return names;
}

std::vector<VerificationReport> run_verification(const VerifyOptions& options) {
    if (options.dim < kMinVerifyDim) {
        throw std::invalid_argument("verify needs dim >= " + std::to_string(kMinVerifyDim));
    }
    if (options.grid_n < kMinGridPoints) {
        throw std::invalid_argument("verify needs grid_n >= " + std::to_string(kMinGridPoints));
    }
    if (options.thetas.empty()) {
        throw std::invalid_argument("verify needs at least one theta");
    }
    std::vector<const Check*> selected;
    for (const Check& c : registry()) {
        const std::string_view name = c.name;
        if (!options.only || *options.only == name ||
            *options.only == name.substr(name.find('.') + 1)) {
            selected.push_back(&c);
        }
    }
    if (selected.empty()) {
        throw std::invalid_argument("unknown identity '" + options.only.value_or("") + "'");
    }

    std::vector<std::future<VerificationReport>> futures;
    futures.reserve(selected.size());
    for (const Check* c : selected) {
        futures.push_back(std::async(std::launch::async, run_check, std::cref(*c), std::cref(options)));
    }
    std::vector<VerificationReport> reports;
    reports.reserve(futures.size());
    for (auto& f : futures) {
        reports.push_back(f.get());
    }
    std::sort(reports.begin(), reports.end(),
              [](const auto& a, const auto& b) { return a.identity < b.identity; });
    return reports;
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
}

} // namespace hkd
