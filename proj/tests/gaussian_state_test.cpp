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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <gtest/gtest.h>

#include "hkd/gaussian_state.hpp"
#include "oracles.hpp"

namespace hkd {
namespace {

namespace frozen = testing::frozen;
const PhysicalConstants kNatural = PhysicalConstants::natural();

TEST(GroundState, UnitOscillator) {
    const ThermalState s = ThermalState::ground({1.0, 1.0, 0.0}, kNatural);
    EXPECT_DOUBLE_EQ(s.var_q(), 0.5);
    EXPECT_DOUBLE_EQ(s.var_p(), 0.5);
    EXPECT_EQ(s.alpha(), 0.0);
    EXPECT_DOUBLE_EQ(s.var_q() * s.var_p(), 0.25);
}

TEST(GroundState, MassTwoFrequencyThree) {
    const ThermalState s = ThermalState::ground({2.0, 3.0, 0.0}, kNatural);
    EXPECT_NEAR(s.var_q(), 1.0 / 12.0, 1e-16);
    EXPECT_NEAR(s.var_p(), 3.0, 1e-15);
}

TEST(GroundState, RejectsWarmParams) {
    EXPECT_THROW(ThermalState::ground({1.0, 1.0, 0.3}, kNatural), std::domain_error);
}

TEST(ThermalState, ThetaOne) {
    const ThermalState s = ThermalState::at_theta(1.0);
    EXPECT_NEAR(s.var_q(), frozen::kHalfCoth1, 1e-15);
    EXPECT_NEAR(s.alpha(), frozen::kCsch1, 1e-15);
    EXPECT_NEAR(1.0 + s.alpha() * s.alpha() - s.coth_theta() * s.coth_theta(), 0.0, 1e-12);
}

TEST(ThermalState, ColdLimitReducesToGround) {
    const ThermalState g = ThermalState::ground({1.0, 1.0, 0.0}, kNatural);
    const ThermalState t = ThermalState::thermal({1.0, 1.0, 0.0}, kNatural);
    EXPECT_EQ(t.alpha(), g.alpha());
    EXPECT_EQ(t.var_q(), g.var_q());
    EXPECT_EQ(t.var_p(), g.var_p());
    for (double th : {40.0, 100.0, 1000.0}) {
        const ThermalState s = ThermalState::at_theta(th);
        EXPECT_LT(s.alpha(), 1e-17);
        EXPECT_EQ(s.var_q(), g.var_q());
        EXPECT_EQ(s.var_p(), g.var_p());
    }
}

TEST(ThermalState, InvariantsAcrossSweep) {
    double prev_q = 0.0, prev_p = 0.0, prev_sigma = 0.0;
    // Descending theta means ascending temperature.
    auto sweep = testing::theta_sweep();
    for (auto it = sweep.rbegin(); it != sweep.rend(); ++it) {
        const ThermalState s = ThermalState::at_theta(*it);
        const double sigma = schrodinger_correlator(s).real();
        EXPECT_NEAR((s.var_q() * s.var_p() - sigma * sigma) / 0.25, 1.0, 1e-12) << *it;
        EXPECT_NEAR((1.0 + s.alpha() * s.alpha()) / (s.coth_theta() * s.coth_theta()), 1.0, 1e-12);
        EXPECT_GE(s.var_q() * s.var_p(), 0.25);
        if (it != sweep.rbegin()) {
            EXPECT_GT(sigma, prev_sigma);
            // coth(theta) rounds to 1 beyond theta ~ 18.
            if (*it < 15.0) {
                EXPECT_GT(s.var_q(), prev_q);
                EXPECT_GT(s.var_p(), prev_p);
            } else {
                EXPECT_GE(s.var_q(), prev_q);
            }
        }
        prev_q = s.var_q();
        prev_p = s.var_p();
        prev_sigma = sigma;
    }
}

TEST(Psi, PeakAndPhase) {
    const ThermalState s = ThermalState::at_theta(1.0);
    const std::complex<double> p0 = psi(s, 0.0);
    EXPECT_DOUBLE_EQ(p0.real(), std::pow(2.0 * std::numbers::pi * s.var_q(), -0.25));
    EXPECT_EQ(p0.imag(), 0.0);
    for (double q : {0.1, 0.7, 1.3, 2.9}) {
        EXPECT_NEAR(std::arg(psi(s, q)), s.alpha() * q * q / (4.0 * s.var_q()), 1e-14);
        EXPECT_NEAR(std::abs(psi(s, q) - testing::reference_psi(1.0, q)), 0.0, 1e-15);
    }
}

TEST(Psi, ColdVacuumIsReal) {
    const ThermalState s = ThermalState::at_theta(kThetaCold);
    for (double q = -5.0; q <= 5.0; q += 0.37) {
        EXPECT_EQ(psi(s, q).imag(), 0.0);
        EXPECT_GT(psi(s, q).real(), 0.0);
    }
}

TEST(Psi, NormalizedByQuadrature) {
    for (double th : {0.05, 0.3, 1.0, 10.0}) {
        const ThermalState s = ThermalState::at_theta(th);
        const double half = 14.0 * std::sqrt(s.var_q());
        const double norm = testing::simpson([&](double q) { return std::norm(psi(s, q)); }, -half, half);
        EXPECT_NEAR(norm, 1.0, 1e-10) << th;
    }
}

TEST(Densities, SecondMomentAndPeak) {
    const ThermalState s = ThermalState::at_theta(0.7);
    EXPECT_DOUBLE_EQ(density_q(s, 0.0), 1.0 / std::sqrt(2.0 * std::numbers::pi * s.var_q()));
    const double half = 14.0 * std::sqrt(s.var_q());
    const double m2 = testing::simpson([&](double q) { return q * q * density_q(s, q); }, -half, half);
    EXPECT_NEAR(m2 / s.var_q(), 1.0, 1e-10);
    const double halfp = 14.0 * std::sqrt(s.var_p());
    const double np = testing::simpson([&](double p) { return density_p(s, p); }, -halfp, halfp);
    EXPECT_NEAR(np, 1.0, 1e-10);
}

TEST(Densities, MomentumDensityMatchesFourierTransform) {
    for (double th : {0.3, 1.0, 4.0}) {
        const ThermalState s = ThermalState::at_theta(th);
        const double half = 12.0 * std::sqrt(s.var_q());
        for (double p : {0.0, 0.4, 1.1, 2.5}) {
            const auto amp = testing::fourier_amplitude([&](double q) { return psi(s, q); }, p, half, 8001);
            EXPECT_NEAR(std::norm(amp), density_p(s, p), 1e-8) << th << " " << p;
        }
    }
}

TEST(Correlator, ColdVacuum) {
    const ThermalState s = ThermalState::at_theta(kThetaCold);
    EXPECT_EQ(pq_anticommutator_mean(s), 0.0);
    const std::complex<double> J = schrodinger_correlator(s);
    EXPECT_EQ(J.real(), 0.0);
    EXPECT_DOUBLE_EQ(J.imag(), -0.5);
    EXPECT_DOUBLE_EQ(std::abs(J), 0.5);
}

TEST(Correlator, ThetaOne) {
    const ThermalState s = ThermalState::at_theta(1.0);
    const std::complex<double> J = schrodinger_correlator(s);
    EXPECT_NEAR(J.real(), frozen::kHalfCsch1, 1e-15);
    EXPECT_NEAR(std::abs(J), frozen::kHalfCoth1, 1e-15);
    EXPECT_NEAR(std::abs(J), std::sqrt(s.var_q() * s.var_p()), 1e-15);
    EXPECT_NEAR(pq_anticommutator_mean(s), frozen::kCsch1, 1e-15);
    EXPECT_DOUBLE_EQ(pq_anticommutator_mean(s), 2.0 * J.real());
}

TEST(Correlator, AnticommutatorMeanByQuadrature) {
    // <{p,q}> = -i hbar int conj(psi) (psi + 2 q psi') dq, psi' by central difference.
    const ThermalState s = ThermalState::at_theta(0.8);
    const double h = 1e-5;
    const double half = 14.0 * std::sqrt(s.var_q());
    const auto integrand = [&](double q) {
        const auto d = (psi(s, q + h) - psi(s, q - h)) / (2.0 * h);
        return std::conj(psi(s, q)) * (psi(s, q) + 2.0 * q * d);
    };
    const std::complex<double> m = std::complex<double>(0.0, -1.0) * testing::simpson(integrand, -half, half);
    EXPECT_NEAR(m.real(), s.alpha(), 1e-8);
    EXPECT_NEAR(m.imag(), 0.0, 1e-8);
}

TEST(Correlator, SaturationStructureProperty) {
    testing::Sampler rng(7);
    for (int i = 0; i < 200; ++i) {
        const ThermalState s = ThermalState::at_theta(rng.log_uniform(0.01, 100.0));
        const std::complex<double> J = schrodinger_correlator(s);
        EXPECT_NEAR(std::norm(J) - J.real() * J.real(), 0.25, 1e-12);
    }
}

TEST(Overlap, SelfAndColdConvergence) {
    for (double th : {0.1, 1.0, kThetaCold}) {
        const ThermalState s = ThermalState::at_theta(th);
        EXPECT_NEAR(std::abs(overlap(s, s) - 1.0), 0.0, 1e-12);
    }
    const ThermalState g = ThermalState::at_theta(kThetaCold);
    double prev = 0.0;
    for (double th : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 40.0}) {
        const double o = std::abs(overlap(g, ThermalState::at_theta(th)));
        EXPECT_LE(o, 1.0 + 1e-15);
        EXPECT_GT(o, prev);
        prev = o;
    }
    EXPECT_NEAR(prev, 1.0, 1e-15);
}

TEST(Overlap, MatchesQuadrature) {
    const ThermalState g = ThermalState::at_theta(kThetaCold);
    const ThermalState t = ThermalState::at_theta(1.0);
    const auto ref = testing::simpson(
        [&](double q) { return std::conj(testing::reference_psi(kThetaCold, q)) * testing::reference_psi(1.0, q); },
        -15.0, 15.0);
    EXPECT_NEAR(std::abs(overlap(g, t)), std::abs(ref), 1e-9);
    EXPECT_NEAR(std::abs(overlap(g, t) - ref), 0.0, 1e-9);
}

TEST(Overlap, RejectsDifferentOscillators) {
    const ThermalState a = ThermalState::at_theta(1.0, make_scales(1.0, 1.0, PhysicalConstants::natural()));
    const ThermalState b = ThermalState::at_theta(1.0, make_scales(2.0, 1.0, PhysicalConstants::natural()));
    EXPECT_THROW(overlap(a, b), std::invalid_argument);
}

} // namespace
} // namespace hkd
