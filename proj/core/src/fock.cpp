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

#include "hkd/fock.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/SVD>

#include "hkd/gauss_hermite.hpp"

namespace hkd {

namespace {

using cd = std::complex<double>;
constexpr cd kI{0.0, 1.0};

void require_dim(int dim, int min_dim = 2) {
    if (dim < min_dim) {
        throw std::invalid_argument("Fock dimension must be >= " + std::to_string(min_dim) +
                                    ", got " + std::to_string(dim));
    }
}

FockMatrix lowering(int dim) {
    FockMatrix a = FockMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) {
        a(n - 1, n) = std::sqrt(static_cast<double>(n));
    }
    return a;
}

// p / sqrt(var_p0) and q / sqrt(var_q0).
struct ReducedQuadratures {
    FockMatrix P;
    FockMatrix Q;
};

ReducedQuadratures reduced(int dim, const Scales& scales) {
    const Quadratures qp = build_qp(dim, scales);
    const double sq = scales.length() / std::numbers::sqrt2;
    const double sp = scales.momentum() / std::numbers::sqrt2;
    return {qp.p.matrix / sp, qp.q.matrix / sq};
}

} // namespace

FockOperator identity(int dim) {
    require_dim(dim, 1);
    return {"I", FockMatrix::Identity(dim, dim)};
}

LadderPair build_ladder(int dim) {
    require_dim(dim);
    FockMatrix a = lowering(dim);
    FockMatrix ad = a.adjoint();
    return {{"a", std::move(a)}, {"a_dag", std::move(ad)}};
}

FockOperator build_number_a(int dim) {
    require_dim(dim);
    FockMatrix n = FockMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) {
        n(k, k) = static_cast<double>(k);
    }
    return {"N_a", std::move(n)};
}

Quadratures build_qp(int dim, const Scales& scales) {
    require_dim(dim);
    const FockMatrix a = lowering(dim);
    const FockMatrix ad = a.adjoint();
    const double sq = scales.length() / std::numbers::sqrt2; // sqrt(var_q0)
    const double sp = scales.momentum() / std::numbers::sqrt2;
    return {{"q", kI * sq * (a - ad)}, {"p", sp * (a + ad)}};
}

FockOperator build_hamiltonian(int dim, const Scales& scales) {
    const Quadratures qp = build_qp(dim, scales);
    const FockMatrix& q = qp.q.matrix;
    const FockMatrix& p = qp.p.matrix;
    FockMatrix h = p * p / (2.0 * scales.mass) +
                   0.5 * scales.mass * scales.omega * scales.omega * (q * q);
    return {"H", std::move(h)};
}

LadderPair build_b(int dim, const ThermalState& state) {
    require_dim(dim);
    const auto [P, Q] = reduced(dim, state.scales());
    const double c = state.coth_theta();
    const cd phase{1.0, -state.alpha()};
    FockMatrix b = 0.5 * std::sqrt(c) * (P - kI * (phase / c) * Q);
    FockMatrix bd = b.adjoint();
    return {{"b", std::move(b)}, {"b_dag", std::move(bd)}};
}

FockOperator build_number_b(int dim, const ThermalState& state) {
    const LadderPair b = build_b(dim, state);
    return {"N_b", b.raise.matrix * b.lower.matrix};
}

FockOperator number_b_from_quadratures(int dim, const ThermalState& state) {
    require_dim(dim);
    const Scales& s = state.scales();
    const Quadratures qp = build_qp(dim, s);
    const auto [P, Q] = reduced(dim, s);
    const double c = state.coth_theta();
    const FockMatrix I = FockMatrix::Identity(dim, dim);
    const FockMatrix pq = anticommutator(qp.p.matrix, qp.q.matrix);
    FockMatrix nb = 0.25 * c * (P * P - (2.0 / c) * (I + (state.alpha() / s.hbar) * pq) + Q * Q);
    return {"N_b (quadrature form)", std::move(nb)};
}

Schrodingerian build_schrodingerian(int dim, const ThermalState& state) {
    // Both vacua have <q> = <p> = 0, so the fluctuation operators equal q and p.
    const Quadratures qp = build_qp(dim, state.scales());
    const FockMatrix& dq = qp.q.matrix;
    const FockMatrix& dp = qp.p.matrix;
    return {{"j", dp * dq},
            {"sigma", 0.5 * anticommutator(dp, dq)},
            {"j0", 0.5 * kI * commutator(dp, dq)}};
}

FockVector expand_state(const ThermalState& state, int dim) {
    require_dim(dim);
    using Real = long double;
    using cl = std::complex<Real>;
    const int nodes = 2 * dim;
    const GaussHermiteRule<Real> rule = gauss_hermite<Real>(nodes);

    // Internal units: phi_n(q) = p_n(q) e^{-q^2/2}, psi_T = A e^{-q^2 (1 - i alpha) / (2 coth)}.
    // On the contour z = sqrt(K) q the product is p_n(z / sqrt(K)) e^{-z^2}. The sum
    // cancels heavily for large n, hence the extended precision.
    const Real c = state.coth_theta();
    const Real amp = std::pow(std::numbers::pi_v<Real> * c, Real(-0.25));
    const cl K = Real(0.5) + cl(1, -Real(state.alpha())) / (Real(2) * c);
    const cl rootK = std::sqrt(K);

    std::vector<cl> integrals(dim, cl(0));
    for (int k = 0; k < nodes; ++k) {
        const ScaledPolynomials<Real> poly = hermite_orthonormal<Real>(rule.nodes[k] / rootK, dim);
        for (int n = 0; n < dim; ++n) {
            const Real log_mag = rule.log_weights[k] + poly.log_scale[n];
            if (log_mag < Real(-11000)) {
                continue;
            }
            integrals[n] += std::exp(log_mag) * poly.mantissa[n];
        }
    }

    FockVector out;
    out.coefficients.resize(dim);
    cl phase = 1;
    for (int n = 0; n < dim; ++n) {
        const cl value = phase * amp * integrals[n] / rootK;
        out.coefficients[n] = cd(static_cast<double>(value.real()), static_cast<double>(value.imag()));
        phase *= cl(0, -1);
    }
    const double norm2 = out.coefficients.squaredNorm();
    if (!std::isfinite(norm2) || norm2 > 1.0 + 1e-10) {
        throw QuadratureError("Fock expansion norm " + std::to_string(norm2) +
                              " exceeds 1; quadrature did not converge");
    }
    out.truncation_loss = std::max(0.0, 1.0 - norm2);
    return out;
}

std::complex<double> expectation(const FockMatrix& op, const FockCoefficients& v) {
    if (op.rows() != v.size() || op.cols() != v.size()) {
        throw std::invalid_argument("operator and vector dimensions differ");
    }
    return v.dot(op * v) / v.squaredNorm();
}

std::complex<double> expectation(const FockOperator& op, const FockVector& v) {
    return expectation(op.matrix, v.coefficients);
}

BogoliubovPair bogoliubov_coefficients(double theta) {
    if (!(theta > 0.0)) {
        throw std::domain_error("theta must be positive");
    }
    const double c = std::isinf(theta) ? 1.0 : 1.0 / std::tanh(theta);
    const cd e = std::polar(1.0, std::numbers::pi / 4.0);
    return {std::sqrt(0.5 * c + 0.5) * e, std::sqrt(0.5 * c - 0.5) * std::conj(e)};
}

double interior_norm(const FockMatrix& m, int trim) {
    const Eigen::Index n = std::min(m.rows(), m.cols()) - trim;
    if (n <= 0) {
        throw std::invalid_argument("matrix too small for interior block");
    }
    const FockMatrix block = m.topLeftCorner(n, n);
    Eigen::JacobiSVD<FockMatrix> svd(block);
    return svd.singularValues()(0);
}

FockMatrix commutator(const FockMatrix& a, const FockMatrix& b) { return a * b - b * a; }
FockMatrix anticommutator(const FockMatrix& a, const FockMatrix& b) { return a * b + b * a; }

double hamiltonian_identity_residual(int dim, const ThermalState& state) {
    require_dim(dim, 4);
    const Scales& s = state.scales();
    const Quadratures qp = build_qp(dim, s);
    const FockMatrix H = build_hamiltonian(dim, s).matrix;
    const FockMatrix Nb = build_number_b(dim, state).matrix;
    const FockMatrix I = FockMatrix::Identity(dim, dim);
    const FockMatrix pq = anticommutator(qp.p.matrix, qp.q.matrix);
    const FockMatrix rhs =
        (s.energy() / state.coth_theta()) * (Nb + 0.5 * (I + (state.alpha() / s.hbar) * pq));
    return interior_norm(H - rhs);
}

BogoliubovDiagnostic bogoliubov_diagnostic(int dim, const ThermalState& state, double tolerance) {
    const LadderPair a = build_ladder(dim);
    const FockMatrix b = build_b(dim, state).lower.matrix;
    const BogoliubovPair uv = bogoliubov_coefficients(state.theta());

    struct Candidate {
        const char* name;
        cd u;
        cd v;
    };
    const Candidate candidates[] = {
        {"u a + v a_dag", uv.u, uv.v},
        {"u a - v a_dag", uv.u, -uv.v},
        {"u a + conj(v) a_dag", uv.u, std::conj(uv.v)},
        {"u a - conj(v) a_dag", uv.u, -std::conj(uv.v)},
        {"conj(u) a + v a_dag", std::conj(uv.u), uv.v},
        {"conj(u) a - v a_dag", std::conj(uv.u), -uv.v},
        {"conj(u) a + conj(v) a_dag", std::conj(uv.u), std::conj(uv.v)},
        {"conj(u) a - conj(v) a_dag", std::conj(uv.u), -std::conj(uv.v)},
    };

    BogoliubovDiagnostic out;
    const Eigen::Index n = dim - kInteriorTrim;
    for (const Candidate& cand : candidates) {
        const FockMatrix x = cand.u * a.lower.matrix + cand.v * a.raise.matrix;
        const double direct = interior_norm(b - x);
        // Best global phase: arg of the Frobenius inner product on the interior block.
        const cd inner = (x.topLeftCorner(n, n).adjoint() * b.topLeftCorner(n, n)).trace();
        const cd phase = std::abs(inner) > 0.0 ? inner / std::abs(inner) : cd(1.0);
        const double aligned = interior_norm(b - phase * x);
        out.variants.push_back({cand.name, direct});
        out.variants.push_back({std::string("e^{i phi} (") + cand.name + ")", aligned});
    }
    for (const auto& v : out.variants) {
        if (v.residual < tolerance) {
            out.match = v.form;
            break;
        }
    }
    return out;
}

} // namespace hkd
