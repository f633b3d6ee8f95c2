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
 * Registry of operator identities checked numerically against the Fock,
 * grid and closed-form routes. Every check runs in internal units.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hkd/fock.hpp"
#include "hkd/grid.hpp"

namespace hkd {

enum class Oracle { analytic, fock, grid };

std::string_view to_string(Oracle oracle);

struct VerificationReport {
    std::string identity;
    std::string relation; // the identity in plain notation
    Oracle oracle = Oracle::analytic;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;    // residual <= tolerance
    std::string detail;   // worst theta, or the error message when the check threw
};

struct VerifyOptions {
    int dim = kDefaultFockDim;
    int grid_n = 4096;
    std::vector<double> thetas = {0.5, 1.0, 2.0};
    double delta = kDefaultEntropyDelta;
    std::optional<std::string> only; // "oracle.name", or "name" for every oracle
};

inline constexpr int kMinVerifyDim = 4;

/// Sorted identity names.
std::vector<std::string> identity_names();

/**
 * Runs the registry (or the single identity named by options.only; an
 * unknown name throws std::invalid_argument). Checks run concurrently; the
 * result is sorted by identity name. A check that throws is reported as a
 * failure with an infinite residual.
 */
std::vector<VerificationReport> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<VerificationReport>& reports);

} // namespace hkd
