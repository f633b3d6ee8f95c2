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
 * Command layer behind the hkd executable: configuration, sweeps, the
 * statistical-mechanics comparison table, verification and their CSV/JSON
 * renderings. Everything here is deterministic for a given configuration.
 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hkd/constants.hpp"
#include "hkd/grid.hpp"
#include "hkd/verify.hpp"

namespace hkd::cli {

enum class OutputFormat { csv, json };
enum class UnitMode { si, internal };
enum class Command { sweep, verify, compare };

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SweepConfig {
    std::vector<double> omega_list;
    std::optional<std::vector<double>> T_list;
    std::optional<std::vector<double>> theta_list; // kThetaCold allowed
    double mass = 1.0;
    int dim = kDefaultFockDim;
    int grid_n = 4096;
    double delta = kDefaultEntropyDelta;
    OutputFormat output_format = OutputFormat::csv;
    UnitMode unit_mode = UnitMode::si;
    PhysicalConstants constants = PhysicalConstants::codata();

    /// Constants actually used: natural units in internal mode.
    PhysicalConstants effective_constants() const;
    /// Throws ConfigError naming the offending field.
    void validate(Command command) const;
};

/// Parses a JSON config document. Unknown keys are rejected.
SweepConfig parse_config(const std::string& text);
SweepConfig load_config(const std::string& path);

OutputFormat parse_format(const std::string& name);
UnitMode parse_units(const std::string& name);
/// Accepts "inf" / "infinity" for the cold limit.
double parse_theta(const std::string& token);

struct SweepRow {
    double omega = 0.0;
    double T = 0.0;
    double theta = 0.0;
    double alpha = 0.0;
    double var_q = 0.0;
    double var_p = 0.0;
    double sigma = 0.0;
    double U = 0.0;
    double J_ef = 0.0;
    double T_ef = 0.0;
    double S_ef = 0.0;
    double ratio_hkd = 0.0;
    double ratio_qsm = 0.0;
    bool limit = false; // T = 0: ratios are their T -> 0 limits
};

/// Column names in output order.
const std::vector<std::string>& sweep_columns();

/// One row per (omega, T), omega in the given order, T ascending.
std::vector<SweepRow> cmd_sweep(const SweepConfig& config);
std::string render_sweep(const std::vector<SweepRow>& rows, OutputFormat format);

struct CompareRow {
    double T = 0.0;
    double ratio_hkd = 0.0;
    double ratio_qsm = 0.0;
    double hkd_over_kappa = 0.0;
    double gap = 0.0; // ratio_hkd - ratio_qsm
};

struct CompareTable {
    double kappa = 0.0;
    bool si_units = true;
    double omega = 0.0;
    std::vector<CompareRow> rows;
};

const std::vector<std::string>& compare_columns();

/// Needs T_list (all T > 0) and exactly one omega.
CompareTable cmd_compare(const SweepConfig& config);
std::string render_compare(const CompareTable& table, OutputFormat format);

/// "3.8191e-12 K·s" style header value (5 significant figures).
std::string format_kappa(double kappa, bool si_units);

struct VerifyOutcome {
    std::vector<VerificationReport> reports;
    int exit_status = 0; // 0 iff every identity passed
};

VerifyOutcome cmd_verify(const VerifyOptions& options);
std::string render_reports(const std::vector<VerificationReport>& reports, OutputFormat format);

std::string render_constants(const PhysicalConstants& constants, OutputFormat format);

/// 17 significant digits in scientific notation.
std::string format_number(double value);

} // namespace hkd::cli
