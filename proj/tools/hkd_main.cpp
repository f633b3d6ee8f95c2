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

// hkd: sweeps, comparison tables and identity verification for the
// oscillator in a quantum heat bath.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hkd/cli.hpp"

namespace {

using namespace hkd::cli;

struct CommonFlags {
    std::string config_path;
    std::string format;
    std::string out_path;
    std::string units;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("--config", f.config_path, "JSON configuration file")->check(CLI::ExistingFile);
    cmd->add_option("--format", f.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", f.out_path, "Write output to this path instead of stdout");
}

SweepConfig base_config(const CommonFlags& f) {
    SweepConfig c = f.config_path.empty() ? SweepConfig{} : load_config(f.config_path);
    if (!f.format.empty()) {
        c.output_format = parse_format(f.format);
    }
    if (!f.units.empty()) {
        c.unit_mode = parse_units(f.units);
    }
    return c;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write '" << out_path << "'\n";
        return 2;
    }
    out << text;
    return 0;
}

std::vector<double> thetas_from(const std::vector<std::string>& tokens) {
    std::vector<double> out;
    for (const auto& t : tokens) {
        out.push_back(parse_theta(t));
    }
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hkd - thermal vacuum macroparameters and identity checks"};
    app.require_subcommand(1);

    CommonFlags sweep_flags;
    std::vector<std::string> sweep_theta;
    std::vector<double> sweep_temp;
    std::vector<double> sweep_omega;
    auto* sweep = app.add_subcommand("sweep", "Tabulate macroparameters over (omega, T)");
    add_common(sweep, sweep_flags);
    auto* theta_opt = sweep->add_option("--theta", sweep_theta, "theta values (inf allowed)");
    auto* temp_opt = sweep->add_option("--temp", sweep_temp, "Temperatures");
    theta_opt->excludes(temp_opt);
    sweep->add_option("--omega", sweep_omega, "Angular frequencies");
    sweep->add_option("--units", sweep_flags.units, "si or internal")
        ->check(CLI::IsMember({"si", "internal"}));

    CommonFlags verify_flags;
    std::optional<int> verify_dim;
    std::optional<int> verify_grid;
    std::vector<std::string> verify_theta;
    std::string verify_only;
    bool list_identities = false;
    auto* verify = app.add_subcommand("verify", "Run the identity registry on every oracle");
    add_common(verify, verify_flags);
    verify->add_option("--dim", verify_dim, "Fock truncation dimension");
    verify->add_option("--grid-n", verify_grid, "Grid points for the position-space oracle");
    verify->add_option("--theta", verify_theta, "theta values to check at");
    verify->add_option("--only", verify_only, "Run a single identity");
    verify->add_flag("--list", list_identities, "List identity names and exit");

    CommonFlags compare_flags;
    std::vector<double> compare_temp;
    std::optional<double> compare_omega;
    auto* compare = app.add_subcommand("compare", "Contrast the two ratio curves against kappa");
    add_common(compare, compare_flags);
    compare->add_option("--temp", compare_temp, "Temperatures (> 0)");
    compare->add_option("--omega", compare_omega, "Angular frequency");
    compare->add_option("--units", compare_flags.units, "si or internal")
        ->check(CLI::IsMember({"si", "internal"}));

    CommonFlags constants_flags;
    auto* constants = app.add_subcommand("constants", "Print hbar, k_B and kappa");
    add_common(constants, constants_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sweep) {
            SweepConfig c = base_config(sweep_flags);
            if (!sweep_theta.empty()) {
                c.theta_list = thetas_from(sweep_theta);
                c.T_list.reset();
            }
            if (!sweep_temp.empty()) {
                c.T_list = sweep_temp;
                c.theta_list.reset();
            }
            if (!sweep_omega.empty()) {
                c.omega_list = sweep_omega;
            }
            if (c.omega_list.empty() && c.unit_mode == UnitMode::internal) {
                c.omega_list = {1.0};
            }
            return emit(render_sweep(cmd_sweep(c), c.output_format), sweep_flags.out_path);
        }
        if (*verify) {
            if (list_identities) {
                for (const auto& name : hkd::identity_names()) {
                    std::cout << name << "\n";
                }
                return 0;
            }
            hkd::VerifyOptions o;
            OutputFormat format = OutputFormat::csv;
            if (!verify_flags.config_path.empty()) {
                const SweepConfig c = load_config(verify_flags.config_path);
                o.dim = c.dim;
                o.grid_n = c.grid_n;
                o.delta = c.delta;
                if (c.theta_list) {
                    o.thetas = *c.theta_list;
                }
                format = c.output_format;
            }
            if (!verify_flags.format.empty()) {
                format = parse_format(verify_flags.format);
            }
            if (verify_dim) o.dim = *verify_dim;
            if (verify_grid) o.grid_n = *verify_grid;
            if (!verify_theta.empty()) o.thetas = thetas_from(verify_theta);
            if (!verify_only.empty()) o.only = verify_only;
            const VerifyOutcome outcome = cmd_verify(o);
            const int io = emit(render_reports(outcome.reports, format), verify_flags.out_path);
            return io != 0 ? io : outcome.exit_status;
        }
        if (*compare) {
            SweepConfig c = base_config(compare_flags);
            if (!compare_temp.empty()) {
                c.T_list = compare_temp;
                c.theta_list.reset();
            }
            if (compare_omega) {
                c.omega_list = {*compare_omega};
            }
            return emit(render_compare(cmd_compare(c), c.output_format), compare_flags.out_path);
        }
        if (*constants) {
            SweepConfig c = base_config(constants_flags);
            return emit(render_constants(c.constants, c.output_format), constants_flags.out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
