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

#include "hkd/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hkd/gaussian_state.hpp"
#include "hkd/macro.hpp"

namespace hkd::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kMinSweepDim = 32;
constexpr int kMinSweepGrid = 512;

[[noreturn]] void field_error(const std::string& field, const std::string& what) {
    throw ConfigError("field '" + field + "': " + what);
}

std::vector<double> number_list(const ojson& j, const std::string& field, bool allow_inf) {
    if (!j.is_array()) {
        field_error(field, "expected an array of numbers");
    }
    std::vector<double> out;
    for (const auto& item : j) {
        if (item.is_number()) {
            out.push_back(item.get<double>());
        } else if (allow_inf && item.is_string()) {
            try {
                out.push_back(parse_theta(item.get<std::string>()));
            } catch (const std::exception&) {
                field_error(field, "cannot parse '" + item.get<std::string>() + "'");
            }
        } else {
            field_error(field, "expected numbers");
        }
    }
    return out;
}

ojson json_number(double v) {
    if (std::isfinite(v)) {
        return v;
    }
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

// Parallel map with ordered results.
template <typename In, typename Fn>
auto ordered_map(const std::vector<In>& inputs, Fn fn) {
    using Out = decltype(fn(inputs.front()));
    std::vector<Out> out(inputs.size());
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), inputs.size()));
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w) {
        tasks.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < inputs.size(); i += workers) {
                out[i] = fn(inputs[i]);
            }
        }));
    }
    for (auto& t : tasks) {
        t.get();
    }
    return out;
}

SweepRow sweep_row(double omega, double T, const SweepConfig& config) {
    const PhysicalConstants k = config.effective_constants();
    const OscillatorParams params{config.mass, omega, T};
    const ThermalState s = ThermalState::thermal(params, k);
    const MacroState m = macro_state(params, k);
    SweepRow r;
    r.omega = omega;
    r.T = T;
    r.theta = s.theta();
    r.alpha = s.alpha();
    r.var_q = s.var_q();
    r.var_p = s.var_p();
    r.sigma = m.sigma;
    r.U = m.U;
    r.J_ef = m.J_ef;
    r.T_ef = m.T_ef;
    r.S_ef = m.S_ef;
    if (T == 0.0) {
        r.limit = true;
        r.ratio_hkd = kappa(k);
        r.ratio_qsm = 0.0;
    } else {
        r.ratio_hkd = ratio_hkd(params, k);
        r.ratio_qsm = ratio_qsm(params, k);
    }
    return r;
}

std::vector<double> row_values(const SweepRow& r) {
    return {r.omega, r.T,   r.theta, r.alpha, r.var_q,     r.var_p,     r.sigma,
            r.U,     r.J_ef, r.T_ef, r.S_ef,  r.ratio_hkd, r.ratio_qsm};
}

std::vector<double> row_values(const CompareRow& r) {
    return {r.T, r.ratio_hkd, r.ratio_qsm, r.hkd_over_kappa, r.gap};
}

} // namespace

std::string format_number(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.16e", value);
    return buf;
}

PhysicalConstants SweepConfig::effective_constants() const {
    return unit_mode == UnitMode::internal ? PhysicalConstants::natural() : constants;
}

void SweepConfig::validate(Command command) const {
    if (omega_list.empty()) {
        field_error("omega_list", "must not be empty");
    }
    for (double w : omega_list) {
        if (!(w > 0.0) || !std::isfinite(w)) {
            field_error("omega_list", "entries must be positive, got " + format_number(w));
        }
    }
    if (T_list.has_value() == theta_list.has_value()) {
        field_error("T_list", "exactly one of T_list and theta_list must be given");
    }
    if (T_list) {
        if (T_list->empty()) {
            field_error("T_list", "must not be empty");
        }
        for (double T : *T_list) {
            if (!(T >= 0.0) || !std::isfinite(T)) {
                field_error("T_list", "entries must be >= 0, got " + format_number(T));
            }
        }
    }
    if (theta_list) {
        if (theta_list->empty()) {
            field_error("theta_list", "must not be empty");
        }
        for (double th : *theta_list) {
            if (!(th > 0.0)) {
                field_error("theta_list", "entries must be positive, got " + format_number(th));
            }
        }
    }
    if (!(mass > 0.0) || !std::isfinite(mass)) {
        field_error("mass", "must be positive");
    }
    if (dim < kMinSweepDim) {
        field_error("dim", "must be >= " + std::to_string(kMinSweepDim) + ", got " + std::to_string(dim));
    }
    if (grid_n < kMinSweepGrid) {
        field_error("grid_n",
                    "must be >= " + std::to_string(kMinSweepGrid) + ", got " + std::to_string(grid_n));
    }
    if (!(delta > 0.0)) {
        field_error("delta", "must be positive");
    }
    try {
        constants.validate();
    } catch (const std::exception& e) {
        field_error("constants", e.what());
    }
    if (command == Command::compare) {
        if (!T_list) {
            field_error("T_list", "compare needs a temperature list");
        }
        if (omega_list.size() != 1) {
            field_error("omega_list", "compare takes exactly one omega");
        }
        for (double T : *T_list) {
            if (!(T > 0.0)) {
                field_error("T_list", "compare needs T > 0");
            }
        }
    }
}

SweepConfig parse_config(const std::string& text) {
    ojson j;
    try {
        j = ojson::parse(text);
    } catch (const ojson::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    SweepConfig c;
    for (const auto& [key, value] : j.items()) {
        try {
            if (key == "omega_list") {
                c.omega_list = number_list(value, key, false);
            } else if (key == "T_list") {
                c.T_list = number_list(value, key, false);
            } else if (key == "theta_list") {
                c.theta_list = number_list(value, key, true);
            } else if (key == "mass") {
                c.mass = value.get<double>();
            } else if (key == "dim") {
                c.dim = value.get<int>();
            } else if (key == "grid_n") {
                c.grid_n = value.get<int>();
            } else if (key == "delta") {
                c.delta = value.get<double>();
            } else if (key == "output_format") {
                c.output_format = parse_format(value.get<std::string>());
            } else if (key == "unit_mode") {
                c.unit_mode = parse_units(value.get<std::string>());
            } else if (key == "constants") {
                for (const auto& [ck, cv] : value.items()) {
                    if (ck == "hbar") {
                        c.constants.hbar = cv.get<double>();
                    } else if (ck == "k_B") {
                        c.constants.k_B = cv.get<double>();
                    } else {
                        field_error("constants." + ck, "unknown constant");
                    }
                }
            } else {
                field_error(key, "unknown field");
            }
        } catch (const ojson::type_error& e) {
            field_error(key, std::string("wrong type: ") + e.what());
        } catch (const ConfigError&) {
            throw;
        } catch (const std::invalid_argument& e) {
            field_error(key, e.what());
        }
    }
    return c;
}

SweepConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

OutputFormat parse_format(const std::string& name) {
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw std::invalid_argument("unknown output format '" + name + "' (csv|json)");
}

UnitMode parse_units(const std::string& name) {
    if (name == "si") return UnitMode::si;
    if (name == "internal") return UnitMode::internal;
    throw std::invalid_argument("unknown unit mode '" + name + "' (si|internal)");
}

double parse_theta(const std::string& token) {
    std::string t = token;
    std::transform(t.begin(), t.end(), t.begin(), [](unsigned char ch) { return std::tolower(ch); });
    if (t == "inf" || t == "infinity" || t == "+inf") {
        return kThetaCold;
    }
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) {
        throw std::invalid_argument("cannot parse theta '" + token + "'");
    }
    return v;
}

const std::vector<std::string>& sweep_columns() {
    static const std::vector<std::string> cols = {
        "omega", "T",   "theta", "alpha", "var_q",     "var_p",     "sigma",
        "U",     "J_ef", "T_ef", "S_ef",  "ratio_hkd", "ratio_qsm", "limit"};
    return cols;
}

const std::vector<std::string>& compare_columns() {
    static const std::vector<std::string> cols = {"T", "ratio_hkd", "ratio_qsm",
                                                  "ratio_hkd_over_kappa", "gap"};
    return cols;
}

std::vector<SweepRow> cmd_sweep(const SweepConfig& config) {
    config.validate(Command::sweep);
    const PhysicalConstants k = config.effective_constants();
    std::vector<std::pair<double, double>> points;
    for (double omega : config.omega_list) {
        std::vector<double> temps;
        if (config.T_list) {
            temps = *config.T_list;
        } else {
            for (double th : *config.theta_list) {
                temps.push_back(temperature_for_theta(th, omega, k));
            }
        }
        std::stable_sort(temps.begin(), temps.end());
        for (double T : temps) {
            points.emplace_back(omega, T);
        }
    }
    return ordered_map(points, [&](const std::pair<double, double>& p) {
        return sweep_row(p.first, p.second, config);
    });
}

std::string render_sweep(const std::vector<SweepRow>& rows, OutputFormat format) {
    const auto& cols = sweep_columns();
    if (format == OutputFormat::json) {
        ojson arr = ojson::array();
        for (const SweepRow& r : rows) {
            ojson obj;
            const auto vals = row_values(r);
            for (std::size_t i = 0; i < vals.size(); ++i) {
                obj[cols[i]] = json_number(vals[i]);
            }
            obj["limit"] = r.limit ? 1 : 0;
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "") << cols[i];
    }
    out << "\n";
    for (const SweepRow& r : rows) {
        for (double v : row_values(r)) {
            out << format_number(v) << ",";
        }
        out << (r.limit ? 1 : 0) << "\n";
    }
    return out.str();
}

std::string format_kappa(double kappa, bool si_units) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4e", kappa);
    return std::string(buf) + (si_units ? " K·s" : "");
}

CompareTable cmd_compare(const SweepConfig& config) {
    config.validate(Command::compare);
    const PhysicalConstants k = config.effective_constants();
    CompareTable table;
    table.kappa = kappa(k);
    table.si_units = config.unit_mode == UnitMode::si;
    table.omega = config.omega_list.front();
    std::vector<double> temps = *config.T_list;
    std::stable_sort(temps.begin(), temps.end());
    table.rows = ordered_map(temps, [&](double T) {
        const OscillatorParams p{config.mass, table.omega, T};
        CompareRow r;
        r.T = T;
        r.ratio_hkd = ratio_hkd(p, k);
        r.ratio_qsm = ratio_qsm(p, k);
        r.hkd_over_kappa = r.ratio_hkd / table.kappa;
        r.gap = r.ratio_hkd - r.ratio_qsm;
        return r;
    });
    return table;
}

std::string render_compare(const CompareTable& table, OutputFormat format) {
    const auto& cols = compare_columns();
    if (format == OutputFormat::json) {
        ojson doc;
        doc["kappa"] = table.kappa;
        doc["kappa_display"] = format_kappa(table.kappa, table.si_units);
        doc["omega"] = table.omega;
        doc["rows"] = ojson::array();
        for (const CompareRow& r : table.rows) {
            ojson obj;
            const auto vals = row_values(r);
            for (std::size_t i = 0; i < vals.size(); ++i) {
                obj[cols[i]] = json_number(vals[i]);
            }
            doc["rows"].push_back(std::move(obj));
        }
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "# kappa = " << format_kappa(table.kappa, table.si_units) << "\n";
    out << "# omega = " << format_number(table.omega) << "\n";
    for (std::size_t i = 0; i < cols.size(); ++i) {
        out << (i ? "," : "") << cols[i];
    }
    out << "\n";
    for (const CompareRow& r : table.rows) {
        const auto vals = row_values(r);
        for (std::size_t i = 0; i < vals.size(); ++i) {
            out << (i ? "," : "") << format_number(vals[i]);
        }
        out << "\n";
    }
    return out.str();
}

VerifyOutcome cmd_verify(const VerifyOptions& options) {
    VerifyOutcome out;
    out.reports = run_verification(options);
    out.exit_status = all_passed(out.reports) ? 0 : 1;
    return out;
}

std::string render_reports(const std::vector<VerificationReport>& reports, OutputFormat format) {
    if (format == OutputFormat::json) {
        ojson arr = ojson::array();
        for (const auto& r : reports) {
            ojson obj;
            obj["identity"] = r.identity;
            obj["relation"] = r.relation;
            obj["oracle"] = std::string(to_string(r.oracle));
            obj["residual"] = json_number(r.residual);
            obj["tolerance"] = r.tolerance;
            obj["pass"] = r.pass;
            obj["detail"] = r.detail;
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "identity,oracle,residual,tolerance,pass,relation,detail\n";
    for (const auto& r : reports) {
        out << r.identity << "," << to_string(r.oracle) << "," << format_number(r.residual) << ","
            << format_number(r.tolerance) << "," << (r.pass ? "pass" : "FAIL") << ",\""
            << r.relation << "\",\"" << r.detail << "\"\n";
    }
    return out.str();
}

std::string render_constants(const PhysicalConstants& constants, OutputFormat format) {
    const double k = kappa(constants);
    if (format == OutputFormat::json) {
        ojson doc;
        doc["hbar"] = constants.hbar;
        doc["k_B"] = constants.k_B;
        doc["kappa"] = k;
        doc["kappa_display"] = format_kappa(k, true);
        return doc.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "name,value,unit\n";
    out << "hbar," << format_number(constants.hbar) << ",J·s\n";
    out << "k_B," << format_number(constants.k_B) << ",J/K\n";
    out << "kappa," << format_number(k) << ",K·s\n";
    return out.str();
}

} // namespace hkd::cli
