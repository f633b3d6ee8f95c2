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
#include <limits>
#include <sstream>

#include <gtest/gtest.h>
#include "json.hpp"

#include "hkd/cli.hpp"
#include "oracles.hpp"

namespace hkd::cli {
namespace {

namespace frozen = hkd::testing::frozen;

SweepConfig internal_theta(std::vector<double> thetas) {
    SweepConfig c;
    c.omega_list = {1.0};
    c.theta_list = std::move(thetas);
    c.unit_mode = UnitMode::internal;
    return c;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) out.push_back(l);
    return out;
}

TEST(Config, ParsesFullDocument) {
    const SweepConfig c = parse_config(R"({
        "omega_list": [1.0, 2.0], "theta_list": [0.5, "inf"], "mass": 2.0,
        "dim": 96, "grid_n": 2048, "delta": 3.0, "output_format": "json",
        "unit_mode": "internal", "constants": {"hbar": 2.0, "k_B": 3.0}})");
    EXPECT_EQ(c.omega_list.size(), 2u);
    ASSERT_TRUE(c.theta_list.has_value());
    EXPECT_TRUE(std::isinf((*c.theta_list)[1]));
    EXPECT_FALSE(c.T_list.has_value());
    EXPECT_EQ(c.dim, 96);
    EXPECT_EQ(c.grid_n, 2048);
    EXPECT_EQ(c.output_format, OutputFormat::json);
    EXPECT_EQ(c.unit_mode, UnitMode::internal);
    EXPECT_DOUBLE_EQ(c.constants.hbar, 2.0);
    EXPECT_DOUBLE_EQ(c.effective_constants().hbar, 1.0);
}

TEST(Config, RejectsMalformedInput) {
    EXPECT_THROW(parse_config("{"), ConfigError);
    EXPECT_THROW(parse_config("[1]"), ConfigError);
    EXPECT_THROW(parse_config(R"({"omega": [1]})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"dim": "big"})"), ConfigError);
    EXPECT_THROW(parse_config(R"({"constants": {"c": 3e8}})"), ConfigError);
    EXPECT_THROW(load_config("/nonexistent/hkd.json"), ConfigError);
}

TEST(Config, ValidationNamesTheField) {
    const auto message = [](const SweepConfig& c, Command cmd) {
        try {
            c.validate(cmd);
        } catch (const ConfigError& e) {
            return std::string(e.what());
        }
        return std::string();
    };
    SweepConfig c = internal_theta({1.0});
    EXPECT_EQ(message(c, Command::sweep), "");
    c.dim = 8;
    EXPECT_NE(message(c, Command::sweep).find("dim"), std::string::npos);
    c = internal_theta({1.0});
    c.grid_n = 100;
    EXPECT_NE(message(c, Command::sweep).find("grid_n"), std::string::npos);
    c = internal_theta({-1.0});
    EXPECT_NE(message(c, Command::sweep).find("theta_list"), std::string::npos);
    c = internal_theta({1.0});
    c.T_list = std::vector<double>{1.0};
    EXPECT_NE(message(c, Command::sweep).find("exactly one"), std::string::npos);
    c = internal_theta({1.0});
    c.omega_list.clear();
    EXPECT_NE(message(c, Command::sweep).find("omega_list"), std::string::npos);
    c = internal_theta({1.0});
    c.mass = 0.0;
    EXPECT_NE(message(c, Command::sweep).find("mass"), std::string::npos);
    c = internal_theta({1.0});
    EXPECT_NE(message(c, Command::compare).find("T_list"), std::string::npos);
}

TEST(Config, ParseHelpers) {
    EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
    EXPECT_EQ(parse_units("si"), UnitMode::si);
    EXPECT_THROW(parse_format("xml"), std::invalid_argument);
    EXPECT_THROW(parse_units("cgs"), std::invalid_argument);
    EXPECT_TRUE(std::isinf(parse_theta("inf")));
    EXPECT_DOUBLE_EQ(parse_theta("0.25"), 0.25);
    EXPECT_THROW(parse_theta("warm"), std::invalid_argument);
}

TEST(Sweep, ThetaOneRow) {
    const auto rows = cmd_sweep(internal_theta({1.0}));
    ASSERT_EQ(rows.size(), 1u);
    const SweepRow& r = rows[0];
    EXPECT_DOUBLE_EQ(r.T, 0.5);
    EXPECT_DOUBLE_EQ(r.theta, 1.0);
    EXPECT_NEAR(r.alpha, frozen::kCsch1, 1e-15);
    EXPECT_NEAR(r.var_q, frozen::kHalfCoth1, 1e-15);
    EXPECT_NEAR(r.var_p, frozen::kHalfCoth1, 1e-15);
    EXPECT_NEAR(r.sigma, frozen::kHalfCsch1, 1e-15);
    EXPECT_NEAR(r.U, frozen::kHalfCoth1, 1e-15);
    EXPECT_NEAR(r.J_ef, frozen::kHalfCoth1, 1e-15);
    EXPECT_NEAR(r.S_ef, frozen::kEntropyAt1, 1e-14);
    EXPECT_NEAR(r.ratio_hkd, 0.5 * frozen::kRatioFactorAt1, 1e-14);
    EXPECT_DOUBLE_EQ(r.ratio_qsm, 0.5);
    EXPECT_FALSE(r.limit);
}

TEST(Sweep, ColdRowUsesLimits) {
    const auto rows = cmd_sweep(internal_theta({kThetaCold}));
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].T, 0.0);
    EXPECT_TRUE(rows[0].limit);
    EXPECT_DOUBLE_EQ(rows[0].ratio_hkd, 0.5);
    EXPECT_EQ(rows[0].ratio_qsm, 0.0);
    EXPECT_DOUBLE_EQ(rows[0].var_q, 0.5);
    EXPECT_DOUBLE_EQ(rows[0].U, 0.5);
    EXPECT_EQ(rows[0].sigma, 0.0);
}

TEST(Sweep, OrderedOmegaMajorTemperatureAscending) {
    SweepConfig c;
    c.omega_list = {2.0, 1.0};
    c.T_list = std::vector<double>{3.0, 0.0, 1.0};
    c.unit_mode = UnitMode::internal;
    const auto rows = cmd_sweep(c);
    ASSERT_EQ(rows.size(), 6u);
    const double expect[6][2] = {{2, 0}, {2, 1}, {2, 3}, {1, 0}, {1, 1}, {1, 3}};
    for (int i = 0; i < 6; ++i) {
        EXPECT_DOUBLE_EQ(rows[i].omega, expect[i][0]);
        EXPECT_DOUBLE_EQ(rows[i].T, expect[i][1]);
    }
}

TEST(Sweep, RatioHkdGrowsWithTemperature) {
    SweepConfig c;
    c.omega_list = {1e13};
    c.T_list = std::vector<double>{};
    for (double T = 0.5; T < 2000.0; T *= 1.5) c.T_list->push_back(T);
    const auto rows = cmd_sweep(c);
    for (std::size_t i = 1; i < rows.size(); ++i) {
        EXPECT_GE(rows[i].ratio_hkd, rows[i - 1].ratio_hkd) << i;
    }
    EXPECT_NEAR(rows.front().ratio_hkd / frozen::kKappaSI, 1.0, 1e-6);
}

TEST(Sweep, DeterministicOutput) {
    const SweepConfig c = internal_theta(hkd::testing::theta_sweep(40));
    const std::string a = render_sweep(cmd_sweep(c), OutputFormat::csv);
    const std::string b = render_sweep(cmd_sweep(c), OutputFormat::csv);
    EXPECT_EQ(a, b);
    EXPECT_EQ(render_sweep(cmd_sweep(c), OutputFormat::json), render_sweep(cmd_sweep(c), OutputFormat::json));
}

TEST(Sweep, CsvLayout) {
    const std::string csv = render_sweep(cmd_sweep(internal_theta({1.0, kThetaCold})), OutputFormat::csv);
    const auto ls = lines(csv);
    ASSERT_EQ(ls.size(), 3u);
    EXPECT_EQ(ls[0], "omega,T,theta,alpha,var_q,var_p,sigma,U,J_ef,T_ef,S_ef,ratio_hkd,ratio_qsm,limit");
    EXPECT_NE(ls[1].find(",inf,"), std::string::npos); // the cold row sorts first
    EXPECT_EQ(ls[1].back(), '1');
    EXPECT_EQ(ls[2].back(), '0');
}

TEST(Sweep, JsonLayout) {
    const auto doc = nlohmann::json::parse(render_sweep(cmd_sweep(internal_theta({1.0, kThetaCold})),
                                                        OutputFormat::json));
    ASSERT_TRUE(doc.is_array());
    ASSERT_EQ(doc.size(), 2u);
    EXPECT_EQ(doc[0]["theta"], "inf");
    EXPECT_EQ(doc[0]["limit"], 1);
    EXPECT_NEAR(doc[1]["U"].get<double>(), frozen::kHalfCoth1, 1e-15);
    std::vector<std::string> keys;
    for (auto it = doc[1].begin(); it != doc[1].end(); ++it) keys.push_back(it.key());
    std::vector<std::string> sorted = sweep_columns();
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(keys, sorted); // nlohmann::json sorts keys
}

TEST(Compare, SiTable) {
    SweepConfig c;
    c.omega_list = {1e13};
    c.T_list = std::vector<double>{1.0, 10.0, 100.0};
    const CompareTable t = cmd_compare(c);
    EXPECT_NEAR(t.kappa / frozen::kKappaSI, 1.0, 1e-14);
    ASSERT_EQ(t.rows.size(), 3u);
    for (const CompareRow& r : t.rows) {
        EXPECT_DOUBLE_EQ(r.ratio_qsm, r.T / 1e13);
        EXPECT_NEAR(r.hkd_over_kappa, r.ratio_hkd / t.kappa, 1e-14 * r.hkd_over_kappa);
        EXPECT_DOUBLE_EQ(r.gap, r.ratio_hkd - r.ratio_qsm);
    }
    EXPECT_GT(t.rows[0].gap, 0.0);
    EXPECT_LT(t.rows[2].gap, 0.0);
    const auto ls = lines(render_compare(t, OutputFormat::csv));
    EXPECT_EQ(ls[0], "# kappa = 3.8191e-12 K·s");
    EXPECT_EQ(ls[2], "T,ratio_hkd,ratio_qsm,ratio_hkd_over_kappa,gap");
    EXPECT_EQ(ls.size(), 6u);
}

TEST(Compare, RejectsColdRows) {
    SweepConfig c;
    c.omega_list = {1.0};
    c.T_list = std::vector<double>{0.0, 1.0};
    EXPECT_THROW(cmd_compare(c), ConfigError);
}

TEST(Compare, InternalKappaHasNoUnit) {
    EXPECT_EQ(format_kappa(0.5, false), "5.0000e-01");
    EXPECT_EQ(format_kappa(frozen::kKappaSI, true), "3.8191e-12 K·s");
}

TEST(Verify, DefaultRunPasses) {
    const VerifyOutcome o = cmd_verify({});
    EXPECT_EQ(o.exit_status, 0);
    EXPECT_EQ(o.reports.size(), identity_names().size());
    for (const auto& r : o.reports) {
        EXPECT_TRUE(r.pass) << r.identity << " " << r.residual;
    }
}

TEST(Verify, FilterSelectsOneIdentity) {
    VerifyOptions opt;
    opt.only = "b_annihilates_thermal_vacuum";
    const VerifyOutcome o = cmd_verify(opt);
    ASSERT_EQ(o.reports.size(), 2u); // Fock and grid oracles
    EXPECT_EQ(o.reports[0].identity, "fock.b_annihilates_thermal_vacuum");
    EXPECT_EQ(o.reports[1].identity, "grid.b_annihilates_thermal_vacuum");
    opt.only = "no_such_identity";
    EXPECT_THROW(cmd_verify(opt), std::invalid_argument);
}

TEST(Verify, SmallBasisFails) {
    VerifyOptions opt;
    opt.dim = 8;
    const VerifyOutcome o = cmd_verify(opt);
    EXPECT_NE(o.exit_status, 0);
    EXPECT_FALSE(all_passed(o.reports));
}

TEST(Verify, ReportCsvHeader) {
    VerifyOptions opt;
    opt.only = "fock.canonical_commutator";
    const auto ls = lines(render_reports(cmd_verify(opt).reports, OutputFormat::csv));
    EXPECT_EQ(ls[0], "identity,oracle,residual,tolerance,pass,relation,detail");
    EXPECT_EQ(ls.size(), 2u);
}

TEST(Constants, RenderIncludesKappa) {
    const std::string csv = render_constants(PhysicalConstants::codata(), OutputFormat::csv);
    EXPECT_NE(csv.find("kappa,3.8191"), std::string::npos);
}

TEST(FormatNumber, RoundTrips) {
    for (double v : {0.1, 1.0 / 3.0, 6.02214076e23, -2.5e-300}) {
        EXPECT_EQ(std::stod(format_number(v)), v);
    }
    EXPECT_EQ(format_number(std::numeric_limits<double>::infinity()), "inf");
}

} // namespace
} // namespace hkd::cli
