// Copyright 2026 The lgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "doctest.h"
#include "lgsim/error.hpp"
#include "lgsim/measure.hpp"
#include "lgsim/sweep.hpp"

using namespace lgsim;
using std::numbers::pi;

namespace {

ErrorCode code_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.code();
    }
    FAIL("expected an lgsim::Error");
    return ErrorCode::InvalidArgument;
}

std::string message_of(auto &&fn) {
    try {
        fn();
    } catch (const Error &e) {
        return e.what();
    }
    return "";
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::size_t count_lines(const std::string &s) {
    std::size_t n = 0;
    for (char c : s) {
        n += c == '\n';
    }
    return n;
}

std::filesystem::path scratch(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("lgsim_test_" + name);
}

}  // namespace

TEST_CASE("empty config gives the defaults") {
    const auto cfg = parse_config("");
    CHECK(cfg.theta1_range.start == 0.0);
    CHECK(cfg.theta1_range.stop == doctest::Approx(pi));
    CHECK(cfg.theta1_range.steps == 181);
    CHECK(cfg.theta2_range.steps == 181);
    CHECK(cfg.epsilon_values == std::vector<double>{1.0});
    CHECK_FALSE(cfg.symmetric);
    CHECK(cfg.format == OutputFormat::Csv);
    CHECK(cfg.sample_count == 0);
    CHECK(cfg.seed == 42);
}

TEST_CASE("config parsing") {
    const auto cfg = parse_config(
        "# a comment\n"
        "theta1_range = [0, pi/2, 3]\n"
        "epsilon_values = [0, 0.5, 1]   # trailing\n"
        "symmetric = true\n"
        "format = json\n"
        "output_path = \"out.json\"\n"
        "seed = 7\n");
    CHECK(cfg.theta1_range.stop == doctest::Approx(pi / 2));
    CHECK(cfg.theta1_range.values().size() == 3);
    CHECK(cfg.epsilon_values.size() == 3);
    CHECK(cfg.symmetric);
    CHECK(cfg.format == OutputFormat::Json);
    CHECK(cfg.output_path == "out.json");
    CHECK(cfg.seed == 7);
}

TEST_CASE("config errors") {
    CHECK(code_of([] { parse_config("epsilon_values = [1.5]"); }) == ErrorCode::Parse);
    CHECK(message_of([] { parse_config("\nepsilon_values = [1.5]"); }).find("line 2") != std::string::npos);
    CHECK(message_of([] { parse_config("epsilon_values = [1.5]"); }).find("epsilon_values") != std::string::npos);
    CHECK(code_of([] { parse_config("symmetric = true\ntheta2_range = [0, 1, 2]"); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_config("bogus = 1"); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_config("seed = 1\nseed = 2"); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_config("theta1_range = [0, 1]"); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_config("theta1_range = [0, 1, 0]"); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_config("format = xml"); }) == ErrorCode::Parse);
    CHECK(code_of([] { parse_config("no equals sign"); }) == ErrorCode::Parse);
    CHECK(code_of([] { load_config("/nonexistent/lgsim.cfg"); }) == ErrorCode::Io);
}

TEST_CASE("single-step sweep at the origin") {
    const auto cfg = parse_config("theta1_range = [0, 0, 1]\ntheta2_range = [0, 0, 1]");
    const auto result = run_sweep(cfg);
    REQUIRE(result.rows.size() == 1);
    const auto &r = result.rows[0];
    for (double b : {r.B1, r.B2, r.B3, r.B1s, r.B2s, r.B3s}) {
        CHECK(b == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK(r.B4 == doctest::Approx(4.0));

    const std::string csv = format_csv(result.rows);
    CHECK(count_lines(csv) == 2);
    CHECK(csv.substr(0, csv.find('\n')) ==
          "theta1,theta2,epsilon,K12,K23,K13,S12,S23,S13,S2,S123,B1,B2,B3,B4,B1s,B2s,B3s,B1p,naive_S13,naive_K13");
}

TEST_CASE("row order and symmetric sweeps") {
    const auto cfg = parse_config("theta1_range = [0, 1, 2]\ntheta2_range = [0, 2, 3]\nepsilon_values = [0, 1]");
    const auto rows = run_sweep(cfg).rows;
    REQUIRE(rows.size() == 12);
    CHECK(rows[0].epsilon == 0.0);
    CHECK(rows[1].epsilon == 1.0);
    CHECK(rows[2].theta2 == 1.0);
    CHECK(rows[6].theta1 == 1.0);

    const auto sym = run_sweep(parse_config("symmetric = true\ntheta1_range = [0, pi, 9]\nepsilon_values = [0]"));
    CHECK(sym.rows.size() == 9);
    for (const auto &r : sym.rows) {
        CHECK(r.theta1 == r.theta2);
    }
    CHECK(sym.summary.apparent_violations > 0);
    CHECK(sym.summary.apparent_entropic > 0);
    CHECK(sym.summary.min_B1p >= -1e-9);
}

TEST_CASE("CSV output is deterministic") {
    const auto cfg = parse_config("theta1_range = [0, pi, 7]\ntheta2_range = [0, pi, 5]\nepsilon_values = [0.3, 1]");
    CHECK(format_csv(run_sweep(cfg).rows) == format_csv(run_sweep(cfg).rows));
}

TEST_CASE("JSON round trip") {
    const auto cfg = parse_config("theta1_range = [0, pi, 4]\ntheta2_range = [0.1, 2, 3]\nepsilon_values = [0.25, 1]");
    const auto result = run_sweep(cfg);
    const auto back = parse_json_rows(format_json(result));
    REQUIRE(back.size() == result.rows.size());
    for (std::size_t i = 0; i < back.size(); ++i) {
        for (std::size_t c = 0; c < result_columns().size(); ++c) {
            CHECK(column_value(back[i], c) == column_value(result.rows[i], c));
        }
    }
    CHECK(code_of([] { parse_json_rows("{not json"); }) == ErrorCode::Parse);
}

TEST_CASE("writing results") {
    const auto path = scratch("sweep.csv");
    auto cfg = parse_config("theta1_range = [0, 1, 2]\ntheta2_range = [0, 1, 2]\nsample_count = 100\nseed = 3");
    cfg.output_path = path.string();
    const auto result = run_sweep(cfg);
    CHECK(result.samples.size() == 4);
    write_results(result, cfg);
    CHECK(count_lines(slurp(path)) == 5);
    const std::string sidecar = slurp(path.string() + ".samples.csv");
    CHECK(sidecar.rfind(std::string("# rng: ") + kRngDescription, 0) == 0);
    std::filesystem::remove(path);
    std::filesystem::remove(path.string() + ".samples.csv");

    cfg.output_path = "/nonexistent/dir/out.csv";
    const std::string msg = message_of([&] { write_results(result, cfg); });
    CHECK(msg.find("/nonexistent/dir/out.csv") != std::string::npos);
    CHECK(code_of([&] { write_results(result, cfg); }) == ErrorCode::Io);
}

TEST_CASE("default grid size") {
    const auto values = SweepConfig{}.theta1_range.values();
    CHECK(values.size() == 181);
    CHECK(values.front() == 0.0);
    CHECK(values.back() == doctest::Approx(pi));
    CHECK(values[90] == doctest::Approx(pi / 2));
}

TEST_CASE("sampling") {
    const auto still = sample_outcomes(run_protocol(0.0, 0.0, 1.0).rho123, 1000, 5);
    CHECK(still.counts[0] + still.counts[7] == 1000);
    CHECK(still.K_hat == std::array<double, 3>{1.0, 1.0, 1.0});

    const auto rho = run_protocol(1.0, 2.0, 0.6).rho123;
    const auto a = sample_outcomes(rho, 5000, 11);
    const auto b = sample_outcomes(rho, 5000, 11);
    const auto c = sample_outcomes(rho, 5000, 12);
    CHECK(a.counts == b.counts);
    CHECK(a.counts != c.counts);
    CHECK(a.K_stderr[0] == doctest::Approx(std::sqrt((1 - a.K_hat[0] * a.K_hat[0]) / 5000.0)));

    CHECK(code_of([&] { sample_outcomes(rho, 0, 1); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("sample estimates converge on strong probes") {
    const auto run = run_protocol(0.7, 1.8, 1.0);
    const auto s = sample_outcomes(run.rho123, 1000000, 99);
    const auto exact = evaluate_point(0.7, 1.8, 1.0);
    CHECK(std::abs(s.K_hat[0] - exact.K12) <= 5 * s.K_stderr[0]);
    CHECK(std::abs(s.K_hat[1] - exact.K23) <= 5 * s.K_stderr[1]);
    CHECK(std::abs(s.K_hat[2] - exact.K13) <= 5 * s.K_stderr[2]);
    CHECK(std::abs(s.H12 - exact.S12) < 0.01);
    CHECK(std::abs(s.H23 - exact.S23) < 0.01);
    CHECK(std::abs(s.H13 - exact.S13) < 0.01);
}
