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

// lgsim: command-line front end over the C API in liblgsim.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <numbers>
#include <string>

#include "CLI11.hpp"
#include "lgsim/lgsim.h"

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kInvariant = 2, kIo = 3 };

int exit_for(lgsim_status status) {
    switch (status) {
        case LGSIM_OK:
            return kOk;
        case LGSIM_ERR_IO:
            return kIo;
        case LGSIM_ERR_INVARIANT:
        case LGSIM_ERR_INTERNAL:
            return kInvariant;
        default:
            return kUsage;
    }
}

int report_failure(lgsim_status status) {
    std::cerr << "lgsim: " << lgsim_status_name(status) << ": " << lgsim_last_error() << "\n";
    return exit_for(status);
}

double field(const lgsim_report *r, const char *name) {
    double v = 0.0;
    lgsim_report_get(r, name, &v);
    return v;
}

void print_row(const char *label, double value, const char *note = "") {
    std::printf("  %-12s %16.12f  %s\n", label, value, note);
}

const char *mark(bool ok) {
    return ok ? "ok" : "VIOLATED";
}

int cmd_point(double t1, double t2, double eps) {
    lgsim_report *r = nullptr;
    if (auto st = lgsim_evaluate_point(t1, t2, eps, &r); st != LGSIM_OK) {
        return report_failure(st);
    }
    std::printf("point theta1=%.12g theta2=%.12g epsilon=%.12g\n\n", t1, t2, eps);

    std::printf("correlators\n");
    for (const char *k : {"K12", "K23", "K13"}) {
        print_row(k, field(r, k));
    }
    std::printf("entropies (bits)\n");
    for (const char *s : {"S1", "S2", "S3", "S12", "S23", "S13", "S123"}) {
        print_row(s, field(r, s));
    }

    std::printf("standard inequalities\n");
    print_row("B1 <= 1", field(r, "B1"), mark(field(r, "B1") <= 1.0 + 1e-12));
    print_row("B2 <= 1", field(r, "B2"), mark(field(r, "B2") <= 1.0 + 1e-12));
    print_row("B3 <= 1", field(r, "B3"), mark(field(r, "B3") <= 1.0 + 1e-12));
    print_row("B4 >= 0", field(r, "B4"), mark(field(r, "B4") >= -1e-12));
    std::printf("entropic inequalities\n");
    print_row("B1s >= 1", field(r, "B1s"), mark(field(r, "B1s") >= 1.0 - 1e-9));
    print_row("B2s >= 1", field(r, "B2s"), mark(field(r, "B2s") >= 1.0 - 1e-9));
    print_row("B3s >= 1", field(r, "B3s"), mark(field(r, "B3s") >= 1.0 - 1e-9));
    print_row("B1p >= 0", field(r, "B1p"), mark(field(r, "B1p") >= -1e-9));

    std::printf("no-middle-measurement comparator\n");
    print_row("naive_S13", field(r, "naive_S13"));
    print_row("naive_K13", field(r, "naive_K13"));
    const double naive_b1 = field(r, "naive_B1");
    print_row("naive_B1", naive_b1, naive_b1 > 1.0 + 1e-12 ? "apparent violation" : "");

    double solo[3], pair[3], center = 0.0;
    lgsim_report_venn(r, solo, pair, &center);
    std::printf("Venn regions (A1, A2, A3)\n");
    print_row("S(A1|A2A3)", solo[0]);
    print_row("S(A2|A1A3)", solo[1]);
    print_row("S(A3|A1A2)", solo[2]);
    print_row("S(A1:A2|A3)", pair[0]);
    print_row("S(A1:A3|A2)", pair[1]);
    print_row("S(A2:A3|A1)", pair[2]);
    print_row("S(A1:A2:A3)", center);

    std::printf("closed-form agreement: max deviation %.3g (%s)\n", field(r, "oracle_max_deviation"),
                lgsim_report_consistent(r) ? "consistent" : "INCONSISTENT");
    const int code = lgsim_report_consistent(r) ? kOk : kInvariant;
    lgsim_report_free(r);
    return code;
}

int cmd_sweep(const std::string &path) {
    lgsim_config *cfg = nullptr;
    if (auto st = lgsim_config_load(path.c_str(), &cfg); st != LGSIM_OK) {
        return report_failure(st);
    }
    lgsim_sweep *sweep = nullptr;
    if (auto st = lgsim_sweep_run(cfg, &sweep); st != LGSIM_OK) {
        lgsim_config_free(cfg);
        return report_failure(st);
    }
    int code = kOk;
    if (auto st = lgsim_sweep_write(sweep, cfg); st != LGSIM_OK) {
        code = report_failure(st);
    } else {
        lgsim_sweep_summary s{};
        lgsim_sweep_summary_get(sweep, &s);
        std::printf("wrote %zu rows to %s\n", s.rows, lgsim_config_output_path(cfg));
        std::printf("  min(B1s) = %.12g\n  min(B2s) = %.12g\n  min(B3s) = %.12g\n", s.min_B1s, s.min_B2s, s.min_B3s);
        std::printf("  min(B1p) = %.12g\n", s.min_B1p);
        std::printf("  max(B1)  = %.12g\n  max(B2)  = %.12g\n  max(B3)  = %.12g\n  min(B4)  = %.12g\n", s.max_B1,
                    s.max_B2, s.max_B3, s.min_B4);
        std::printf("  apparent violations: %zu rows (entropic %zu, standard %zu)\n", s.apparent_violations,
                    s.apparent_entropic, s.apparent_standard);
        std::printf("  max closed-form deviation %.3g, inconsistent rows %zu\n", s.max_oracle_deviation,
                    s.inconsistent_rows);
        if (s.inconsistent_rows > 0) {
            code = kInvariant;
        }
    }
    lgsim_sweep_free(sweep);
    lgsim_config_free(cfg);
    return code;
}

int cmd_sample(double t1, double t2, double eps, std::uint64_t n, std::uint64_t seed) {
    lgsim_sample_result s{};
    if (auto st = lgsim_sample(t1, t2, eps, n, seed, &s); st != LGSIM_OK) {
        return report_failure(st);
    }
    std::printf("# rng: %s\n", lgsim_rng_description());
    std::printf("theta1=%.12g theta2=%.12g epsilon=%.12g n=%llu seed=%llu\n", t1, t2, eps,
                static_cast<unsigned long long>(s.n), static_cast<unsigned long long>(s.seed));
    std::printf("counts (x1x2x3):");
    for (int i = 0; i < 8; ++i) {
        std::printf(" %d%d%d=%llu", (i >> 2) & 1, (i >> 1) & 1, i & 1, static_cast<unsigned long long>(s.counts[i]));
    }
    std::printf("\n");
    const char *kn[3] = {"K12", "K23", "K13"};
    for (int i = 0; i < 3; ++i) {
        std::printf("%s_hat = %.12g +/- %.3g\n", kn[i], s.k_hat[i], s.k_stderr[i]);
    }
    const char *hn[7] = {"H1", "H2", "H3", "H12", "H23", "H13", "H123"};
    for (int i = 0; i < 7; ++i) {
        std::printf("%s_hat = %.12g\n", hn[i], s.h_hat[i]);
    }
    return kOk;
}

int cmd_check() {
    lgsim_checks *checks = nullptr;
    if (auto st = lgsim_checks_run(&checks); st != LGSIM_OK) {
        return report_failure(st);
    }
    for (size_t i = 0; i < lgsim_checks_count(checks); ++i) {
        const char *name = nullptr;
        const char *detail = nullptr;
        int passed = 0;
        lgsim_checks_entry(checks, i, &name, &passed, &detail);
        std::printf("[%s] %s: %s\n", passed ? "PASS" : "FAIL", name, detail);
    }
    const bool ok = lgsim_checks_all_passed(checks) != 0;
    lgsim_checks_free(checks);
    std::printf("%s\n", ok ? "all invariants hold" : "invariant suite FAILED");
    return ok ? kOk : kInvariant;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Three-consecutive-measurement Leggett-Garg simulator"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(lgsim_version()));

    double theta1 = 0.0, theta2 = 0.0, epsilon = 1.0;
    bool degrees = false;
    std::uint64_t n = 1000000, seed = 42;
    std::string config_path;

    auto add_point_options = [&](CLI::App *sub) {
        sub->add_option("--theta1", theta1, "angle of A2's basis relative to A1's (radians)")->required();
        sub->add_option("--theta2", theta2, "angle of A3's basis relative to A2's (radians)")->required();
        sub->add_option("--epsilon", epsilon, "strength of the middle measurement, 0..1")
            ->capture_default_str()
            ->check(CLI::Range(0.0, 1.0));
        sub->add_flag("--degrees", degrees, "read the angles in degrees");
    };

    auto *point = app.add_subcommand("point", "evaluate one (theta1, theta2, epsilon) point");
    add_point_options(point);

    auto *sweep = app.add_subcommand("sweep", "run a config-driven parameter sweep");
    sweep->add_option("--config", config_path, "sweep config file")->required();

    auto *sample = app.add_subcommand("sample", "Monte Carlo pointer readout at one point");
    add_point_options(sample);
    sample->add_option("--n", n, "number of draws")->capture_default_str()->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "64-bit seed")->capture_default_str();

    auto *check = app.add_subcommand("check", "run the invariant suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    if (degrees) {
        theta1 *= std::numbers::pi / 180.0;
        theta2 *= std::numbers::pi / 180.0;
    }
    if (point->parsed()) {
        return cmd_point(theta1, theta2, epsilon);
    }
    if (sweep->parsed()) {
        return cmd_sweep(config_path);
    }
    if (sample->parsed()) {
        return cmd_sample(theta1, theta2, epsilon, n, seed);
    }
    if (check->parsed()) {
        return cmd_check();
    }
    return kUsage;
}
