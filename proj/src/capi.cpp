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

#include "lgsim/lgsim.h"

#include <cstring>
#include <new>
#include <string>
#include <string_view>

#include "lgsim/checks.hpp"
#include "lgsim/error.hpp"
#include "lgsim/lgineq.hpp"
#include "lgsim/measure.hpp"
#include "lgsim/sweep.hpp"

struct lgsim_report {
    lgsim::LGReport value;
};

struct lgsim_config {
    lgsim::SweepConfig value;
};

struct lgsim_sweep {
    lgsim::SweepResult value;
};

struct lgsim_checks {
    std::vector<lgsim::CheckResult> value;
};

namespace {

thread_local std::string g_last_error;

lgsim_status fail(lgsim_status status, std::string message) {
    g_last_error = std::move(message);
    return status;
}

lgsim_status status_for(lgsim::ErrorCode code) {
    switch (code) {
        case lgsim::ErrorCode::Parse:
            return LGSIM_ERR_PARSE;
        case lgsim::ErrorCode::Io:
            return LGSIM_ERR_IO;
        case lgsim::ErrorCode::InvariantViolation:
        case lgsim::ErrorCode::NotHermitian:
            return LGSIM_ERR_INVARIANT;
        default:
            return LGSIM_ERR_INVALID_ARGUMENT;
    }
}

// Runs fn, translating any escaping exception into a status code.
template <class Fn>
lgsim_status guarded(Fn &&fn) noexcept {
    try {
        fn();
        return LGSIM_OK;
    } catch (const lgsim::Error &e) {
        return fail(status_for(e.code()), e.what());
    } catch (const std::bad_alloc &) {
        return fail(LGSIM_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(LGSIM_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(LGSIM_ERR_INTERNAL, "unknown exception");
    }
}

bool lookup(const lgsim::LGReport &r, std::string_view field, double *value) {
    const auto &cols = lgsim::result_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) {
        if (cols[i] == field) {
            *value = lgsim::column_value(r, i);
            return true;
        }
    }
    if (field == "S1") {
        *value = r.S1;
    } else if (field == "S3") {
        *value = r.S3;
    } else if (field == "naive_B1") {
        *value = r.naive_B1;
    } else if (field == "oracle_max_deviation") {
        *value = r.oracle_max_deviation;
    } else {
        return false;
    }
    return true;
}

}  // namespace

extern "C" {

const char *lgsim_version(void) {
    return "1.0.0";
}

const char *lgsim_last_error(void) {
    return g_last_error.c_str();
}

const char *lgsim_status_name(lgsim_status status) {
    switch (status) {
        case LGSIM_OK:
            return "ok";
        case LGSIM_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case LGSIM_ERR_PARSE:
            return "parse error";
        case LGSIM_ERR_IO:
            return "I/O error";
        case LGSIM_ERR_INVARIANT:
            return "invariant violation";
        case LGSIM_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

lgsim_status lgsim_evaluate_point(double theta1, double theta2, double epsilon, lgsim_report **out) {
    if (out == nullptr) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_evaluate_point: out is NULL");
    }
    *out = nullptr;
    return guarded([&] { *out = new lgsim_report{lgsim::evaluate_point(theta1, theta2, epsilon)}; });
}

void lgsim_report_free(lgsim_report *report) {
    delete report;
}

size_t lgsim_field_count(void) {
    return lgsim::result_columns().size();
}

const char *lgsim_field_name(size_t index) {
    const auto &cols = lgsim::result_columns();
    return index < cols.size() ? cols[index].c_str() : nullptr;
}

lgsim_status lgsim_report_get(const lgsim_report *report, const char *field, double *value) {
    if (report == nullptr || field == nullptr || value == nullptr) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_report_get: NULL argument");
    }
    if (!lookup(report->value, field, value)) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, std::string("unknown report field '") + field + "'");
    }
    return LGSIM_OK;
}

lgsim_status lgsim_report_venn(const lgsim_report *report, double solo[3], double pair_cond[3], double *center) {
    if (report == nullptr || solo == nullptr || pair_cond == nullptr || center == nullptr) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_report_venn: NULL argument");
    }
    const auto &v = report->value.venn;
    for (int i = 0; i < 3; ++i) {
        solo[i] = v.solo[i];
        pair_cond[i] = v.pair_cond[i];
    }
    *center = v.center;
    return LGSIM_OK;
}

lgsim_status lgsim_report_distribution(const lgsim_report *report, double p[8]) {
    if (report == nullptr || p == nullptr) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_report_distribution: NULL argument");
    }
    for (int i = 0; i < 8; ++i) {
        p[i] = report->value.distribution[i];
    }
    return LGSIM_OK;
}

int lgsim_report_consistent(const lgsim_report *report) {
    return report != nullptr && report->value.consistent ? 1 : 0;
}

const char *lgsim_rng_description(void) {
    return lgsim::kRngDescription;
}

lgsim_status lgsim_sample(double theta1, double theta2, double epsilon, uint64_t n, uint64_t seed,
                          lgsim_sample_result *out) {
    if (out == nullptr) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_sample: out is NULL");
    }
    return guarded([&] {
        const auto run = lgsim::run_protocol(theta1, theta2, epsilon);
        const auto s = lgsim::sample_outcomes(run.rho123, n, seed);
        lgsim_sample_result r{};
        r.n = s.n;
        r.seed = s.seed;
        for (int i = 0; i < 8; ++i) {
            r.counts[i] = s.counts[i];
        }
        for (int i = 0; i < 3; ++i) {
            r.k_hat[i] = s.K_hat[i];
            r.k_stderr[i] = s.K_stderr[i];
        }
        const double h[7] = {s.H1, s.H2, s.H3, s.H12, s.H23, s.H13, s.H123};
        std::memcpy(r.h_hat, h, sizeof h);
        *out = r;
    });
}

lgsim_status lgsim_config_parse(const char *text, lgsim_config **out) {
    if (text == nullptr || out == nullptr) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_config_parse: NULL argument");
    }
    *out = nullptr;
    return guarded([&] { *out = new lgsim_config{lgsim::parse_config(text)}; });
}

lgsim_status lgsim_config_load(const char *path, lgsim_config **out) {
    if (path == nullptr || out == nullptr) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_config_load: NULL argument");
    }
    *out = nullptr;
    return guarded([&] { *out = new lgsim_config{lgsim::load_config(path)}; });
}

void lgsim_config_free(lgsim_config *config) {
    delete config;
}

const char *lgsim_config_output_path(const lgsim_config *config) {
    return config != nullptr ? config->value.output_path.c_str() : nullptr;
}

lgsim_status lgsim_sweep_run(const lgsim_config *config, lgsim_sweep **out) {
    if (config == nullptr || out == nullptr) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_sweep_run: NULL argument");
    }
    *out = nullptr;
    return guarded([&] { *out = new lgsim_sweep{lgsim::run_sweep(config->value)}; });
}

void lgsim_sweep_free(lgsim_sweep *sweep) {
    delete sweep;
}

size_t lgsim_sweep_row_count(const lgsim_sweep *sweep) {
    return sweep != nullptr ? sweep->value.rows.size() : 0;
}

lgsim_status lgsim_sweep_value(const lgsim_sweep *sweep, size_t row, const char *field, double *value) {
    if (sweep == nullptr || field == nullptr || value == nullptr) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_sweep_value: NULL argument");
    }
    if (row >= sweep->value.rows.size()) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_sweep_value: row index out of range");
    }
    if (!lookup(sweep->value.rows[row], field, value)) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, std::string("unknown report field '") + field + "'");
    }
    return LGSIM_OK;
}

lgsim_status lgsim_sweep_summary_get(const lgsim_sweep *sweep, lgsim_sweep_summary *out) {
    if (sweep == nullptr || out == nullptr) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_sweep_summary_get: NULL argument");
    }
    const auto &s = sweep->value.summary;
    *out = lgsim_sweep_summary{s.rows,
                               s.min_B1s,
                               s.min_B2s,
                               s.min_B3s,
                               s.min_B1p,
                               s.max_B1,
                               s.max_B2,
                               s.max_B3,
                               s.min_B4,
                               s.apparent_entropic,
                               s.apparent_standard,
                               s.apparent_violations,
                               s.inconsistent_rows,
                               s.max_oracle_deviation};
    return LGSIM_OK;
}

lgsim_status lgsim_sweep_write(const lgsim_sweep *sweep, const lgsim_config *config) {
    if (sweep == nullptr || config == nullptr) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_sweep_write: NULL argument");
    }
    return guarded([&] { lgsim::write_results(sweep->value, config->value); });
}

lgsim_status lgsim_checks_run(lgsim_checks **out) {
    if (out == nullptr) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_checks_run: out is NULL");
    }
    *out = nullptr;
    return guarded([&] { *out = new lgsim_checks{lgsim::run_invariant_suite()}; });
}

void lgsim_checks_free(lgsim_checks *checks) {
    delete checks;
}

size_t lgsim_checks_count(const lgsim_checks *checks) {
    return checks != nullptr ? checks->value.size() : 0;
}

lgsim_status lgsim_checks_entry(const lgsim_checks *checks, size_t index, const char **name, int *passed,
                                const char **detail) {
    if (checks == nullptr || index >= checks->value.size()) {
        return fail(LGSIM_ERR_INVALID_ARGUMENT, "lgsim_checks_entry: bad handle or index");
    }
    const auto &c = checks->value[index];
    if (name != nullptr) {
        *name = c.name.c_str();
    }
    if (passed != nullptr) {
        *passed = c.passed ? 1 : 0;
    }
    if (detail != nullptr) {
        *detail = c.detail.c_str();
    }
    return LGSIM_OK;
}

int lgsim_checks_all_passed(const lgsim_checks *checks) {
    if (checks == nullptr) {
        return 0;
    }
    for (const auto &c : checks->value) {
        if (!c.passed) {
            return 0;
        }
    }
    return 1;
}

}  // extern "C"
