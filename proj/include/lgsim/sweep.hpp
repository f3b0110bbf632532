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

#ifndef LGSIM_SWEEP_HPP
#define LGSIM_SWEEP_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lgsim/lgineq.hpp"

namespace lgsim {

struct AngleRange {
    double start = 0.0;
    double stop = 0.0;
    std::size_t steps = 1;

    /// Inclusive linspace; a single step yields {start}.
    std::vector<double> values() const;
};

enum class OutputFormat { Csv, Json };

struct SweepConfig {
    AngleRange theta1_range{0.0, 3.14159265358979323846, 181};
    AngleRange theta2_range{0.0, 3.14159265358979323846, 181};
    std::vector<double> epsilon_values{1.0};
    bool symmetric = false;
    std::string output_path = "lgsim_sweep.csv";
    OutputFormat format = OutputFormat::Csv;
    std::uint64_t sample_count = 0;
    std::uint64_t seed = 42;

    /// Throws Error(InvalidArgument) on out-of-range fields.
    void validate() const;
};

/// Parses flat `key = value` text. `#` starts a comment; arrays are
/// `[a, b, c]`; ranges are `[start, stop, steps]`. Angles may be written with
/// `pi` (e.g. `pi/2`, `3*pi/4`). Throws Error(Parse) naming the line and key.
SweepConfig parse_config(std::string_view text);
/// Reads and parses a config file; Error(Io) if it cannot be read.
SweepConfig load_config(const std::string &path);

inline constexpr const char *kRngDescription =
    "mt19937_64 seeded with the 64-bit seed; u = (x >> 11) * 2^-53; inverse CDF over p(x1x2x3) in index order";

struct SampleEstimate {
    std::uint64_t n = 0;
    std::uint64_t seed = 0;
    std::array<std::uint64_t, 8> counts{};
    std::array<double, 3> K_hat{};   // K12, K23, K13
    std::array<double, 3> K_stderr{};  // sqrt((1 - K^2) / n)
    // Plug-in Shannon entropies of the empirical marginals.
    double H1 = 0.0, H2 = 0.0, H3 = 0.0;
    double H12 = 0.0, H23 = 0.0, H13 = 0.0, H123 = 0.0;
};

/// n pointer-basis draws from outcome_distribution(rho123).
SampleEstimate sample_outcomes(const DensityOp &rho123, std::uint64_t n, std::uint64_t seed);
SampleEstimate sample_outcomes(const std::array<double, 8> &p, std::uint64_t n, std::uint64_t seed);

/// An entropic apparent violation: B1s below 1 by more than this.
inline constexpr double kApparentEntropicTol = 1e-6;
/// A standard apparent violation: naive_B1 above 1 by more than this.
inline constexpr double kApparentStandardTol = 1e-12;

struct SweepSummary {
    std::size_t rows = 0;
    double min_B1s = 0.0, min_B2s = 0.0, min_B3s = 0.0;
    double min_B1p = 0.0;
    double max_B1 = 0.0, max_B2 = 0.0, max_B3 = 0.0;
    double min_B4 = 0.0;
    std::size_t apparent_entropic = 0;
    std::size_t apparent_standard = 0;
    std::size_t apparent_violations = 0;  // rows with either kind
    std::size_t inconsistent_rows = 0;
    double max_oracle_deviation = 0.0;
};

struct SweepResult {
    std::vector<LGReport> rows;
    SweepSummary summary;
    std::vector<SampleEstimate> samples;  // one per row when sample_count > 0
};

/// Rows in order theta1 (outer), theta2, epsilon (inner). With `symmetric`
/// theta2 follows theta1. Rows are computed in parallel and stored in order.
SweepResult run_sweep(const SweepConfig &cfg);
SweepSummary summarize(const std::vector<LGReport> &rows);

/// Column order of the CSV output and the per-row JSON objects.
const std::vector<std::string> &result_columns();
double column_value(const LGReport &row, std::size_t column);

std::string format_csv(const std::vector<LGReport> &rows);
std::string format_samples_csv(const std::vector<LGReport> &rows, const std::vector<SampleEstimate> &samples);
std::string format_json(const SweepResult &result);

/// JSON rows back into reports (only the persisted columns are populated).
std::vector<LGReport> parse_json_rows(std::string_view text);

/// Writes cfg.output_path in cfg.format; with samples present, also writes
/// `<output_path>.samples.csv`. Throws Error(Io) naming the path.
void write_results(const SweepResult &result, const SweepConfig &cfg);

}  // namespace lgsim

#endif
