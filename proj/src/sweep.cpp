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

#include "lgsim/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "json.hpp"
#include "lgsim/error.hpp"
#include "parallel.hpp"

namespace lgsim {

namespace {

// ---------------------------------------------------------------------------
// Config parsing

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

class LineError {
   public:
    LineError(std::size_t line, std::string key) : line_(line), key_(std::move(key)) {
    }
    [[noreturn]] void fail(const std::string &why) const {
        std::ostringstream msg;
        msg << "config line " << line_;
        if (!key_.empty()) {
            msg << ", field '" << key_ << "'";
        }
        msg << ": " << why;
        throw Error(ErrorCode::Parse, msg.str());
    }

   private:
    std::size_t line_;
    std::string key_;
};

double parse_plain_number(std::string_view tok, const LineError &where) {
    tok = trim(tok);
    if (tok == "pi") {
        return std::numbers::pi;
    }
    double v = 0.0;
    const auto *end = tok.data() + tok.size();
    const auto res = std::from_chars(tok.data(), end, v);
    if (tok.empty() || res.ec != std::errc() || res.ptr != end) {
        where.fail("expected a number, got '" + std::string(tok) + "'");
    }
    return v;
}

// number := ['-'] factor (('*' | '/') factor)*, factor := decimal | pi
double parse_number(std::string_view text, const LineError &where) {
    text = trim(text);
    double sign = 1.0;
    if (!text.empty() && text.front() == '-') {
        sign = -1.0;
        text.remove_prefix(1);
    }
    double value = 0.0;
    char op = '*';
    bool first = true;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = text.find_first_of("*/", pos);
        const std::string_view tok = text.substr(pos, next == std::string_view::npos ? next : next - pos);
        const double f = parse_plain_number(tok, where);
        if (first) {
            value = f;
            first = false;
        } else if (op == '*') {
            value *= f;
        } else {
            if (f == 0.0) {
                where.fail("division by zero");
            }
            value /= f;
        }
        if (next == std::string_view::npos) {
            break;
        }
        op = text[next];
        pos = next + 1;
    }
    if (!std::isfinite(value)) {
        where.fail("value is not finite");
    }
    return sign * value;
}

std::vector<std::string_view> parse_array(std::string_view text, const LineError &where) {
    text = trim(text);
    if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
        where.fail("expected a bracketed list like [a, b, c]");
    }
    text = trim(text.substr(1, text.size() - 2));
    std::vector<std::string_view> items;
    if (text.empty()) {
        return items;
    }
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const auto item = trim(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
        if (item.empty()) {
            where.fail("empty list element");
        }
        items.push_back(item);
        if (comma == std::string_view::npos) {
            break;
        }
        pos = comma + 1;
    }
    return items;
}

std::uint64_t parse_unsigned(std::string_view text, const LineError &where) {
    text = trim(text);
    std::uint64_t v = 0;
    const auto *end = text.data() + text.size();
    const auto res = std::from_chars(text.data(), end, v);
    if (text.empty() || res.ec != std::errc() || res.ptr != end) {
        where.fail("expected a nonnegative integer, got '" + std::string(text) + "'");
    }
    return v;
}

AngleRange parse_range(std::string_view text, const LineError &where) {
    const auto items = parse_array(text, where);
    if (items.size() != 3) {
        where.fail("expected [start, stop, steps]");
    }
    AngleRange r;
    r.start = parse_number(items[0], where);
    r.stop = parse_number(items[1], where);
    r.steps = parse_unsigned(items[2], where);
    if (r.steps < 1) {
        where.fail("steps must be >= 1");
    }
    if (r.start > r.stop) {
        where.fail("start must not exceed stop");
    }
    return r;
}

bool parse_bool(std::string_view text, const LineError &where) {
    text = trim(text);
    if (text == "true") {
        return true;
    }
    if (text == "false") {
        return false;
    }
    where.fail("expected true or false");
}

std::string parse_string(std::string_view text, const LineError &where) {
    text = trim(text);
    if (text.size() >= 2 && text.front() == '"' && text.back() == '"') {
        text = text.substr(1, text.size() - 2);
    }
    if (text.empty()) {
        where.fail("empty string");
    }
    return std::string(text);
}

// ---------------------------------------------------------------------------
// Output

std::string format_number(double v) {
    if (v == 0.0) {
        v = 0.0;  // no "-0"
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

using ReportField = double LGReport::*;

struct Column {
    const char *name;
    ReportField field;
};

const std::vector<Column> &columns() {
    static const std::vector<Column> cols = {
        {"theta1", &LGReport::theta1},   {"theta2", &LGReport::theta2},      {"epsilon", &LGReport::epsilon},
        {"K12", &LGReport::K12},         {"K23", &LGReport::K23},            {"K13", &LGReport::K13},
        {"S12", &LGReport::S12},         {"S23", &LGReport::S23},            {"S13", &LGReport::S13},
        {"S2", &LGReport::S2},           {"S123", &LGReport::S123},          {"B1", &LGReport::B1},
        {"B2", &LGReport::B2},           {"B3", &LGReport::B3},              {"B4", &LGReport::B4},
        {"B1s", &LGReport::B1s},         {"B2s", &LGReport::B2s},            {"B3s", &LGReport::B3s},
        {"B1p", &LGReport::B1p},         {"naive_S13", &LGReport::naive_S13}, {"naive_K13", &LGReport::naive_K13},
    };
    return cols;
}

void write_file(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::Io, "cannot open '" + path + "' for writing");
    }
    out << content;
    out.flush();
    if (!out) {
        throw Error(ErrorCode::Io, "failed writing '" + path + "'");
    }
}

nlohmann::json summary_json(const SweepSummary &s) {
    return {
        {"rows", s.rows},
        {"min_B1s", s.min_B1s},
        {"min_B2s", s.min_B2s},
        {"min_B3s", s.min_B3s},
        {"min_B1p", s.min_B1p},
        {"max_B1", s.max_B1},
        {"max_B2", s.max_B2},
        {"max_B3", s.max_B3},
        {"min_B4", s.min_B4},
        {"apparent_entropic", s.apparent_entropic},
        {"apparent_standard", s.apparent_standard},
        {"apparent_violations", s.apparent_violations},
        {"inconsistent_rows", s.inconsistent_rows},
        {"max_oracle_deviation", s.max_oracle_deviation},
    };
}

double plugin_entropy(const std::vector<std::uint64_t> &counts, std::uint64_t n) {
    double h = 0.0;
    for (auto c : counts) {
        if (c > 0) {
            const double p = static_cast<double>(c) / static_cast<double>(n);
            h -= p * std::log2(p);
        }
    }
    return h;
}

}  // namespace

std::vector<double> AngleRange::values() const {
    std::vector<double> out;
    out.reserve(steps);
    if (steps == 1) {
        out.push_back(start);
        return out;
    }
    const double span = stop - start;
    for (std::size_t i = 0; i < steps; ++i) {
        out.push_back(i + 1 == steps ? stop : start + span * static_cast<double>(i) / static_cast<double>(steps - 1));
    }
    return out;
}

void SweepConfig::validate() const {
    for (const auto *r : {&theta1_range, &theta2_range}) {
        if (r->steps < 1 || !(r->start <= r->stop) || !std::isfinite(r->start) || !std::isfinite(r->stop)) {
            throw Error(ErrorCode::InvalidArgument, "sweep config: angle ranges need steps >= 1 and start <= stop");
        }
    }
    if (epsilon_values.empty()) {
        throw Error(ErrorCode::InvalidArgument, "sweep config: epsilon_values is empty");
    }
    for (double e : epsilon_values) {
        if (!(e >= 0.0 && e <= 1.0)) {
            throw Error(ErrorCode::InvalidArgument, "sweep config: epsilon values must lie in [0, 1]");
        }
    }
    if (output_path.empty()) {
        throw Error(ErrorCode::InvalidArgument, "sweep config: output_path is empty");
    }
}

SweepConfig parse_config(std::string_view text) {
    SweepConfig cfg;
    std::set<std::string> seen;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            LineError(line_no, "").fail("expected key = value");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        const LineError where(line_no, key);
        if (key.empty()) {
            where.fail("missing key");
        }
        if (!seen.insert(key).second) {
            where.fail("key given twice");
        }
        if (value.empty()) {
            where.fail("missing value");
        }

        if (key == "theta1_range") {
            cfg.theta1_range = parse_range(value, where);
        } else if (key == "theta2_range") {
            cfg.theta2_range = parse_range(value, where);
        } else if (key == "epsilon_values") {
            cfg.epsilon_values.clear();
            for (auto item : parse_array(value, where)) {
                const double e = parse_number(item, where);
                if (!(e >= 0.0 && e <= 1.0)) {
                    where.fail("epsilon " + std::string(item) + " is outside [0, 1]");
                }
                cfg.epsilon_values.push_back(e);
            }
            if (cfg.epsilon_values.empty()) {
                where.fail("at least one epsilon is required");
            }
        } else if (key == "symmetric") {
            cfg.symmetric = parse_bool(value, where);
        } else if (key == "output_path") {
            cfg.output_path = parse_string(value, where);
        } else if (key == "format") {
            const std::string f = parse_string(value, where);
            if (f == "csv") {
                cfg.format = OutputFormat::Csv;
            } else if (f == "json") {
                cfg.format = OutputFormat::Json;
            } else {
                where.fail("format must be csv or json");
            }
        } else if (key == "sample_count") {
            cfg.sample_count = parse_unsigned(value, where);
        } else if (key == "seed") {
            cfg.seed = parse_unsigned(value, where);
        } else {
            where.fail("unknown key");
        }
    }
    if (cfg.symmetric && seen.count("theta2_range")) {
        throw Error(ErrorCode::Parse, "config: symmetric=true forces theta2 = theta1; theta2_range must not be set");
    }
    cfg.validate();
    return cfg;
}

SweepConfig load_config(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorCode::Io, "cannot read config '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

SampleEstimate sample_outcomes(const std::array<double, 8> &p, std::uint64_t n, std::uint64_t seed) {
    if (n < 1) {
        throw Error(ErrorCode::InvalidArgument, "sample_outcomes: n must be >= 1");
    }
    std::array<double, 8> cdf{};
    double acc = 0.0;
    for (std::size_t i = 0; i < 8; ++i) {
        acc += std::max(0.0, p[i]);
        cdf[i] = acc;
    }
    // Normalize away roundoff so every u in [0, 1) lands in some cell.
    for (auto &c : cdf) {
        c /= acc;
    }
    cdf[7] = std::numeric_limits<double>::infinity();

    SampleEstimate est;
    est.n = n;
    est.seed = seed;
    std::mt19937_64 gen(seed);
    for (std::uint64_t draw = 0; draw < n; ++draw) {
        const double u = static_cast<double>(gen() >> 11) * 0x1p-53;
        std::size_t cell = 0;
        while (u >= cdf[cell]) {
            ++cell;
        }
        ++est.counts[cell];
    }

    const double dn = static_cast<double>(n);
    std::array<double, 8> freq{};
    for (std::size_t i = 0; i < 8; ++i) {
        freq[i] = static_cast<double>(est.counts[i]) / dn;
    }
    const Correlators k = correlators(freq);
    est.K_hat = {k.K12, k.K23, k.K13};
    for (std::size_t i = 0; i < 3; ++i) {
        est.K_stderr[i] = std::sqrt(std::max(0.0, 1.0 - est.K_hat[i] * est.K_hat[i]) / dn);
    }

    // Marginal counts by bitmask over (x1, x2, x3), x1 most significant.
    auto marginal = [&](unsigned mask) {
        std::vector<std::uint64_t> m(8, 0);
        for (unsigned i = 0; i < 8; ++i) {
            m[i & mask] += est.counts[i];
        }
        return plugin_entropy(m, n);
    };
    est.H1 = marginal(0b100);
    est.H2 = marginal(0b010);
    est.H3 = marginal(0b001);
    est.H12 = marginal(0b110);
    est.H23 = marginal(0b011);
    est.H13 = marginal(0b101);
    est.H123 = marginal(0b111);
    return est;
}

SampleEstimate sample_outcomes(const DensityOp &rho123, std::uint64_t n, std::uint64_t seed) {
    return sample_outcomes(outcome_distribution(rho123), n, seed);
}

SweepSummary summarize(const std::vector<LGReport> &rows) {
    SweepSummary s;
    s.rows = rows.size();
    if (rows.empty()) {
        return s;
    }
    constexpr double inf = std::numeric_limits<double>::infinity();
    s.min_B1s = s.min_B2s = s.min_B3s = s.min_B1p = s.min_B4 = inf;
    s.max_B1 = s.max_B2 = s.max_B3 = -inf;
    for (const auto &r : rows) {
        s.min_B1s = std::min(s.min_B1s, r.B1s);
        s.min_B2s = std::min(s.min_B2s, r.B2s);
        s.min_B3s = std::min(s.min_B3s, r.B3s);
        s.min_B1p = std::min(s.min_B1p, r.B1p);
        s.min_B4 = std::min(s.min_B4, r.B4);
        s.max_B1 = std::max(s.max_B1, r.B1);
        s.max_B2 = std::max(s.max_B2, r.B2);
        s.max_B3 = std::max(s.max_B3, r.B3);
        const bool entropic = r.B1s < 1.0 - kApparentEntropicTol;
        const bool standard = r.naive_B1 > 1.0 + kApparentStandardTol;
        s.apparent_entropic += entropic;
        s.apparent_standard += standard;
        s.apparent_violations += entropic || standard;
        s.inconsistent_rows += !r.consistent;
        s.max_oracle_deviation = std::max(s.max_oracle_deviation, r.oracle_max_deviation);
    }
    return s;
}

SweepResult run_sweep(const SweepConfig &cfg) {
    cfg.validate();
    struct Point {
        double theta1, theta2, epsilon;
    };
    std::vector<Point> grid;
    const auto t1s = cfg.theta1_range.values();
    const auto t2s = cfg.theta2_range.values();
    for (double t1 : t1s) {
        if (cfg.symmetric) {
            for (double e : cfg.epsilon_values) {
                grid.push_back({t1, t1, e});
            }
            continue;
        }
        for (double t2 : t2s) {
            for (double e : cfg.epsilon_values) {
                grid.push_back({t1, t2, e});
            }
        }
    }

    SweepResult result;
    result.rows.resize(grid.size());
    if (cfg.sample_count > 0) {
        result.samples.resize(grid.size());
    }
    detail::parallel_for(grid.size(), [&](std::size_t i) {
        const Point &pt = grid[i];
        result.rows[i] = evaluate_point(pt.theta1, pt.theta2, pt.epsilon);
        if (cfg.sample_count > 0) {
            result.samples[i] = sample_outcomes(result.rows[i].distribution, cfg.sample_count, cfg.seed + i);
        }
    });
    result.summary = summarize(result.rows);
    return result;
}

const std::vector<std::string> &result_columns() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto &c : columns()) {
            out.emplace_back(c.name);
        }
        return out;
    }();
    return names;
}

double column_value(const LGReport &row, std::size_t column) {
    if (column >= columns().size()) {
        throw Error(ErrorCode::InvalidArgument, "column index out of range");
    }
    return row.*(columns()[column].field);
}

std::string format_csv(const std::vector<LGReport> &rows) {
    std::string out;
    const auto &cols = columns();
    for (std::size_t c = 0; c < cols.size(); ++c) {
        out += c ? "," : "";
        out += cols[c].name;
    }
    out += '\n';
    for (const auto &r : rows) {
        for (std::size_t c = 0; c < cols.size(); ++c) {
            out += c ? "," : "";
            out += format_number(r.*(cols[c].field));
        }
        out += '\n';
    }
    return out;
}

std::string format_samples_csv(const std::vector<LGReport> &rows, const std::vector<SampleEstimate> &samples) {
    if (rows.size() != samples.size()) {
        throw Error(ErrorCode::InvalidArgument, "format_samples_csv: one sample estimate per row required");
    }
    std::string out = std::string("# rng: ") + kRngDescription + "\n";
    out +=
        "theta1,theta2,epsilon,n,seed,c000,c001,c010,c011,c100,c101,c110,c111,"
        "K12_hat,K23_hat,K13_hat,K12_stderr,K23_stderr,K13_stderr,H12_hat,H23_hat,H13_hat,H123_hat\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto &r = rows[i];
        const auto &s = samples[i];
        out += format_number(r.theta1) + "," + format_number(r.theta2) + "," + format_number(r.epsilon) + ",";
        out += std::to_string(s.n) + "," + std::to_string(s.seed);
        for (auto c : s.counts) {
            out += "," + std::to_string(c);
        }
        for (double k : s.K_hat) {
            out += "," + format_number(k);
        }
        for (double e : s.K_stderr) {
            out += "," + format_number(e);
        }
        for (double h : {s.H12, s.H23, s.H13, s.H123}) {
            out += "," + format_number(h);
        }
        out += '\n';
    }
    return out;
}

std::string format_json(const SweepResult &result) {
    nlohmann::json doc;
    doc["columns"] = result_columns();
    nlohmann::json rows = nlohmann::json::array();
    for (const auto &r : result.rows) {
        nlohmann::json row;
        for (const auto &c : columns()) {
            row[c.name] = r.*(c.field);
        }
        rows.push_back(std::move(row));
    }
    doc["rows"] = std::move(rows);
    doc["summary"] = summary_json(result.summary);
    if (!result.samples.empty()) {
        doc["rng"] = kRngDescription;
        nlohmann::json samples = nlohmann::json::array();
        for (const auto &s : result.samples) {
            samples.push_back({{"n", s.n},
                               {"seed", s.seed},
                               {"counts", s.counts},
                               {"K_hat", s.K_hat},
                               {"K_stderr", s.K_stderr},
                               {"H12_hat", s.H12},
                               {"H23_hat", s.H23},
                               {"H13_hat", s.H13},
                               {"H123_hat", s.H123}});
        }
        doc["samples"] = std::move(samples);
    }
    return doc.dump(2) + "\n";
}

std::vector<LGReport> parse_json_rows(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorCode::Parse, std::string("result JSON: ") + e.what());
    }
    if (!doc.contains("rows") || !doc["rows"].is_array()) {
        throw Error(ErrorCode::Parse, "result JSON: missing 'rows' array");
    }
    std::vector<LGReport> rows;
    for (const auto &jr : doc["rows"]) {
        LGReport r;
        for (const auto &c : columns()) {
            if (!jr.contains(c.name) || !jr[c.name].is_number()) {
                throw Error(ErrorCode::Parse, std::string("result JSON: row lacks numeric '") + c.name + "'");
            }
            r.*(c.field) = jr[c.name].get<double>();
        }
        rows.push_back(r);
    }
    return rows;
}

void write_results(const SweepResult &result, const SweepConfig &cfg) {
    write_file(cfg.output_path, cfg.format == OutputFormat::Csv ? format_csv(result.rows) : format_json(result));
    if (!result.samples.empty()) {
        write_file(cfg.output_path + ".samples.csv", format_samples_csv(result.rows, result.samples));
    }
}

}  // namespace lgsim
