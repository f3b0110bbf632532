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

#include "lgsim/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "lgsim/error.hpp"

namespace lgsim {

namespace {

constexpr double kProbSlack = 1e-12;
constexpr double kSumTol = 1e-9;
constexpr double kEigenClamp = 1e-9;

double xlog2x(double x) {
    return x > 0.0 ? x * std::log2(x) : 0.0;
}

}  // namespace

double binary_entropy(double x) {
    if (!(x >= -kProbSlack && x <= 1.0 + kProbSlack)) {
        std::ostringstream msg;
        msg << "binary_entropy: argument " << x << " outside [0, 1]";
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    x = std::clamp(x, 0.0, 1.0);
    return -xlog2x(x) - xlog2x(1.0 - x);
}

double shannon(std::span<const double> p) {
    double sum = 0.0;
    for (double v : p) {
        if (!(v >= -kProbSlack)) {
            throw Error(ErrorCode::InvalidArgument, "shannon: negative probability");
        }
        sum += v;
    }
    if (std::abs(sum - 1.0) > kSumTol) {
        std::ostringstream msg;
        msg << "shannon: probabilities sum to " << sum;
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
    double h = 0.0;
    for (double v : p) {
        h -= xlog2x(v);
    }
    return h;
}

double von_neumann(const DensityOp &rho) {
    const auto spectrum = hermitian_eigenvalues(rho.mat());
    double h = 0.0;
    for (double lambda : spectrum) {
        if (lambda < -kEigenClamp) {
            std::ostringstream msg;
            msg << "von_neumann: eigenvalue " << lambda << " below -" << kEigenClamp;
            throw Error(ErrorCode::InvariantViolation, msg.str());
        }
        h -= xlog2x(lambda);
    }
    return h;
}

double subsystem_entropy(const DensityOp &rho, const std::vector<std::string> &keep) {
    return von_neumann(partial_trace(rho, keep));
}

SubsetEntropies subset_entropies(const DensityOp &rho123) {
    const auto &factors = rho123.layout().factors();
    if (factors.size() != 3) {
        throw Error(ErrorCode::InvalidArgument, "subset_entropies: expected exactly three parties");
    }
    SubsetEntropies s;
    s.at[7] = von_neumann(rho123);
    for (unsigned mask = 1; mask < 7; ++mask) {
        std::vector<std::string> keep;
        for (unsigned pos = 0; pos < 3; ++pos) {
            if (mask & (1u << pos)) {
                keep.push_back(factors[pos].label);
            }
        }
        s.at[mask] = subsystem_entropy(rho123, keep);
    }
    return s;
}

double VennEntries3::total() const {
    return std::accumulate(solo.begin(), solo.end(), 0.0) + std::accumulate(pair_cond.begin(), pair_cond.end(), 0.0) +
           center;
}

VennEntries3 venn3(const SubsetEntropies &s, std::array<std::string, 3> labels) {
    VennEntries3 v;
    v.labels = std::move(labels);
    for (unsigned i = 0; i < 3; ++i) {
        const unsigned rest = 7u & ~(1u << i);
        v.solo[i] = s.of(7) - s.of(rest);
    }
    // (X_a : X_b | X_c) = S(ac) + S(bc) - S(c) - S(abc)
    constexpr unsigned pairs[3][3] = {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}};
    for (unsigned k = 0; k < 3; ++k) {
        const unsigned a = 1u << pairs[k][0];
        const unsigned b = 1u << pairs[k][1];
        const unsigned c = 1u << pairs[k][2];
        v.pair_cond[k] = s.of(a | c) + s.of(b | c) - s.of(c) - s.of(7);
    }
    v.center = s.of(1) + s.of(2) + s.of(4) - s.of(3) - s.of(5) - s.of(6) + s.of(7);
    return v;
}

VennEntries3 venn3(const DensityOp &rho123) {
    const auto &f = rho123.layout().factors();
    if (f.size() != 3) {
        throw Error(ErrorCode::InvalidArgument, "venn3: expected exactly three parties");
    }
    return venn3(subset_entropies(rho123), {f[0].label, f[1].label, f[2].label});
}

}  // namespace lgsim
