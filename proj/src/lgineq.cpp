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

#include "lgsim/lgineq.hpp"

#include <algorithm>
#include <cmath>

#include "lgsim/error.hpp"
#include "lgsim/measure.hpp"

namespace lgsim {

namespace {

void require_three_parties(const DensityOp &rho, const char *op) {
    if (rho.layout().size() != 3) {
        throw Error(ErrorCode::InvalidArgument, std::string(op) + ": expected a three-detector state");
    }
}

constexpr double sign_of(unsigned bit) {
    return bit ? -1.0 : 1.0;
}

double sqrt_clamped(double x) {
    return std::sqrt(std::max(0.0, x));
}

}  // namespace

std::array<double, 8> outcome_distribution(const DensityOp &rho123) {
    require_three_parties(rho123, "outcome_distribution");
    std::array<double, 8> p{};
    for (std::size_t i = 0; i < 8; ++i) {
        p[i] = rho123.mat()(i, i).real();
    }
    return p;
}

Correlators correlators(const std::array<double, 8> &p) {
    Correlators k;
    for (unsigned i = 0; i < 8; ++i) {
        const double x = sign_of((i >> 2) & 1u);
        const double y = sign_of((i >> 1) & 1u);
        const double z = sign_of(i & 1u);
        k.K12 += x * y * p[i];
        k.K23 += y * z * p[i];
        k.K13 += x * z * p[i];
    }
    return k;
}

Correlators correlators(const DensityOp &rho123) {
    return correlators(outcome_distribution(rho123));
}

StandardLG standard_lg(const Correlators &k) {
    return {k.K12 + k.K23 - k.K13, k.K12 + k.K13 - k.K23, k.K13 + k.K23 - k.K12, k.K12 + k.K13 + k.K23 + 1.0};
}

EntropicLG entropic_lg(double S12, double S23, double S13) {
    return {S12 + S23 - S13, S12 + S13 - S23, S13 + S23 - S12};
}

double weak_entropic_lg(double S12, double S23, double S13, double S2) {
    return S12 - S13 + S23 - S2;
}

PairEntropies oracle_entropies(double theta1, double theta2, double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0) || !std::isfinite(theta1) || !std::isfinite(theta2)) {
        throw Error(ErrorCode::InvalidArgument, "oracle_entropies: arguments out of range");
    }
    const double c1 = std::cos(theta1 / 2.0), s1 = std::sin(theta1 / 2.0);
    const double c2 = std::cos(theta2 / 2.0), s2 = std::sin(theta2 / 2.0);
    const double e2 = epsilon * epsilon;
    const double keep = sqrt_clamped(1.0 - e2);

    PairEntropies out;
    out.S12 = 1.0 + binary_entropy(0.5 + 0.5 * sqrt_clamped(1.0 - 4.0 * e2 * s1 * s1 * c1 * c1));
    out.S23 = 1.0 + binary_entropy(0.5 + 0.5 * sqrt_clamped(1.0 - 4.0 * e2 * s2 * s2 * c2 * c2));
    out.S13 = 1.0 + binary_entropy(std::clamp(c1 * c1 * c2 * c2 + s1 * s1 * s2 * s2 - 2.0 * keep * s1 * c1 * s2 * c2,
                                              0.0, 1.0));
    out.S2 = binary_entropy(0.5 * (1.0 + keep));
    return out;
}

ComplexMatrix oracle_rho123(double theta1, double theta2) {
    const double c1 = std::cos(theta1 / 2.0), s1 = std::sin(theta1 / 2.0);
    const double c2 = std::cos(theta2 / 2.0), s2 = std::sin(theta2 / 2.0);
    const double x = s1 * c1 * s2 * c2;
    const double diag[8] = {c1 * c1 * c2 * c2, c1 * c1 * s2 * s2, s1 * s1 * s2 * s2, s1 * s1 * c2 * c2,
                            s1 * s1 * c2 * c2, s1 * s1 * s2 * s2, c1 * c1 * s2 * s2, c1 * c1 * c2 * c2};
    ComplexMatrix m(8);
    for (std::size_t i = 0; i < 8; ++i) {
        m(i, i) = 0.5 * diag[i];
    }
    m(0, 2) = m(2, 0) = -0.5 * x;
    m(1, 3) = m(3, 1) = 0.5 * x;
    m(4, 6) = m(6, 4) = 0.5 * x;
    m(5, 7) = m(7, 5) = -0.5 * x;
    return m;
}

NoMiddle no_middle_comparator(double theta1, double theta2) {
    return {oracle_entropies(theta1, theta2, 0.0).S13, std::cos(theta1 + theta2)};
}

LGReport evaluate_point(double theta1, double theta2, double epsilon) {
    const ProtocolResult run = run_protocol(theta1, theta2, epsilon);

    LGReport r;
    r.theta1 = theta1;
    r.theta2 = theta2;
    r.epsilon = epsilon;

    r.distribution = outcome_distribution(run.rho123);
    const Correlators k = correlators(r.distribution);
    r.K12 = k.K12;
    r.K23 = k.K23;
    r.K13 = k.K13;

    const SubsetEntropies s = subset_entropies(run.rho123);
    r.S1 = s.of(0b001);
    r.S2 = s.of(0b010);
    r.S3 = s.of(0b100);
    r.S12 = s.of(0b011);
    r.S13 = s.of(0b101);
    r.S23 = s.of(0b110);
    r.S123 = s.of(0b111);
    r.venn = venn3(s, {"A1", "A2", "A3"});

    const StandardLG std_lg = standard_lg(k);
    r.B1 = std_lg.B1;
    r.B2 = std_lg.B2;
    r.B3 = std_lg.B3;
    r.B4 = std_lg.B4;

    const EntropicLG ent = entropic_lg(r.S12, r.S23, r.S13);
    r.B1s = ent.B1s;
    r.B2s = ent.B2s;
    r.B3s = ent.B3s;
    r.B1p = weak_entropic_lg(r.S12, r.S23, r.S13, r.S2);

    const NoMiddle naive = no_middle_comparator(theta1, theta2);
    r.naive_S13 = naive.naive_S13;
    r.naive_K13 = naive.naive_K13;
    r.naive_B1 = std::cos(theta1) + std::cos(theta2) - naive.naive_K13;

    r.oracle = oracle_entropies(theta1, theta2, epsilon);
    r.oracle_max_deviation = std::max({std::abs(r.S12 - r.oracle.S12), std::abs(r.S23 - r.oracle.S23),
                                       std::abs(r.S13 - r.oracle.S13), std::abs(r.S2 - r.oracle.S2)});
    r.consistent = r.oracle_max_deviation <= kOracleMismatchTol;
    return r;
}

}  // namespace lgsim
