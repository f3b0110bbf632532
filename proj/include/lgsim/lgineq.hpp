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

#ifndef LGSIM_LGINEQ_HPP
#define LGSIM_LGINEQ_HPP

#include <array>

#include "lgsim/entropy.hpp"
#include "lgsim/qstate.hpp"

namespace lgsim {

/// p(xyz) = <xyz|rho123|xyz>, index x*4 + y*2 + z.
std::array<double, 8> outcome_distribution(const DensityOp &rho123);

struct Correlators {
    double K12 = 0.0;
    double K23 = 0.0;
    double K13 = 0.0;
};

/// Pointer outcome 0 -> +1, 1 -> -1.
Correlators correlators(const DensityOp &rho123);
Correlators correlators(const std::array<double, 8> &p);

struct StandardLG {
    double B1 = 0.0;  // K12 + K23 - K13 <= 1
    double B2 = 0.0;  // K12 + K13 - K23 <= 1
    double B3 = 0.0;  // K13 + K23 - K12 <= 1
    double B4 = 0.0;  // K12 + K13 + K23 + 1 >= 0
};

struct EntropicLG {
    double B1s = 0.0;  // S12 + S23 - S13 >= 1
    double B2s = 0.0;  // S12 + S13 - S23 >= 1
    double B3s = 0.0;  // S13 + S23 - S12 >= 1
};

// Raw values only; thresholds are the caller's business.
StandardLG standard_lg(const Correlators &k);
EntropicLG entropic_lg(double S12, double S23, double S13);
/// S12 - S13 + S23 - S2 >= 0, with S2 the weak detector's own entropy.
double weak_entropic_lg(double S12, double S23, double S13, double S2);

struct PairEntropies {
    double S12 = 0.0;
    double S23 = 0.0;
    double S13 = 0.0;
    double S2 = 0.0;
};

/// Closed forms with half-angle arguments (c = cos(theta/2), s = sin(theta/2)):
///   S12 = 1 + H[1/2 + 1/2 sqrt(1 - 4 eps^2 s1^2 c1^2)], S23 likewise with theta2,
///   S13 = 1 + H[c1^2 c2^2 + s1^2 s2^2 - 2 sqrt(1 - eps^2) s1 c1 s2 c2],
///   S2  = H[(1 + sqrt(1 - eps^2)) / 2].
PairEntropies oracle_entropies(double theta1, double theta2, double epsilon);

/// Closed-form rho123 at eps = 1, basis |x1 x2 x3>.
ComplexMatrix oracle_rho123(double theta1, double theta2);

struct NoMiddle {
    double naive_S13 = 0.0;  // S13 as if A2 never measured
    double naive_K13 = 0.0;  // cos(theta1 + theta2)
};

NoMiddle no_middle_comparator(double theta1, double theta2);

/// |simulated - closed form| beyond this marks a report inconsistent.
inline constexpr double kOracleMismatchTol = 1e-6;

struct LGReport {
    double theta1 = 0.0;
    double theta2 = 0.0;
    double epsilon = 0.0;

    double K12 = 0.0, K23 = 0.0, K13 = 0.0;
    double S1 = 0.0, S2 = 0.0, S3 = 0.0;
    double S12 = 0.0, S23 = 0.0, S13 = 0.0, S123 = 0.0;

    double B1 = 0.0, B2 = 0.0, B3 = 0.0, B4 = 0.0;
    double B1s = 0.0, B2s = 0.0, B3s = 0.0;
    double B1p = 0.0;

    double naive_S13 = 0.0, naive_K13 = 0.0;
    /// cos(theta1) + cos(theta2) - naive_K13: strong two-point correlators
    /// combined with the no-middle K13.
    double naive_B1 = 0.0;

    std::array<double, 8> distribution{};
    VennEntries3 venn;
    PairEntropies oracle;
    double oracle_max_deviation = 0.0;
    bool consistent = true;
};

/// Runs the protocol at one point and evaluates every inequality family.
LGReport evaluate_point(double theta1, double theta2, double epsilon);

}  // namespace lgsim

#endif
