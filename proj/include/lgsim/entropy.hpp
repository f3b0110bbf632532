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

#ifndef LGSIM_ENTROPY_HPP
#define LGSIM_ENTROPY_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "lgsim/qstate.hpp"

namespace lgsim {

// All entropies are in bits.

/// H[x] = -x log2 x - (1-x) log2(1-x). Inputs within 1e-12 of [0, 1] are
/// clamped; anything further out throws.
double binary_entropy(double x);

/// Shannon entropy of a probability vector (entries >= -1e-12, sum 1 within 1e-9).
double shannon(std::span<const double> p);

/// -sum lambda log2 lambda over the spectrum. Eigenvalues in [-1e-9, 0) are
/// treated as roundoff and clamped to zero; anything more negative is an
/// invariant violation.
double von_neumann(const DensityOp &rho);

/// Entropy of the reduced state on `keep`.
double subsystem_entropy(const DensityOp &rho, const std::vector<std::string> &keep);

/// The seven subset entropies of a three-party state, indexed by bitmask over
/// layout positions (bit 0 = first party): at[1] = S(X), at[3] = S(XY),
/// at[7] = S(XYZ). at[0] is 0.
struct SubsetEntropies {
    std::array<double, 8> at{};

    double of(unsigned mask) const {
        return at[mask];
    }
};

SubsetEntropies subset_entropies(const DensityOp &rho123);

/// Regions of a tripartite entropy Venn diagram, keyed by party.
///   solo[i]      = S(X_i | rest)
///   pair_cond[k] = S(X_a : X_b | X_c) for (a, b) = (0,1), (0,2), (1,2)
///   center       = S(X : Y : Z)
struct VennEntries3 {
    std::array<std::string, 3> labels;
    std::array<double, 3> solo{};
    std::array<double, 3> pair_cond{};
    double center = 0.0;

    double total() const;
};

VennEntries3 venn3(const DensityOp &rho123);
VennEntries3 venn3(const SubsetEntropies &s, std::array<std::string, 3> labels);

}  // namespace lgsim

#endif
