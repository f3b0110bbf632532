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

#ifndef LGSIM_MEASURE_HPP
#define LGSIM_MEASURE_HPP

#include <array>
#include <string>
#include <utility>

#include "lgsim/qstate.hpp"

namespace lgsim {

/// One measurement step: basis angle relative to the previous measurement
/// and coupling strength in [0, 1] (1 = projective).
struct MeasurementSpec {
    double theta = 0.0;
    double epsilon = 1.0;

    /// Throws Error(InvalidArgument) for epsilon outside [0, 1] or a
    /// non-finite theta.
    void validate() const;
};

using Vec2 = std::array<double, 2>;

/// |theta> = cos(theta/2)|0'> + sin(theta/2)|1'>,
/// |theta_bar> = -sin(theta/2)|0'> + cos(theta/2)|1'>,
/// with |0'>, |1'> the previous basis.
std::pair<Vec2, Vec2> basis_pair(double theta);

/// A qubit measurement basis written in computational coordinates.
struct MeasurementBasis {
    Vec2 ket;  // outcome 0: ancilla left alone
    Vec2 bar;  // outcome 1: ancilla flipped

    static MeasurementBasis computational();
    /// The basis at `theta` relative to this one.
    MeasurementBasis rotated(double theta) const;
};

/// Strong coupling |k><k| (x) 1 + |k_bar><k_bar| (x) sigma_x on the
/// (system, ancilla) pair, identity elsewhere on `layout`.
ComplexMatrix strong_unitary(const MeasurementBasis &basis, const std::string &system_label,
                             const std::string &ancilla_label, const SubsystemLayout &layout);
/// Angle form: basis at theta relative to the computational basis.
ComplexMatrix strong_unitary(double theta, const std::string &system_label, const std::string &ancilla_label,
                             const SubsystemLayout &layout);

/// Weak coupling exp(-i g |k_bar><k_bar| (x) sigma_y) with cos(g) = sqrt(1 - eps^2):
/// the |k_bar> branch sends the ancilla |0> -> sqrt(1-eps^2)|0> + eps|1> and
/// |1> -> -eps|0> + sqrt(1-eps^2)|1>; the |k> branch is untouched. At eps = 1
/// it agrees with strong_unitary on every ancilla-|0> input.
ComplexMatrix weak_unitary(const MeasurementBasis &basis, double epsilon, const std::string &system_label,
                           const std::string &ancilla_label, const SubsystemLayout &layout);
ComplexMatrix weak_unitary(double theta, double epsilon, const std::string &system_label,
                           const std::string &ancilla_label, const SubsystemLayout &layout);

/// Embeds a 4x4 operator on (first (x) second) into the full layout.
/// Local 4x4 couplings on (system, ancilla), before embedding.
ComplexMatrix strong_local(const MeasurementBasis &basis);
ComplexMatrix weak_local(const MeasurementBasis &basis, double epsilon);

/// Applies a local operator on two factors without building the full matrix.
Ket apply_two_factor(const ComplexMatrix &local, const std::string &first, const std::string &second,
                     const Ket &psi);

ComplexMatrix embed_two_factor(const ComplexMatrix &local, const std::string &first, const std::string &second,
                               const SubsystemLayout &layout);

struct ProtocolResult {
    Ket final_ket;     // over (Q, R, A1, A2, A3)
    DensityOp rho123;  // over (A1, A2, A3)
    DensityOp rho12;
    DensityOp rho23;
    DensityOp rho13;
    DensityOp rho1;
    DensityOp rho2;
    DensityOp rho3;
};

/// Runs the three-detector protocol on the maximally mixed qubit: A1 strong
/// in the H/V basis, A2 at theta1 relative to it with strength epsilon2, A3
/// strong at theta2 relative to A2's basis.
ProtocolResult run_protocol(double theta1, double theta2, double epsilon2);

}  // namespace lgsim

#endif
