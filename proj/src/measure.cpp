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

#include "lgsim/measure.hpp"

#include <cmath>
#include <sstream>

#include "lgsim/error.hpp"

namespace lgsim {

namespace {

ComplexMatrix projector(const Vec2 &v) {
    return {{v[0] * v[0], v[0] * v[1]}, {v[1] * v[0], v[1] * v[1]}};
}

void require_epsilon(double epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 1.0)) {
        std::ostringstream msg;
        msg << "measurement strength epsilon=" << epsilon << " is outside [0, 1]";
        throw Error(ErrorCode::InvalidArgument, msg.str());
    }
}

}  // namespace

void MeasurementSpec::validate() const {
    if (!std::isfinite(theta)) {
        throw Error(ErrorCode::InvalidArgument, "measurement angle must be finite");
    }
    require_epsilon(epsilon);
}

std::pair<Vec2, Vec2> basis_pair(double theta) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    return {Vec2{c, s}, Vec2{-s, c}};
}

MeasurementBasis MeasurementBasis::computational() {
    return {{1.0, 0.0}, {0.0, 1.0}};
}

MeasurementBasis MeasurementBasis::rotated(double theta) const {
    const auto [k, b] = basis_pair(theta);
    return {{k[0] * ket[0] + k[1] * bar[0], k[0] * ket[1] + k[1] * bar[1]},
            {b[0] * ket[0] + b[1] * bar[0], b[0] * ket[1] + b[1] * bar[1]}};
}

ComplexMatrix embed_two_factor(const ComplexMatrix &local, const std::string &first, const std::string &second,
                               const SubsystemLayout &layout) {
    const std::size_t p1 = layout.index_of(first);
    const std::size_t p2 = layout.index_of(second);
    if (p1 == p2) {
        throw Error(ErrorCode::InvalidArgument, "embed_two_factor: system and ancilla must differ");
    }
    const std::size_t d1 = layout.factors()[p1].dim;
    const std::size_t d2 = layout.factors()[p2].dim;
    if (local.dim() != d1 * d2) {
        throw Error(ErrorCode::DimensionMismatch, "embed_two_factor: local operator does not match factor dims");
    }
    const std::size_t s1 = layout.stride(p1);
    const std::size_t s2 = layout.stride(p2);
    const std::size_t full = layout.total_dim();

    ComplexMatrix out(full);
    for (std::size_t col = 0; col < full; ++col) {
        const std::size_t a = (col / s1) % d1;
        const std::size_t b = (col / s2) % d2;
        const std::size_t rest = col - a * s1 - b * s2;
        for (std::size_t a2 = 0; a2 < d1; ++a2) {
            for (std::size_t b2 = 0; b2 < d2; ++b2) {
                const cplx v = local(a2 * d2 + b2, a * d2 + b);
                if (v != cplx(0.0)) {
                    out(rest + a2 * s1 + b2 * s2, col) = v;
                }
            }
        }
    }
    return out;
}

Ket apply_two_factor(const ComplexMatrix &local, const std::string &first, const std::string &second,
                     const Ket &psi) {
    const SubsystemLayout &layout = psi.layout();
    const std::size_t p1 = layout.index_of(first);
    const std::size_t p2 = layout.index_of(second);
    if (p1 == p2) {
        throw Error(ErrorCode::InvalidArgument, "apply_two_factor: system and ancilla must differ");
    }
    const std::size_t d1 = layout.factors()[p1].dim;
    const std::size_t d2 = layout.factors()[p2].dim;
    if (local.dim() != d1 * d2) {
        throw Error(ErrorCode::DimensionMismatch, "apply_two_factor: local operator does not match factor dims");
    }
    const std::size_t s1 = layout.stride(p1);
    const std::size_t s2 = layout.stride(p2);
    const auto in = psi.amplitudes();
    std::vector<cplx> out(in.size(), 0.0);
    for (std::size_t col = 0; col < in.size(); ++col) {
        if (in[col] == cplx(0.0)) {
            continue;
        }
        const std::size_t a = (col / s1) % d1;
        const std::size_t b = (col / s2) % d2;
        const std::size_t rest = col - a * s1 - b * s2;
        for (std::size_t a2 = 0; a2 < d1; ++a2) {
            for (std::size_t b2 = 0; b2 < d2; ++b2) {
                out[rest + a2 * s1 + b2 * s2] += local(a2 * d2 + b2, a * d2 + b) * in[col];
            }
        }
    }
    return Ket(layout, std::move(out));
}

ComplexMatrix strong_local(const MeasurementBasis &basis) {
    return kron(projector(basis.ket), ComplexMatrix::identity(2)) + kron(projector(basis.bar), pauli::x());
}

ComplexMatrix weak_local(const MeasurementBasis &basis, double epsilon) {
    require_epsilon(epsilon);
    // exp(-i g sigma_y) = cos(g) 1 - i sin(g) sigma_y, sin(g) = epsilon.
    const double keep = std::sqrt(1.0 - epsilon * epsilon);
    const ComplexMatrix rotation{{keep, -epsilon}, {epsilon, keep}};
    return kron(projector(basis.ket), ComplexMatrix::identity(2)) + kron(projector(basis.bar), rotation);
}

ComplexMatrix strong_unitary(const MeasurementBasis &basis, const std::string &system_label,
                             const std::string &ancilla_label, const SubsystemLayout &layout) {
    return embed_two_factor(strong_local(basis), system_label, ancilla_label, layout);
}

ComplexMatrix strong_unitary(double theta, const std::string &system_label, const std::string &ancilla_label,
                             const SubsystemLayout &layout) {
    return strong_unitary(MeasurementBasis::computational().rotated(theta), system_label, ancilla_label, layout);
}

ComplexMatrix weak_unitary(const MeasurementBasis &basis, double epsilon, const std::string &system_label,
                           const std::string &ancilla_label, const SubsystemLayout &layout) {
    return embed_two_factor(weak_local(basis, epsilon), system_label, ancilla_label, layout);
}

ComplexMatrix weak_unitary(double theta, double epsilon, const std::string &system_label,
                           const std::string &ancilla_label, const SubsystemLayout &layout) {
    return weak_unitary(MeasurementBasis::computational().rotated(theta), epsilon, system_label, ancilla_label,
                        layout);
}

ProtocolResult run_protocol(double theta1, double theta2, double epsilon2) {
    MeasurementSpec{theta1, 1.0}.validate();
    MeasurementSpec{theta2, 1.0}.validate();
    MeasurementSpec{theta1, epsilon2}.validate();

    Ket psi = purified_mixed_input();
    for (const char *label : {"A1", "A2", "A3"}) {
        psi = extend_with_ancilla(psi, label);
    }
    const MeasurementBasis first = MeasurementBasis::computational();
    const MeasurementBasis second = first.rotated(theta1);
    const MeasurementBasis third = second.rotated(theta2);

    psi = apply_two_factor(strong_local(first), "Q", "A1", psi);
    psi = apply_two_factor(weak_local(second, epsilon2), "Q", "A2", psi);
    psi = apply_two_factor(strong_local(third), "Q", "A3", psi);

    DensityOp rho123 = partial_trace(psi, {"A1", "A2", "A3"});
    DensityOp rho12 = partial_trace(rho123, {"A1", "A2"});
    DensityOp rho23 = partial_trace(rho123, {"A2", "A3"});
    DensityOp rho13 = partial_trace(rho123, {"A1", "A3"});
    DensityOp rho1 = partial_trace(rho12, {"A1"});
    DensityOp rho2 = partial_trace(rho12, {"A2"});
    DensityOp rho3 = partial_trace(rho23, {"A3"});
    return ProtocolResult{std::move(psi),  std::move(rho123), std::move(rho12), std::move(rho23),
                          std::move(rho13), std::move(rho1),  std::move(rho2),  std::move(rho3)};
}

}  // namespace lgsim
