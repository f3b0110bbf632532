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

#ifndef LGSIM_QSTATE_HPP
#define LGSIM_QSTATE_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lgsim/matcore.hpp"

namespace lgsim {

struct Factor {
    std::string label;
    std::size_t dim;

    bool operator==(const Factor &) const = default;
};

/// Ordered tensor factors. Basis index order puts the leftmost factor in the
/// most significant position, so |A1 A2 A3> enumerates lexicographically.
class SubsystemLayout {
   public:
    SubsystemLayout() = default;
    /// Throws on duplicate labels or zero dimensions.
    explicit SubsystemLayout(std::vector<Factor> factors);

    /// [(Q,2),(R,2),(A1,2),(A2,2),(A3,2)]
    static SubsystemLayout protocol();

    const std::vector<Factor> &factors() const noexcept {
        return factors_;
    }
    std::size_t size() const noexcept {
        return factors_.size();
    }
    std::size_t total_dim() const noexcept;
    bool contains(std::string_view label) const noexcept;
    /// Position of label in the factor list; throws Error(UnknownLabel).
    std::size_t index_of(std::string_view label) const;
    std::vector<std::string> labels() const;

    /// Stride of factor `pos` in the flattened basis index.
    std::size_t stride(std::size_t pos) const;

    SubsystemLayout with_factor(Factor factor) const;

    bool operator==(const SubsystemLayout &) const = default;

   private:
    std::vector<Factor> factors_;
};

/// Normalized pure state on a layout.
class Ket {
   public:
    /// Throws Error(InvariantViolation) unless | ||amplitudes|| - 1 | <= 1e-12.
    Ket(SubsystemLayout layout, std::vector<cplx> amplitudes);

    const SubsystemLayout &layout() const noexcept {
        return layout_;
    }
    std::span<const cplx> amplitudes() const noexcept {
        return amplitudes_;
    }
    double norm() const;

   private:
    SubsystemLayout layout_;
    std::vector<cplx> amplitudes_;
};

/// Density operator on a layout. Construction enforces Hermiticity and unit
/// trace within 1e-10; positivity is checked by the entropy functionals,
/// which already hold the spectrum.
class DensityOp {
   public:
    DensityOp(SubsystemLayout layout, ComplexMatrix mat);

    const SubsystemLayout &layout() const noexcept {
        return layout_;
    }
    const ComplexMatrix &mat() const noexcept {
        return mat_;
    }
    double purity() const;

   private:
    SubsystemLayout layout_;
    ComplexMatrix mat_;
};

/// (|0 0> + |1 1>)/sqrt(2) on [(Q,2),(R,2)]; the Q marginal is maximally mixed.
Ket purified_mixed_input();

/// Appends (label, 2) and tensors the ket with |0>. Throws on duplicate label.
Ket extend_with_ancilla(const Ket &psi, const std::string &label);

/// U|psi>. U must match the layout dimension; the result is renormalization-
/// checked like any Ket.
Ket apply(const ComplexMatrix &unitary, const Ket &psi);

DensityOp density_of(const Ket &psi);

/// Reduced operator on the kept factors, in their layout order regardless of
/// the order given in `keep`.
DensityOp partial_trace(const DensityOp &rho, const std::vector<std::string> &keep);
/// Same result as partial_trace(density_of(psi), keep), without the full matrix.
DensityOp partial_trace(const Ket &psi, const std::vector<std::string> &keep);

}  // namespace lgsim

#endif
