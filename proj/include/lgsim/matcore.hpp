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

#ifndef LGSIM_MATCORE_HPP
#define LGSIM_MATCORE_HPP

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace lgsim {

using cplx = std::complex<double>;

/// Default absolute tolerance for comparisons; all magnitudes involved are O(1).
inline constexpr double kDefaultTol = 1e-10;

/// Dense square complex matrix stored row-major. Sized for the small operators
/// of a five-qubit register (at most 32x32).
class ComplexMatrix {
   public:
    /// dim x dim zero matrix; dim must be >= 1.
    explicit ComplexMatrix(std::size_t dim);
    /// Row-major entries; entries.size() must equal dim*dim.
    ComplexMatrix(std::size_t dim, std::vector<cplx> entries);
    /// Nested row lists, e.g. {{0, 1}, {1, 0}}.
    ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t dim() const noexcept {
        return dim_;
    }
    cplx &operator()(std::size_t row, std::size_t col) {
        return entries_[row * dim_ + col];
    }
    const cplx &operator()(std::size_t row, std::size_t col) const {
        return entries_[row * dim_ + col];
    }
    std::span<const cplx> entries() const noexcept {
        return entries_;
    }

    cplx trace() const;
    bool operator==(const ComplexMatrix &other) const = default;

   private:
    std::size_t dim_;
    std::vector<cplx> entries_;
};

ComplexMatrix operator*(cplx scalar, const ComplexMatrix &m);
ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b);

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);
/// Throws Error(DimensionMismatch) when a.dim() != b.dim().
ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b);
ComplexMatrix adjoint(const ComplexMatrix &a);

/// Matrix-vector product; v.size() must equal a.dim().
std::vector<cplx> apply(const ComplexMatrix &a, std::span<const cplx> v);

/// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);
/// Largest entrywise modulus of a - adjoint(a).
double hermiticity_defect(const ComplexMatrix &a);

/// Eigenvalues of a Hermitian matrix in ascending order, by cyclic Jacobi
/// rotations. Throws Error(NotHermitian) if a deviates from its adjoint by
/// more than tol in any entry.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a, double tol = kDefaultTol);

namespace pauli {
ComplexMatrix x();
ComplexMatrix y();
ComplexMatrix z();
}  // namespace pauli

}  // namespace lgsim

#endif
