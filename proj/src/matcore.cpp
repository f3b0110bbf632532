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

#include "lgsim/matcore.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "lgsim/error.hpp"

namespace lgsim {

const char *to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidArgument:
            return "invalid argument";
        case ErrorCode::DimensionMismatch:
            return "dimension mismatch";
        case ErrorCode::NotHermitian:
            return "not Hermitian";
        case ErrorCode::InvariantViolation:
            return "invariant violation";
        case ErrorCode::UnknownLabel:
            return "unknown label";
        case ErrorCode::DuplicateLabel:
            return "duplicate label";
        case ErrorCode::Parse:
            return "parse error";
        case ErrorCode::Io:
            return "I/O error";
    }
    return "unknown error";
}

namespace {

constexpr double kJacobiThreshold = 1e-13;
constexpr int kJacobiMaxSweeps = 100;

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *op) {
    if (a.dim() != b.dim()) {
        std::ostringstream msg;
        msg << op << ": dimension mismatch (" << a.dim() << " vs " << b.dim() << ")";
        throw Error(ErrorCode::DimensionMismatch, msg.str());
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {
    if (dim == 0) {
        throw Error(ErrorCode::InvalidArgument, "ComplexMatrix: dim must be >= 1");
    }
}

ComplexMatrix::ComplexMatrix(std::size_t dim, std::vector<cplx> entries) : dim_(dim), entries_(std::move(entries)) {
    if (dim == 0) {
        throw Error(ErrorCode::InvalidArgument, "ComplexMatrix: dim must be >= 1");
    }
    if (entries_.size() != dim * dim) {
        throw Error(ErrorCode::DimensionMismatch, "ComplexMatrix: entry count is not dim^2");
    }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : dim_(rows.size()) {
    if (dim_ == 0) {
        throw Error(ErrorCode::InvalidArgument, "ComplexMatrix: dim must be >= 1");
    }
    entries_.reserve(dim_ * dim_);
    for (const auto &row : rows) {
        if (row.size() != dim_) {
            throw Error(ErrorCode::DimensionMismatch, "ComplexMatrix: ragged row list");
        }
        entries_.insert(entries_.end(), row.begin(), row.end());
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    ComplexMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

cplx ComplexMatrix::trace() const {
    cplx t = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

ComplexMatrix operator*(cplx scalar, const ComplexMatrix &m) {
    std::vector<cplx> out(m.entries().begin(), m.entries().end());
    for (auto &v : out) {
        v *= scalar;
    }
    return ComplexMatrix(m.dim(), std::move(out));
}

ComplexMatrix operator+(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "operator+");
    std::vector<cplx> out(a.entries().begin(), a.entries().end());
    auto rhs = b.entries();
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] += rhs[i];
    }
    return ComplexMatrix(a.dim(), std::move(out));
}

ComplexMatrix operator-(const ComplexMatrix &a, const ComplexMatrix &b) {
    return a + cplx(-1.0) * b;
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    const std::size_t na = a.dim();
    const std::size_t nb = b.dim();
    ComplexMatrix out(na * nb);
    for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) {
            const cplx aij = a(i, j);
            for (std::size_t k = 0; k < nb; ++k) {
                for (std::size_t l = 0; l < nb; ++l) {
                    out(i * nb + k, j * nb + l) = aij * b(k, l);
                }
            }
        }
    }
    return out;
}

ComplexMatrix matmul(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "matmul");
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            const cplx aik = a(i, k);
            if (aik == cplx(0.0)) {
                continue;
            }
            for (std::size_t j = 0; j < n; ++j) {
                out(i, j) += aik * b(k, j);
            }
        }
    }
    return out;
}

ComplexMatrix adjoint(const ComplexMatrix &a) {
    const std::size_t n = a.dim();
    ComplexMatrix out(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

std::vector<cplx> apply(const ComplexMatrix &a, std::span<const cplx> v) {
    if (v.size() != a.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "apply: vector length does not match matrix dim");
    }
    const std::size_t n = a.dim();
    std::vector<cplx> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            acc += a(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    double worst = 0.0;
    auto lhs = a.entries();
    auto rhs = b.entries();
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        worst = std::max(worst, std::norm(lhs[i] - rhs[i]));
    }
    return std::sqrt(worst);
}

double hermiticity_defect(const ComplexMatrix &a) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = i; j < a.dim(); ++j) {
            worst = std::max(worst, std::norm(a(i, j) - std::conj(a(j, i))));
        }
    }
    return std::sqrt(worst);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix &a, double tol) {
    const double defect = hermiticity_defect(a);
    if (defect > tol) {
        std::ostringstream msg;
        msg << "hermitian_eigenvalues: input deviates from its adjoint by " << defect << " (tol " << tol << ")";
        throw Error(ErrorCode::NotHermitian, msg.str());
    }

    const std::size_t n = a.dim();
    ComplexMatrix m = a;
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = m(i, i).real();
    }

    // Each rotation is J = D R with D = diag(1, conj(phase)) on (p, q) turning
    // m(p, q) real, and R the real Jacobi rotation that annihilates it.
    for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                off = std::max(off, std::norm(m(p, q)));
            }
        }
        if (off <= kJacobiThreshold * kJacobiThreshold) {
            break;
        }
        for (std::size_t p = 0; p < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const cplx apq = m(p, q);
                const double mag = std::abs(apq);
                if (mag == 0.0) {
                    continue;
                }
                const cplx phase = apq / mag;
                const double app = m(p, p).real();
                const double aqq = m(q, q).real();
                const double theta = (aqq - app) / (2.0 * mag);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const cplx cphase = std::conj(phase);

                for (std::size_t k = 0; k < n; ++k) {
                    const cplx kp = m(k, p);
                    const cplx kq = m(k, q);
                    m(k, p) = c * kp - s * cphase * kq;
                    m(k, q) = s * kp + c * cphase * kq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    const cplx pk = m(p, k);
                    const cplx qk = m(q, k);
                    m(p, k) = c * pk - s * phase * qk;
                    m(q, k) = s * pk + c * phase * qk;
                }
                m(p, q) = 0.0;
                m(q, p) = 0.0;
                m(p, p) = m(p, p).real();
                m(q, q) = m(q, q).real();
            }
        }
    }

    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = m(i, i).real();
    }
    std::sort(values.begin(), values.end());
    return values;
}

namespace pauli {
ComplexMatrix x() {
    return {{0.0, 1.0}, {1.0, 0.0}};
}
ComplexMatrix y() {
    return {{0.0, cplx(0.0, -1.0)}, {cplx(0.0, 1.0), 0.0}};
}
ComplexMatrix z() {
    return {{1.0, 0.0}, {0.0, -1.0}};
}
}  // namespace pauli

}  // namespace lgsim
