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

#include "lgsim/qstate.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "lgsim/error.hpp"

namespace lgsim {

namespace {

constexpr double kNormTol = 1e-12;
constexpr double kDensityTol = 1e-10;

}  // namespace

SubsystemLayout::SubsystemLayout(std::vector<Factor> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].dim == 0) {
            throw Error(ErrorCode::InvalidArgument, "SubsystemLayout: factor '" + factors_[i].label + "' has dim 0");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (factors_[i].label == factors_[j].label) {
                throw Error(ErrorCode::DuplicateLabel, "SubsystemLayout: duplicate label '" + factors_[i].label + "'");
            }
        }
    }
}

SubsystemLayout SubsystemLayout::protocol() {
    return SubsystemLayout({{"Q", 2}, {"R", 2}, {"A1", 2}, {"A2", 2}, {"A3", 2}});
}

std::size_t SubsystemLayout::total_dim() const noexcept {
    std::size_t d = 1;
    for (const auto &f : factors_) {
        d *= f.dim;
    }
    return d;
}

bool SubsystemLayout::contains(std::string_view label) const noexcept {
    return std::any_of(factors_.begin(), factors_.end(), [&](const Factor &f) { return f.label == label; });
}

std::size_t SubsystemLayout::index_of(std::string_view label) const {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].label == label) {
            return i;
        }
    }
    throw Error(ErrorCode::UnknownLabel, "unknown subsystem label '" + std::string(label) + "'");
}

std::vector<std::string> SubsystemLayout::labels() const {
    std::vector<std::string> out;
    out.reserve(factors_.size());
    for (const auto &f : factors_) {
        out.push_back(f.label);
    }
    return out;
}

std::size_t SubsystemLayout::stride(std::size_t pos) const {
    std::size_t s = 1;
    for (std::size_t i = pos + 1; i < factors_.size(); ++i) {
        s *= factors_[i].dim;
    }
    return s;
}

SubsystemLayout SubsystemLayout::with_factor(Factor factor) const {
    auto factors = factors_;
    factors.push_back(std::move(factor));
    return SubsystemLayout(std::move(factors));
}

Ket::Ket(SubsystemLayout layout, std::vector<cplx> amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() != layout_.total_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "Ket: amplitude count does not match layout dimension");
    }
    const double n = norm();
    if (std::abs(n - 1.0) > kNormTol) {
        std::ostringstream msg;
        msg << "Ket: norm " << n << " is not 1";
        throw Error(ErrorCode::InvariantViolation, msg.str());
    }
}

double Ket::norm() const {
    double sum = 0.0;
    for (const auto &a : amplitudes_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

DensityOp::DensityOp(SubsystemLayout layout, ComplexMatrix mat) : layout_(std::move(layout)), mat_(std::move(mat)) {
    if (mat_.dim() != layout_.total_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "DensityOp: matrix dim does not match layout");
    }
    const double defect = hermiticity_defect(mat_);
    if (defect > kDensityTol) {
        std::ostringstream msg;
        msg << "DensityOp: not Hermitian (defect " << defect << ")";
        throw Error(ErrorCode::InvariantViolation, msg.str());
    }
    const cplx tr = mat_.trace();
    if (std::abs(tr - 1.0) > kDensityTol) {
        std::ostringstream msg;
        msg << "DensityOp: trace " << tr.real() << "+" << tr.imag() << "i is not 1";
        throw Error(ErrorCode::InvariantViolation, msg.str());
    }
}

double DensityOp::purity() const {
    // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    double sum = 0.0;
    for (const auto &v : mat_.entries()) {
        sum += std::norm(v);
    }
    return sum;
}

Ket purified_mixed_input() {
    const double h = 1.0 / std::sqrt(2.0);
    return Ket(SubsystemLayout({{"Q", 2}, {"R", 2}}), {h, 0.0, 0.0, h});
}

Ket extend_with_ancilla(const Ket &psi, const std::string &label) {
    if (psi.layout().contains(label)) {
        throw Error(ErrorCode::DuplicateLabel, "extend_with_ancilla: label '" + label + "' already present");
    }
    std::vector<cplx> amps(psi.amplitudes().size() * 2, 0.0);
    for (std::size_t i = 0; i < psi.amplitudes().size(); ++i) {
        amps[2 * i] = psi.amplitudes()[i];
    }
    return Ket(psi.layout().with_factor({label, 2}), std::move(amps));
}

Ket apply(const ComplexMatrix &unitary, const Ket &psi) {
    return Ket(psi.layout(), apply(unitary, psi.amplitudes()));
}

DensityOp density_of(const Ket &psi) {
    const auto amps = psi.amplitudes();
    const std::size_t n = amps.size();
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = cplx(amps[i].real() * amps[j].real() + amps[i].imag() * amps[j].imag(),
                           amps[i].imag() * amps[j].real() - amps[i].real() * amps[j].imag());
        }
    }
    return DensityOp(psi.layout(), std::move(m));
}

namespace {

// Full basis indices grouped by their traced-out part, each tagged with its
// index in the kept factors.
struct TraceSplit {
    SubsystemLayout kept_layout;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> groups;
};

TraceSplit split_for_trace(const SubsystemLayout &layout, const std::vector<std::string> &keep) {
    if (keep.empty()) {
        throw Error(ErrorCode::InvalidArgument, "partial_trace: keep list is empty");
    }
    std::vector<bool> kept(layout.size(), false);
    for (const auto &label : keep) {
        const std::size_t pos = layout.index_of(label);
        if (kept[pos]) {
            throw Error(ErrorCode::DuplicateLabel, "partial_trace: label '" + label + "' listed twice");
        }
        kept[pos] = true;
    }

    std::vector<Factor> kept_factors;
    std::size_t traced_dim = 1;
    for (std::size_t pos = 0; pos < layout.size(); ++pos) {
        if (kept[pos]) {
            kept_factors.push_back(layout.factors()[pos]);
        } else {
            traced_dim *= layout.factors()[pos].dim;
        }
    }

    std::vector<std::size_t> strides(layout.size());
    for (std::size_t pos = 0; pos < layout.size(); ++pos) {
        strides[pos] = layout.stride(pos);
    }
    TraceSplit split{SubsystemLayout(std::move(kept_factors)), {}};
    split.groups.resize(traced_dim);
    const std::size_t full = layout.total_dim();
    for (std::size_t i = 0; i < full; ++i) {
        std::size_t rem = i;
        std::size_t k = 0;
        std::size_t t = 0;
        for (std::size_t pos = 0; pos < layout.size(); ++pos) {
            const std::size_t digit = rem / strides[pos];
            rem %= strides[pos];
            const std::size_t d = layout.factors()[pos].dim;
            if (kept[pos]) {
                k = k * d + digit;
            } else {
                t = t * d + digit;
            }
        }
        split.groups[t].emplace_back(i, k);
    }
    return split;
}

}  // namespace

DensityOp partial_trace(const DensityOp &rho, const std::vector<std::string> &keep) {
    TraceSplit split = split_for_trace(rho.layout(), keep);
    ComplexMatrix out(split.kept_layout.total_dim());
    const ComplexMatrix &m = rho.mat();
    for (const auto &group : split.groups) {
        for (const auto &[i, ki] : group) {
            for (const auto &[j, kj] : group) {
                out(ki, kj) += m(i, j);
            }
        }
    }
    return DensityOp(std::move(split.kept_layout), std::move(out));
}

DensityOp partial_trace(const Ket &psi, const std::vector<std::string> &keep) {
    TraceSplit split = split_for_trace(psi.layout(), keep);
    ComplexMatrix out(split.kept_layout.total_dim());
    const auto amps = psi.amplitudes();
    for (const auto &group : split.groups) {
        for (const auto &[i, ki] : group) {
            const cplx ai = amps[i];
            for (const auto &[j, kj] : group) {
                const cplx aj = amps[j];
                out(ki, kj) += cplx(ai.real() * aj.real() + ai.imag() * aj.imag(),
                                    ai.imag() * aj.real() - ai.real() * aj.imag());
            }
        }
    }
    return DensityOp(std::move(split.kept_layout), std::move(out));
}

}  // namespace lgsim
