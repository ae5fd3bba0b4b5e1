// Copyright 2026 The dicke-noise Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "dicke/qcore.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace dicke {

namespace {

void require_size(int n, Eigen::Index rows, const char *what) {
    if (n < 1 || static_cast<std::size_t>(rows) != dim_of(n)) {
        throw std::invalid_argument(std::string(what) + ": dimension is not 2^n");
    }
}

double checked_real(cplx v) {
    if (std::abs(v.imag()) > 1e-10 * std::max(1.0, std::abs(v.real()))) {
        throw numerical_error("expectation: imaginary residue " + format_double(v.imag()) +
                              " for a supposedly Hermitian operator");
    }
    return v.real();
}

} // namespace

StateVector::StateVector(int n, CVector amplitudes) : n_(n), amp_(std::move(amplitudes)) {
    require_size(n, amp_.size(), "StateVector");
    if (std::abs(amp_.squaredNorm() - 1.0) > kNormTolerance) {
        throw std::domain_error("StateVector: squared norm differs from 1 by " +
                                format_double(amp_.squaredNorm() - 1.0));
    }
}

CMatrix StateVector::projector() const {
    require_density_cap(n_, "StateVector::projector");
    return amp_ * amp_.adjoint();
}

DensityMatrix::DensityMatrix(int n, CMatrix entries) : n_(n), rho_(std::move(entries)) {
    require_size(n, rho_.rows(), "DensityMatrix");
    if (rho_.rows() != rho_.cols()) {
        throw std::invalid_argument("DensityMatrix: matrix must be square");
    }
    if ((rho_ - rho_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
        throw std::domain_error("DensityMatrix: matrix is not Hermitian");
    }
    const cplx tr = rho_.trace();
    if (std::abs(tr - cplx(1.0, 0.0)) > kTraceTolerance) {
        throw std::domain_error("DensityMatrix: trace differs from 1 by " +
                                format_double(std::abs(tr - cplx(1.0, 0.0))));
    }
}

DensityMatrix::DensityMatrix(const StateVector &psi)
    : DensityMatrix(psi.num_qubits(), psi.projector()) {}

double DensityMatrix::min_eigenvalue() const {
    return hermitian_eigenvalues(rho_).minCoeff();
}

void DensityMatrix::validate() const {
    const double m = min_eigenvalue();
    if (m < -kPositivityTolerance) {
        throw std::domain_error("DensityMatrix: negative eigenvalue " + format_double(m));
    }
}

StateVector dicke_state(int n, int k) {
    if (n < 1) {
        throw std::domain_error("dicke_state: n must be positive");
    }
    if (k < 0 || k > n) {
        throw std::domain_error("dicke_state: excitation count out of range");
    }
    require_state_cap(n, "dicke_state");
    const std::size_t dim = dim_of(n);
    const double amp = 1.0 / std::sqrt(binomial(n, k));
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        if (std::popcount(c) == k) {
            v[static_cast<Eigen::Index>(c)] = amp;
        }
    }
    return {n, std::move(v)};
}

StateVector symmetric_dicke_state(int n) {
    if (n % 2 != 0) {
        throw std::domain_error("symmetric_dicke_state: n must be even");
    }
    return dicke_state(n, n / 2);
}

StateVector w_state(int n) { return dicke_state(n, 1); }

StateVector ghz_state(int n) {
    if (n < 2) {
        throw std::domain_error("ghz_state: n must be >= 2");
    }
    require_state_cap(n, "ghz_state");
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim_of(n)));
    v[0] = 1.0 / std::sqrt(2.0);
    v[static_cast<Eigen::Index>(dim_of(n) - 1)] = 1.0 / std::sqrt(2.0);
    return {n, std::move(v)};
}

PauliSum collective_spin_squared(Axis axis, int n) {
    if (n < 2) {
        throw std::domain_error("collective_spin_squared: n must be >= 2");
    }
    std::vector<PauliString> terms;
    terms.emplace_back(std::vector<Pauli>(static_cast<std::size_t>(n), Pauli::I), n / 4.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            std::vector<Pauli> labels(static_cast<std::size_t>(n), Pauli::I);
            labels[static_cast<std::size_t>(i)] = to_pauli(axis);
            labels[static_cast<std::size_t>(j)] = to_pauli(axis);
            terms.emplace_back(std::move(labels), 0.5);
        }
    }
    return PauliSum(n, std::move(terms));
}

PauliSum s_operator(int n, double alpha) {
    PauliSum s = collective_spin_squared(Axis::X, n);
    s += collective_spin_squared(Axis::Y, n);
    s += alpha * collective_spin_squared(Axis::Z, n);
    return s;
}

double expectation(const PauliSum &op, const StateVector &psi) {
    if (op.num_qubits() != psi.num_qubits()) {
        throw std::invalid_argument("expectation: register size mismatch");
    }
    return checked_real(psi.amplitudes().dot(op.apply(psi.amplitudes())));
}

double expectation(const PauliSum &op, const DensityMatrix &rho) {
    if (op.num_qubits() != rho.num_qubits()) {
        throw std::invalid_argument("expectation: register size mismatch");
    }
    static const cplx phase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::size_t dim = dim_of(rho.num_qubits());
    const CMatrix &m = rho.matrix();
    cplx total = 0.0;
    for (const auto &t : op.terms()) {
        const std::size_t x = t.x_mask();
        const std::size_t z = t.z_mask();
        cplx acc = 0.0;
        for (std::size_t c = 0; c < dim; ++c) {
            const cplx v = m(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(c ^ x));
            acc += (std::popcount(c & z) & 1) != 0 ? -v : v;
        }
        total += t.coefficient() * phase[t.y_count() & 3] * acc;
    }
    return checked_real(total);
}

double expectation(const CMatrix &op, const StateVector &psi) {
    require_size(psi.num_qubits(), op.rows(), "expectation");
    return checked_real(psi.amplitudes().dot(op * psi.amplitudes()));
}

double expectation(const CMatrix &op, const DensityMatrix &rho) {
    require_size(rho.num_qubits(), op.rows(), "expectation");
    return checked_real((op * rho.matrix()).trace());
}

DensityMatrix partial_trace(const DensityMatrix &rho, std::span<const int> keep) {
    const int n = rho.num_qubits();
    if (keep.empty()) {
        throw std::invalid_argument("partial_trace: empty keep set");
    }
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end() || kept.front() < 1 ||
        kept.back() > n) {
        throw std::invalid_argument("partial_trace: keep must be distinct indices in 1..n");
    }
    const int k = static_cast<int>(kept.size());
    std::size_t keep_mask = 0;
    for (int q : kept) {
        keep_mask |= qubit_mask(n, q - 1);
    }
    const std::size_t dim = dim_of(n);
    const auto reduce = [&](std::size_t c) {
        std::size_t r = 0;
        for (int i = 0; i < k; ++i) {
            if ((c & qubit_mask(n, kept[static_cast<std::size_t>(i)] - 1)) != 0) {
                r |= qubit_mask(k, i);
            }
        }
        return r;
    };
    std::vector<std::size_t> reduced(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        reduced[c] = reduce(c);
    }
    const auto rdim = static_cast<Eigen::Index>(dim_of(k));
    CMatrix out = CMatrix::Zero(rdim, rdim);
    const CMatrix &m = rho.matrix();
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if ((i & ~keep_mask) == (j & ~keep_mask)) {
                out(static_cast<Eigen::Index>(reduced[i]), static_cast<Eigen::Index>(reduced[j])) +=
                    m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
            }
        }
    }
    return {k, std::move(out)};
}

Eigen::VectorXd hermitian_eigenvalues(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw numerical_error("hermitian_eigenvalues: eigensolver failed");
    }
    return es.eigenvalues();
}

double max_eigenvalue(const CMatrix &m) { return hermitian_eigenvalues(m).maxCoeff(); }

CVector top_eigenvector(const CMatrix &m) {
    Eigen::SelfAdjointEigenSolver<CMatrix> es(m);
    if (es.info() != Eigen::Success) {
        throw numerical_error("top_eigenvector: eigensolver failed");
    }
    return es.eigenvectors().col(m.rows() - 1);
}

} // namespace dicke
