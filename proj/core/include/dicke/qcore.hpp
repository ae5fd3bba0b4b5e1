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
#pragma once

#include "dicke/common.hpp"
#include "dicke/pauli.hpp"

#include <span>
#include <vector>

namespace dicke {

/// Normalized pure state of n qubits; amplitude index bit (n-1-j) is qubit j.
class StateVector {
  public:
    static constexpr double kNormTolerance = 1e-12;

    /// Validates the squared norm against 1.
    StateVector(int n, CVector amplitudes);

    [[nodiscard]] int num_qubits() const noexcept { return n_; }
    [[nodiscard]] const CVector &amplitudes() const noexcept { return amp_; }
    [[nodiscard]] cplx operator[](std::size_t i) const { return amp_[static_cast<Eigen::Index>(i)]; }
    [[nodiscard]] CMatrix projector() const;

  private:
    int n_;
    CVector amp_;
};

/// Dense density matrix. Construction checks hermiticity and unit trace;
/// positivity is checked on demand by validate() since it needs an eigensolve.
class DensityMatrix {
  public:
    static constexpr double kHermitianTolerance = 1e-12;
    static constexpr double kTraceTolerance = 1e-12;
    static constexpr double kPositivityTolerance = 1e-10;

    DensityMatrix(int n, CMatrix entries);
    explicit DensityMatrix(const StateVector &psi);

    [[nodiscard]] int num_qubits() const noexcept { return n_; }
    [[nodiscard]] const CMatrix &matrix() const noexcept { return rho_; }
    [[nodiscard]] double min_eigenvalue() const;
    /// Throws std::domain_error if the smallest eigenvalue is below -1e-10.
    void validate() const;

  private:
    int n_;
    CMatrix rho_;
};

/// |D_n^(k)>: uniform superposition of all basis strings with k ones.
[[nodiscard]] StateVector dicke_state(int n, int k);
/// |D_n^(n/2)>, the symmetric Dicke state (n even).
[[nodiscard]] StateVector symmetric_dicke_state(int n);
/// |D_n^(1)>.
[[nodiscard]] StateVector w_state(int n);
/// (|0...0> + |1...1>)/sqrt(2).
[[nodiscard]] StateVector ghz_state(int n);

/// J_k^2 with J_k = (1/2) Σ_j σ_k^j, expanded as (n/4)𝟙 + (1/2) Σ_{i<j} σ_k σ_k.
[[nodiscard]] PauliSum collective_spin_squared(Axis axis, int n);
/// J_x^2 + J_y^2 + α J_z^2.
[[nodiscard]] PauliSum s_operator(int n, double alpha);

[[nodiscard]] double expectation(const PauliSum &op, const StateVector &psi);
[[nodiscard]] double expectation(const PauliSum &op, const DensityMatrix &rho);
[[nodiscard]] double expectation(const CMatrix &op, const StateVector &psi);
[[nodiscard]] double expectation(const CMatrix &op, const DensityMatrix &rho);

/// Reduced state on the kept qubits (1-based indices, any order; the result
/// orders them ascending).
[[nodiscard]] DensityMatrix partial_trace(const DensityMatrix &rho,
                                         std::span<const int> keep);

[[nodiscard]] Eigen::VectorXd hermitian_eigenvalues(const CMatrix &m);
[[nodiscard]] double max_eigenvalue(const CMatrix &m);
/// Eigenvector of the largest eigenvalue.
[[nodiscard]] CVector top_eigenvector(const CMatrix &m);

} // namespace dicke
