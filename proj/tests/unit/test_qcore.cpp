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
#include "dicke/oracle.hpp"
#include "dicke/qcore.hpp"

#include <doctest.h>

#include <array>

using namespace dicke;

TEST_CASE("Dicke states match the permutation construction") {
    for (int n = 2; n <= 8; ++n) {
        for (int k = 0; k <= n; ++k) {
            const auto psi = dicke_state(n, k);
            CHECK((psi.amplitudes() - oracle::dicke_vector(n, k)).norm() < 1e-14);
        }
    }
    CHECK_THROWS_AS((void)dicke_state(4, 5), std::domain_error);
    CHECK_THROWS((void)symmetric_dicke_state(5));
}

TEST_CASE("W and GHZ states") {
    const auto w = w_state(5);
    CHECK(std::abs(w[1] - cplx(1.0 / std::sqrt(5.0))) < 1e-15);
    CHECK(std::abs(w[16] - cplx(1.0 / std::sqrt(5.0))) < 1e-15);
    const auto g = ghz_state(3);
    CHECK(std::abs(g[0]) == doctest::Approx(1.0 / std::sqrt(2.0)));
    CHECK(std::abs(g[7]) == doctest::Approx(1.0 / std::sqrt(2.0)));
}

TEST_CASE("invalid states are rejected") {
    CVector v = CVector::Zero(4);
    v[0] = 1.0;
    v[1] = 0.1;
    CHECK_THROWS_AS(StateVector(2, v), std::domain_error);
    CHECK_THROWS(StateVector(3, CVector::Zero(4)));
    CMatrix rho = CMatrix::Zero(2, 2);
    rho(0, 0) = 1.0;
    rho(0, 1) = 0.3;
    CHECK_THROWS_AS(DensityMatrix(1, rho), std::domain_error);
    CMatrix negative = CMatrix::Zero(2, 2);
    negative(0, 0) = 1.5;
    negative(1, 1) = -0.5;
    const DensityMatrix bad(1, negative);
    CHECK_THROWS_AS(bad.validate(), std::domain_error);
}

TEST_CASE("Dicke states are J² and J_z eigenstates") {
    for (int n : {4, 6, 8}) {
        const auto psi = symmetric_dicke_state(n);
        const double j = n / 2.0;
        const double total = expectation(collective_spin_squared(Axis::X, n), psi) +
                             expectation(collective_spin_squared(Axis::Y, n), psi) +
                             expectation(collective_spin_squared(Axis::Z, n), psi);
        CHECK(total == doctest::Approx(j * (j + 1.0)).epsilon(1e-12));
        CHECK(std::abs(expectation(collective_spin_squared(Axis::Z, n), psi)) < 1e-12);
        CHECK(expectation(s_operator(n, -2.0), psi) == doctest::Approx(j * (j + 1.0)));
    }
}

TEST_CASE("Pauli-sum and dense expectations agree") {
    const auto psi = dicke_state(5, 2);
    const DensityMatrix rho(psi);
    const PauliSum op = s_operator(5, 0.7);
    CHECK(expectation(op, psi) == doctest::Approx(expectation(op, rho)).epsilon(1e-13));
    CHECK(expectation(op.to_matrix(), rho) == doctest::Approx(expectation(op, rho)).epsilon(1e-13));
}

TEST_CASE("partial trace of a Dicke state") {
    const DensityMatrix rho(symmetric_dicke_state(4));
    const std::array<int, 2> keep{1, 4};
    const auto pair = partial_trace(rho, keep);
    CHECK(pair.num_qubits() == 2);
    CHECK((pair.matrix() - oracle::reduce_to_pair(rho.matrix(), 4, 0, 3)).cwiseAbs().maxCoeff() <
          1e-15);
    CHECK(pair.matrix().trace().real() == doctest::Approx(1.0));
    // |01> and |10> populations are 1/3 each for |D_4^(2)>.
    CHECK(pair.matrix()(1, 1).real() == doctest::Approx(1.0 / 3.0));
    CHECK(pair.matrix()(1, 2).real() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("eigen helpers") {
    CMatrix m = CMatrix::Zero(2, 2);
    m(0, 1) = 1.0;
    m(1, 0) = 1.0;
    CHECK(max_eigenvalue(m) == doctest::Approx(1.0));
    const CVector v = top_eigenvector(m);
    CHECK(std::abs(std::abs(v[0]) - std::abs(v[1])) < 1e-12);
}

TEST_CASE("dense caps") {
    CHECK_THROWS_AS(require_density_cap(40, "test"), capacity_error);
    CHECK_NOTHROW(require_density_cap(4, "test"));
}
