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
#include "dicke/pauli.hpp"

#include <doctest.h>

#include <random>

using namespace dicke;

TEST_CASE("single labels parse and print") {
    CHECK(pauli_char(pauli_from_char('x')) == 'X');
    CHECK(pauli_char(pauli_from_char('0')) == 'I');
    CHECK_THROWS_AS((void)pauli_from_char('q'), std::invalid_argument);
    const PauliString s("xIyZ", 0.5);
    CHECK(s.label_string() == "XIYZ");
    CHECK(s.weight() == 3);
    CHECK(s.y_count() == 1);
}

TEST_CASE("string matrices agree with explicit Kronecker products") {
    for (const char *labels : {"X", "YZ", "XYZ", "IZYX", "ZZIYX"}) {
        const PauliString s(labels, -0.75);
        const CMatrix expected = -0.75 * oracle::pauli_string_matrix(labels);
        CHECK((s.to_matrix() - expected).cwiseAbs().maxCoeff() < 1e-15);
    }
}

TEST_CASE("sums merge duplicates and drop cancelled terms") {
    PauliSum a(2);
    a.add("XZ", 1.0);
    a.add("XZ", 0.5);
    a.add("YY", 2.0);
    a.add("YY", -2.0);
    CHECK(a.size() == 1);
    CHECK(a.coefficient("XZ") == doctest::Approx(1.5));
    CHECK(a.coefficient("YY") == 0.0);
    CHECK_THROWS((void)(a + PauliSum(3)));
}

TEST_CASE("apply matches dense multiplication") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> gauss;
    const int n = 4;
    CVector psi(16);
    for (auto &v : psi) {
        v = cplx(gauss(rng), gauss(rng));
    }
    PauliSum op(n);
    op.add("XYZI", 0.3);
    op.add("ZZZZ", -1.1);
    op.add("IYYX", 0.7);
    op.add("IIII", 0.2);
    CHECK((op.apply(psi) - oracle::operator_matrix(op) * psi).norm() < 1e-13);
}

TEST_CASE("decomposition inverts to_matrix") {
    PauliSum op(3);
    op.add("XYZ", 0.25);
    op.add("ZIX", -1.5);
    op.add("III", 3.0);
    CHECK(max_coefficient_difference(pauli_decompose(op.to_matrix()), op) < 1e-14);
}

TEST_CASE("permutation sums enumerate distinct arrangements") {
    CHECK(permutation_sum("XXZZ").size() == 6);
    CHECK(permutation_sum("XYZI").size() == 24);
    CHECK(permutation_sum("ZZZ", 2.0).coefficient("ZZZ") == doctest::Approx(2.0));
}

TEST_CASE("tensor powers of single-qubit operators") {
    const PauliSum s = single_qubit(1.0, 0.0, 1.0);
    const PauliSum s3 = tensor_power(s, 3);
    CHECK(s3.size() == 8);
    CHECK(s3.coefficient("XZX") == doctest::Approx(1.0));
    CMatrix expected = CMatrix::Zero(8, 8);
    for (const char *labels : {"XXX", "XXZ", "XZX", "XZZ", "ZXX", "ZXZ", "ZZX", "ZZZ"}) {
        expected += oracle::pauli_string_matrix(labels);
    }
    CHECK((s3.to_matrix() - expected).cwiseAbs().maxCoeff() < 1e-14);
}
