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

#include "dicke/channels.hpp"
#include "dicke/common.hpp"
#include "dicke/pauli.hpp"
#include "dicke/qcore.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <string_view>
#include <vector>

/// Brute-force reference computations. Everything here is deliberately
/// naive: explicit Kronecker products, explicit permutation enumeration,
/// explicit product-Kraus sums. Nothing calls the optimized paths.
namespace dicke::oracle {

/// Dicke state by enumerating the distinct permutations of 1^k 0^(n-k).
[[nodiscard]] CVector dicke_vector(int n, int k);

/// Kronecker product of 2x2 Pauli matrices.
[[nodiscard]] CMatrix pauli_string_matrix(std::string_view labels);
[[nodiscard]] CMatrix operator_matrix(const PauliSum &op);

/// K_{μ1} ⊗ ... ⊗ K_{μn} over all q^n index tuples for n <= 6; for larger
/// n (up to 10) one embedded single-qubit Kraus set per qubit in turn.
[[nodiscard]] CMatrix channel_output(const CMatrix &rho, int n, const NoiseChannel &ch);
/// Same for a pure input, using K|ψ> instead of K ρ K†.
[[nodiscard]] CMatrix channel_output(const CVector &psi, int n, const NoiseChannel &ch);

/// Tr[O ρ_ch] for ρ = |ψ><ψ|.
[[nodiscard]] double oracle_expectation(const CVector &psi, int n, const NoiseChannel &ch,
                                        const PauliSum &observable);

/// Dense reduced state on two qubits (0-based), by explicit index sums.
[[nodiscard]] CMatrix reduce_to_pair(const CMatrix &rho, int n, int a, int b);

struct OracleReport {
    std::string name;
    int n = 0;
    double gamma = 0.0;
    std::string detail; ///< extra grid coordinate, e.g. "y=0.5"
    double analytic = 0.0;
    double oracle = 0.0;
    double difference = 0.0;
};

/// Names of all closed-form expressions the library evaluates.
[[nodiscard]] std::vector<std::string> closed_form_names();
/// Suites registered with cross_validate.
[[nodiscard]] std::vector<std::string> suite_names();

/// Runs the named suite (all suites when empty) on n ∈ {4,6} and
/// γ ∈ {0, 0.05, ..., 0.5}. Unknown names raise std::invalid_argument.
[[nodiscard]] std::vector<OracleReport> cross_validate(std::string_view suite = {});

[[nodiscard]] double max_difference(const std::vector<OracleReport> &reports);

[[nodiscard]] nlohmann::json to_json(const OracleReport &r);
[[nodiscard]] nlohmann::json to_json(const std::vector<OracleReport> &reports);

} // namespace dicke::oracle
