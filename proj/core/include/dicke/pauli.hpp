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

#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

namespace dicke {

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

enum class Axis : std::uint8_t { X = 1, Y = 2, Z = 3 };

[[nodiscard]] constexpr Pauli to_pauli(Axis a) noexcept {
    return static_cast<Pauli>(static_cast<std::uint8_t>(a));
}
[[nodiscard]] char pauli_char(Pauli p) noexcept;
[[nodiscard]] Pauli pauli_from_char(char c);
[[nodiscard]] Matrix2c pauli_matrix(Pauli p);

/// Weighted tensor product of single-qubit Pauli operators. Position 0 is
/// qubit 1 of the register.
class PauliString {
  public:
    PauliString(std::vector<Pauli> labels, double coefficient);
    /// Parses labels over {I,X,Y,Z} (case-insensitive, '0' accepted for I).
    PauliString(std::string_view labels, double coefficient);

    [[nodiscard]] int size() const noexcept {
        return static_cast<int>(labels_.size());
    }
    [[nodiscard]] const std::vector<Pauli> &labels() const noexcept {
        return labels_;
    }
    [[nodiscard]] double coefficient() const noexcept { return coeff_; }
    [[nodiscard]] std::string label_string() const;
    [[nodiscard]] int weight() const noexcept;

    // Bit masks over computational basis indices: X and Y flip, Y and Z
    // contribute a sign.
    [[nodiscard]] std::size_t x_mask() const noexcept;
    [[nodiscard]] std::size_t z_mask() const noexcept;
    [[nodiscard]] int y_count() const noexcept;

    [[nodiscard]] CMatrix to_matrix() const;

  private:
    std::vector<Pauli> labels_;
    double coeff_;
};

/// Real-weighted sum of Pauli strings kept in canonical form: terms sorted
/// by label, duplicates merged, coefficients below 1e-14 dropped.
class PauliSum {
  public:
    static constexpr double kDropTolerance = 1e-14;

    explicit PauliSum(int n);
    PauliSum(int n, std::vector<PauliString> terms);

    [[nodiscard]] static PauliSum identity(int n, double coefficient = 1.0);

    [[nodiscard]] int num_qubits() const noexcept { return n_; }
    [[nodiscard]] const std::vector<PauliString> &terms() const noexcept {
        return terms_;
    }
    [[nodiscard]] std::size_t size() const noexcept { return terms_.size(); }
    [[nodiscard]] bool empty() const noexcept { return terms_.empty(); }

    /// Coefficient of the given label string, 0 when absent.
    [[nodiscard]] double coefficient(std::string_view labels) const;

    void add(const PauliString &term);
    void add(std::string_view labels, double coefficient);

    PauliSum &operator+=(const PauliSum &other);
    PauliSum &operator-=(const PauliSum &other);
    PauliSum &operator*=(double s);

    /// Largest absolute coefficient.
    [[nodiscard]] double max_abs_coefficient() const noexcept;

    [[nodiscard]] CMatrix to_matrix() const;

    /// Applies the operator to a state vector of matching dimension.
    [[nodiscard]] CVector apply(const CVector &psi) const;

  private:
    void insert(std::vector<Pauli> labels, double coefficient);

    int n_;
    std::vector<PauliString> terms_;
};

[[nodiscard]] PauliSum operator+(PauliSum a, const PauliSum &b);
[[nodiscard]] PauliSum operator-(PauliSum a, const PauliSum &b);
[[nodiscard]] PauliSum operator*(double s, PauliSum a);

/// Tensor product a ⊗ b (a acts on the leading qubits).
[[nodiscard]] PauliSum tensor(const PauliSum &a, const PauliSum &b);

/// Single-qubit operator u_x σ_x + u_y σ_y + u_z σ_z (+ u_0 𝟙).
[[nodiscard]] PauliSum single_qubit(double ux, double uy, double uz,
                                    double u0 = 0.0);

/// a^{⊗k}.
[[nodiscard]] PauliSum tensor_power(const PauliSum &a, int k);

/// Sum over all distinct arrangements of the given multiset of labels,
/// each with unit weight (e.g. "XXZZ" gives the six distinct orderings).
[[nodiscard]] PauliSum permutation_sum(std::string labels,
                                       double coefficient = 1.0);

/// Pauli expansion of a dense Hermitian matrix: coefficients Tr[P M]/2^n.
[[nodiscard]] PauliSum pauli_decompose(const CMatrix &m);

/// Max |a_i - b_i| over the union of terms.
[[nodiscard]] double max_coefficient_difference(const PauliSum &a,
                                                const PauliSum &b);

} // namespace dicke
