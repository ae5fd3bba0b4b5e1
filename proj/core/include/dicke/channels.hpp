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
#include "dicke/qcore.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dicke {

enum class ChannelKind { AD, PD, DP };

[[nodiscard]] std::string to_string(ChannelKind kind);
/// Accepts "ad", "pd", "dp" in any case.
[[nodiscard]] ChannelKind parse_channel_kind(std::string_view s);

/// Single-qubit noise channel with dimensionless rate gamma. AD and PD
/// accept gamma = +inf (the asymptotic channel); DP requires gamma <= 1.
class NoiseChannel {
  public:
    NoiseChannel(ChannelKind kind, double gamma);

    [[nodiscard]] ChannelKind kind() const noexcept { return kind_; }
    [[nodiscard]] double gamma() const noexcept { return gamma_; }

    [[nodiscard]] static NoiseChannel ad(double g) { return {ChannelKind::AD, g}; }
    [[nodiscard]] static NoiseChannel pd(double g) { return {ChannelKind::PD, g}; }
    [[nodiscard]] static NoiseChannel dp(double g) { return {ChannelKind::DP, g}; }

  private:
    ChannelKind kind_;
    double gamma_;
};

struct KrausSet {
    std::vector<Matrix2c> operators;

    /// max |Σ K†K - 𝟙|.
    [[nodiscard]] double completeness_error() const;
    /// Σ K ρ K† on a single qubit.
    [[nodiscard]] Matrix2c apply(const Matrix2c &rho) const;
};

[[nodiscard]] KrausSet kraus_set(const NoiseChannel &ch);

/// Heisenberg-picture action on single-qubit Paulis:
/// σ_k -> scale_k σ_k for k = x, y and σ_z -> shift_z 𝟙 + scale_z σ_z.
struct PauliTransform {
    double scale_x = 1.0;
    double scale_y = 1.0;
    double scale_z = 1.0;
    double shift_z = 0.0;
};

[[nodiscard]] PauliTransform pauli_transform(const NoiseChannel &ch);

/// Dual channel applied to every qubit of a Pauli sum.
[[nodiscard]] PauliSum heisenberg(const PauliSum &op, const NoiseChannel &ch);

/// Applies the channel independently to each listed qubit (1-based).
/// Single-qubit superoperators on disjoint qubits commute, so this equals the
/// sum over all q^|qubits| product Kraus operators.
[[nodiscard]] DensityMatrix apply_channel(const DensityMatrix &rho,
                                          const NoiseChannel &ch,
                                          std::span<const int> qubits);
/// Channel on every qubit.
[[nodiscard]] DensityMatrix apply_channel(const DensityMatrix &rho,
                                          const NoiseChannel &ch);

/// (1-γ)ρ + γ𝟙/2^n, the collective depolarizing map.
[[nodiscard]] DensityMatrix collective_depolarize(const DensityMatrix &rho,
                                                  double gamma);

} // namespace dicke
