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
#include "dicke/pauli.hpp"
#include "dicke/qcore.hpp"

#include <optional>
#include <string>
#include <vector>

namespace dicke {

struct CorrelationSample {
    double theta;
    double value;
};

/// <C(θ)> over a θ grid; channel is empty for the pure state.
struct CorrelationCurve {
    int n = 0;
    std::optional<NoiseChannel> channel;
    std::vector<CorrelationSample> samples;
    std::string note; ///< free-form metadata, e.g. the subtraction order
};

/// <D_n^(n/2)|(cos θ σ_x + sin θ σ_z)^{⊗n}|D_n^(n/2)>.
[[nodiscard]] double pure_correlation(int n, double theta);

/// Γ^ch_{n,k}(γ). γ = +inf gives the asymptotic factor for AD and PD.
[[nodiscard]] double gamma_factor(int n, int k, const NoiseChannel &ch);

/// Σ_k (C^k_{n/2})² Γ^ch_{n,k} cos^{n-2k}θ sin^{2k}θ.
[[nodiscard]] double noisy_correlation(int n, double theta, const NoiseChannel &ch);

/// Uniform grid of `samples` points over [0, 2π] inclusive.
[[nodiscard]] std::vector<double> theta_grid(int samples);

[[nodiscard]] CorrelationCurve correlation_curve(int n, const std::vector<double> &thetas,
                                                 std::optional<NoiseChannel> ch);

/// The γ -> ∞ curve: sin^n θ for AD, (-1)^{n/2} sin^n θ for PD.
[[nodiscard]] double asymptotic_correlation(int n, double theta, ChannelKind kind);

/// Curve minus the trigonometric projection (harmonics 0..n) of the channel's
/// asymptotic curve. Needs a uniform grid over one period with at least 4n
/// samples; a closing sample at 2π is allowed. DP raises unsupported_channel.
[[nodiscard]] CorrelationCurve beat_component(const CorrelationCurve &curve);

/// max |value| over the curve.
[[nodiscard]] double max_abs(const CorrelationCurve &curve);

/// (cos θ σ_k + sin θ σ_j)^{⊗n} as a Pauli sum, k != j.
[[nodiscard]] PauliSum correlation_operator(int n, double theta, Axis k = Axis::X,
                                            Axis j = Axis::Z);

/// Dense Tr[C(θ) ρ_ch] for arbitrary axes, n <= dense cap.
[[nodiscard]] double dense_correlation(int n, double theta, const NoiseChannel &ch,
                                       Axis k = Axis::X, Axis j = Axis::Z);

} // namespace dicke
