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

#include <cstdint>
#include <string>
#include <vector>

namespace dicke {

/// Reference GHZ-class bound for the n = 6 characteristic operator.
inline constexpr double kGhzClassBound6 = 0.833;

struct Discriminator {
    int n;
    PauliSum op;
    double normalization; ///< 2 / [n(n-2)]
};

/// -N Σ_{k=x,y} σ_k^1 ⊗ Σ_l P_l(σ_k^{⊗n-3} ⊗ σ_z^{⊗2}).
[[nodiscard]] Discriminator characteristic_operator(int n);

/// The same operator without the normalization N.
[[nodiscard]] PauliSum characteristic_operator_unnormalized(int n);

/// Σ_{k=x,y} O_k / 20 for |D_6^(3)>.
[[nodiscard]] PauliSum bell_mermin_6();

/// Tr[D ρ_ch] for the channel-affected |D_n^(n/2)>.
[[nodiscard]] double discriminator_expectation(int n, const NoiseChannel &ch);

struct GhzSearchOptions {
    int restarts = 64;
    std::uint64_t seed = 20260415;
    int max_sweeps = 200;
    double angle_tolerance = 1e-7;
    double sweep_tolerance = 1e-11;
};

struct GhzSearchResult {
    double best = 0.0;
    std::vector<double> restart_values;
    std::vector<double> best_angles; ///< 3n Euler angles (Rz Ry Rz per qubit)
    std::uint64_t seed = 0;
    int restarts = 0;
};

/// <GHZ|U(θ) D U(θ)†... > maximized over local unitaries U = ⊗_j Rz Ry Rz
/// by coordinate-wise golden-section ascent from random starts. A lower
/// bound on the GHZ-class value; no optimality certificate.
[[nodiscard]] GhzSearchResult ghz_class_bound(int n, const GhzSearchOptions &opts = {});

/// <GHZ|(⊗U_j)† D (⊗U_j)|GHZ> for the given Euler angles.
[[nodiscard]] double ghz_discriminator_value(const PauliSum &d, int n,
                                             const std::vector<double> &angles);

struct Verdict {
    double expectation = 0.0;
    double class_bound = 0.0;
    std::string bound_source;
    bool ghz_excluded = false;
    std::vector<std::string> excluded_classes;
};

/// GHZ class is excluded iff expectation > bound (strict).
[[nodiscard]] Verdict discriminate(double expectation, double bound,
                                   std::string bound_source = "reference");

} // namespace dicke
