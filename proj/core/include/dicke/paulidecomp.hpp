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

#include "dicke/pauli.hpp"
#include "dicke/qcore.hpp"

#include <nlohmann/json.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dicke {

/// C_{i1..in} = <φ|σ_i1 ⊗ ... ⊗ σ_in|φ> over labels "0xyz"; zeros are not
/// stored.
struct CorrelationTensor {
    int n = 0;
    std::map<std::string, double> entries;

    [[nodiscard]] std::size_t nonzero_count() const noexcept { return entries.size(); }
    /// Entry for labels in either "0xyz" or "IXYZ" form; 0 when absent.
    [[nodiscard]] double at(std::string_view labels) const;
    /// 2^-n Σ C σ ⊗ ... ⊗ σ.
    [[nodiscard]] PauliSum to_operator() const;
};

[[nodiscard]] CorrelationTensor correlation_tensor(const StateVector &psi,
                                                   double tolerance = 1e-12);

/// Operator printed as the compact 4-qubit expansion of |D_4^(2)><D_4^(2)|.
[[nodiscard]] PauliSum compact_d4_expansion();

struct TermMismatch {
    std::string labels; ///< "0xyz" form
    double expected;
    double found;
};

/// Terms where `sum` and the operator of `tensor` differ by more than tol.
[[nodiscard]] std::vector<TermMismatch> compare_terms(const CorrelationTensor &tensor,
                                                      const PauliSum &sum,
                                                      double tol = 1e-12);

// ---------------------------------------------------------------------------
// Compaction identities
// ---------------------------------------------------------------------------

struct IdentityCheck {
    std::string id;
    bool holds = false;
    double max_deviation = 0.0;
    std::string statement;
};

[[nodiscard]] std::vector<std::string> identity_ids();
/// Both sides built as operators, materialized densely and compared; holds
/// iff max |Δ| < 1e-10. Unknown ids raise std::invalid_argument.
[[nodiscard]] IdentityCheck verify_identity(std::string_view id, Axis i = Axis::X,
                                            Axis j = Axis::Y);
/// Left and right sides of an identity.
[[nodiscard]] std::pair<PauliSum, PauliSum> identity_sides(std::string_view id,
                                                           Axis i = Axis::X,
                                                           Axis j = Axis::Y);

// ---------------------------------------------------------------------------
// Measurement settings
// ---------------------------------------------------------------------------

using Direction = std::array<int, 3>;
using DirectionSet = std::vector<Direction>;

/// Primitive integer directions with entries in {-2..2}, one per ± pair,
/// ordered by squared norm.
[[nodiscard]] DirectionSet default_dictionary();
/// {k, z ± k, z ± 2k} for k = x, y.
[[nodiscard]] DirectionSet z_plus_mk_dictionary();
/// The 9 (n = 4) or 21 (n = 6) directions of the compaction identities.
[[nodiscard]] DirectionSet compaction_directions(int n);

/// One local setting: head on qubit 1 (if any) and u on the remaining
/// qubits (or on all qubits when there is no head). The setting contributes
/// c (u·σ)^{⊗w} on its full support plus marginal terms with coefficient
/// marginals[m] on every weight-m subset of the non-head qubits.
struct Setting {
    Direction direction{};
    std::array<double, 3> u{};
    double c = 0.0;
    std::optional<Pauli> head;
    std::map<int, double> marginals;

    /// c expressed against the unnormalized integer direction.
    [[nodiscard]] double raw_coefficient(int weight) const;
};

struct SettingPlan {
    int n = 0;
    std::vector<Setting> settings;
    double identity = 0.0; ///< coefficient of 𝟙, needs no setting
    PauliSum residual{1};
    double residual_norm = 0.0;
    std::string diagnostic;

    [[nodiscard]] std::size_t size() const noexcept { return settings.size(); }
};

struct SynthesisOptions {
    int max_settings = 40;
    double tolerance = 1e-10;
};

/// Smallest plan found by searching unions of symmetry orbits of the
/// dictionary, in order of total size. The target must be symmetric under
/// permutations of all qubits, or of qubits 2..n within each qubit-1 label
/// sector. An infeasible dictionary gives a plan with a nonzero residual
/// and a diagnostic.
[[nodiscard]] SettingPlan synthesize_settings(const PauliSum &target,
                                              const DirectionSet &dictionary,
                                              const SynthesisOptions &opts = {});
[[nodiscard]] SettingPlan synthesize_settings(const PauliSum &target);

/// Plan over exactly the given directions (least-squares coefficients).
[[nodiscard]] SettingPlan plan_from_directions(const PauliSum &target,
                                               const DirectionSet &directions);

[[nodiscard]] std::size_t setting_count(const PauliSum &target);
[[nodiscard]] std::size_t setting_count(const StateVector &psi);

/// Σ settings + identity + residual as a Pauli sum.
[[nodiscard]] PauliSum materialize(const SettingPlan &plan);

[[nodiscard]] nlohmann::json to_json(const SettingPlan &plan);

} // namespace dicke
