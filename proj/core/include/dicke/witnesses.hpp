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
#include "dicke/qcore.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dicke {

enum class WitnessKind {
    Collective,       ///< b_bs(α) - <J_x²+J_y²+αJ_z²>
    Fidelity,         ///< c_n - <D_n^(n/2)|ρ|D_n^(n/2)>
    FilteredFidelity, ///< trace-matched filtered fidelity witness
    WState,           ///< (n-1)/n - <W|ρ|W>
    WStateFiltered,
    ReducedPair,      ///< 1/2 - <ψ+|ρ_ij|ψ+>
};

[[nodiscard]] std::string to_string(WitnessKind kind);
[[nodiscard]] WitnessKind parse_witness_kind(std::string_view s);

/// Local filter ⊗_j diag(1, y_j).
struct FilterSpec {
    std::vector<double> y;

    explicit FilterSpec(std::vector<double> ys);
    [[nodiscard]] static FilterSpec uniform(int n, double y);
    [[nodiscard]] static FilterSpec identity(int n) { return uniform(n, 1.0); }

    [[nodiscard]] int size() const noexcept { return static_cast<int>(y.size()); }
    [[nodiscard]] bool is_uniform() const noexcept;
    [[nodiscard]] double product() const noexcept;
};

/// value = bound - observable; negative value certifies GME.
struct WitnessReport {
    WitnessKind kind;
    int n;
    NoiseChannel channel;
    std::optional<double> alpha;
    std::optional<double> y;
    double value;
    double bound;
    bool detected;
};

// ---------------------------------------------------------------------------
// Collective-spin witness
// ---------------------------------------------------------------------------

/// Tr[(J_x² + J_y²) ρ_ch] for the channel-affected |D_n^(n/2)>.
[[nodiscard]] double collective_jxy(int n, const NoiseChannel &ch);
/// Tr[J_z² ρ_ch].
[[nodiscard]] double collective_jz(int n, const NoiseChannel &ch);
/// Tr[S_n(α) ρ_ch] = collective_jxy + α collective_jz.
[[nodiscard]] double collective_expectation(int n, double alpha,
                                            const NoiseChannel &ch);

/// b_bs(α) - Tr[S_n(α) ρ_ch]. Throws std::invalid_argument if no bound is
/// given. With dense_check the closed form is compared against an explicit
/// channel simulation (n <= dense cap) and a numerical_error is raised on
/// disagreement above 1e-8.
[[nodiscard]] WitnessReport collective_witness(int n, double alpha,
                                               const NoiseChannel &ch,
                                               std::optional<double> bound,
                                               bool dense_check = false);

// ---------------------------------------------------------------------------
// Fidelity witnesses
// ---------------------------------------------------------------------------

/// c_n = n / (2n - 2).
[[nodiscard]] double fidelity_bound(int n);
/// <D|ρ_ch|D>; closed form for AD/PD, dense simulation for DP.
[[nodiscard]] double dicke_fidelity(int n, const NoiseChannel &ch);
[[nodiscard]] WitnessReport fidelity_witness(int n, const NoiseChannel &ch);

enum class FilterNormalization {
    TraceMatched, ///< W^F = Tr[W] F W F† / Tr[F W F†]
    None,         ///< W^F = F W F†
};

/// Dense Tr[W^F ρ] with W = bound·𝟙 - |target><target|.
[[nodiscard]] double filtered_witness_dense(const DensityMatrix &rho,
                                            const StateVector &target,
                                            double bound,
                                            const FilterSpec &filter,
                                            FilterNormalization norm =
                                                FilterNormalization::TraceMatched);

/// Filtered symmetric-Dicke fidelity witness.
///  AD, uniform y: trace-matched closed form.
///  PD, uniform y: y^n × unfiltered value. Phase damping keeps the state
///      inside the n/2-excitation subspace, so F ρ F = y^n ρ and the filter
///      only rescales F W F.
///  PD, non-uniform: dense Tr[F W F ρ] without normalization.
///  DP and non-uniform AD: dense trace-matched evaluation, n <= dense cap.
[[nodiscard]] WitnessReport filtered_fidelity_witness(int n,
                                                      const NoiseChannel &ch,
                                                      const FilterSpec &filter);

enum class FidelityTarget { SymmetricDicke, W };

struct FilterSearchOptions {
    double y_min = 1e-3;
    double y_max = 1e3;
    int grid_points = 241; ///< logarithmic bracketing grid
    double tolerance = 1e-8;
};

struct FilterOptimum {
    double y = 1.0;
    double value = 0.0;
    double unfiltered = 0.0;
    bool converged = false;
    bool no_gain = false; ///< PD: the filter cannot move the zero crossing
    double bracket_lower = 1.0;
    double bracket_upper = 1.0;
};

/// Minimizes the filtered witness over uniform y in [y_min, y_max]: log-grid
/// bracketing, then golden-section refinement. y = 1 is always a candidate,
/// so the result never exceeds the unfiltered value.
[[nodiscard]] FilterOptimum optimize_filter(int n, const NoiseChannel &ch,
                                            const FilterSearchOptions &opts = {},
                                            FidelityTarget target =
                                                FidelityTarget::SymmetricDicke);

/// W-state fidelity witness, bound (n-1)/n. AD/PD closed forms; DP dense.
[[nodiscard]] WitnessReport w_state_witness(int n, const NoiseChannel &ch,
                                            bool filtered, double y = 1.0);

// ---------------------------------------------------------------------------
// Reduced two-qubit witness
// ---------------------------------------------------------------------------

/// α_n = n / [2(n-1)].
[[nodiscard]] double alpha_n(int n);
/// <ψ+|ρ_ij|ψ+> for any pair of the channel-affected |D_n^(n/2)>.
[[nodiscard]] double reduced_pair_fidelity(int n, const NoiseChannel &ch);
/// <ψ+|ρ|ψ+> = (1 + <xx> + <yy> - <zz>)/4 for a two-qubit state.
[[nodiscard]] double bell_fidelity_from_correlations(const DensityMatrix &pair);
/// γ at which the reduced fidelity reaches 1/2.
[[nodiscard]] double reduced_disconnection_threshold(int n, ChannelKind kind);

struct ConnectivityGraph {
    int n = 0;
    std::vector<std::vector<bool>> adjacency;

    [[nodiscard]] int edge_count() const;
    [[nodiscard]] bool complete() const { return edge_count() == n * (n - 1) / 2; }
    [[nodiscard]] bool empty() const { return edge_count() == 0; }
};

/// Edge (i,j) iff the reduced pair fidelity exceeds 1/2.
[[nodiscard]] ConnectivityGraph connectivity_graph(int n, const NoiseChannel &ch);

// ---------------------------------------------------------------------------
// Noise tolerance
// ---------------------------------------------------------------------------

/// Setup-dependent practical detection threshold used for filtered curves.
inline constexpr double kDefaultPracticalThreshold = -1e-3;

struct ToleranceQuery {
    WitnessKind kind = WitnessKind::Fidelity;
    int n = 4;
    ChannelKind channel = ChannelKind::AD;
    double threshold = 0.0; ///< t in [-0.01, 0]
    double alpha = 0.0;     ///< collective witness only
    std::optional<double> bound; ///< collective witness only
    double y = 1.0;         ///< unused by optimized filtered kinds
};

struct NoiseTolerance {
    bool detectable_at_zero = false;
    bool crosses = false;   ///< false: stays below t over the scanned range
    double gamma = 0.0;     ///< crossing, or the end of the scan when !crosses
    bool closed_form = false;
};

/// Witness value for the query at the given rate (filtered kinds use the
/// optimal filter at that rate).
[[nodiscard]] double witness_value_at(const ToleranceQuery &q, double gamma);

/// Smallest γ at which the witness value rises above t. Closed forms where
/// the witness admits one, otherwise a coarse scan plus bisection to 1e-8.
[[nodiscard]] NoiseTolerance noise_tolerance(const ToleranceQuery &q);

} // namespace dicke
