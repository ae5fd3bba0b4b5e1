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

#include <nlohmann/json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <tuple>
#include <vector>

namespace dicke {

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    [[nodiscard]] double norm() const noexcept;
    /// Unit vector from polar angle theta and azimuth phi.
    [[nodiscard]] static BlochVector from_angles(double theta, double phi) noexcept;
};

/// Dense pieces of Ω_α(r) for the one-vs-(n-1) split, acting on qubits 2..n.
/// Ω_α(r) = x Q_x + y Q_y + α z Q_z + R_x + R_y + α R_z.
class OmegaBuilder {
  public:
    OmegaBuilder(int n, double alpha);

    [[nodiscard]] int n() const noexcept { return n_; }
    [[nodiscard]] double alpha() const noexcept { return alpha_; }
    [[nodiscard]] CMatrix operator()(const BlochVector &r) const;
    [[nodiscard]] double lambda_max(const BlochVector &r) const;

  private:
    int n_;
    double alpha_;
    CMatrix qx_, qy_, qz_, r_alpha_;
};

[[nodiscard]] CMatrix omega_operator(int n, double alpha, const BlochVector &r);

struct BoundOptions {
    int grid_points = 2000;    ///< Fibonacci-lattice directions
    int refine_starts = 8;     ///< best grid points refined locally
    double angle_tolerance = 1e-9;
};

struct BoundResult {
    int n = 0;
    double alpha = 0.0;
    double b_bs = 0.0;
    BlochVector argmax;
    double lambda_max = 0.0;
    int grid_points = 0;
};

/// b_bs(α) = n/2 + nα/4 + max_{|r|=1} λ_max(Ω_α(r)) / 2. λ_max is convex in
/// r, so the maximum over the ball sits on the sphere.
[[nodiscard]] BoundResult biseparable_bound(int n, double alpha,
                                            const BoundOptions &opts = {});

struct SeesawOptions {
    int starts = 32;
    std::uint64_t seed = 20260415;
    double tolerance = 1e-10;
    int max_iterations = 10000;
};

struct SeesawResult {
    double value = 0.0;           ///< best <S_n(α)> over product states
    std::vector<double> per_start;
    std::uint64_t seed = 0;
};

/// Alternating maximization of <a⊗b|S_n(α)|a⊗b> across the bipartition
/// (part_a holds 1-based qubit indices). A lower bound on the bound for that
/// bipartition.
[[nodiscard]] SeesawResult biseparable_bound_seesaw(int n, double alpha,
                                                    const std::vector<int> &part_a,
                                                    const SeesawOptions &opts = {});

/// JSON file cache keyed by (n, α, grid resolution).
class BoundCache {
  public:
    explicit BoundCache(std::filesystem::path path);

    [[nodiscard]] BoundResult get_or_compute(int n, double alpha,
                                             const BoundOptions &opts = {});
    [[nodiscard]] std::optional<BoundResult> lookup(int n, double alpha,
                                                    int grid_points) const;
    void save() const;

  private:
    using Key = std::tuple<int, std::string, int>;
    static Key key(int n, double alpha, int grid);

    std::filesystem::path path_;
    std::map<Key, BoundResult> entries_;
    mutable std::mutex mutex_;
};

[[nodiscard]] nlohmann::json to_json(const BoundResult &r);
[[nodiscard]] BoundResult bound_from_json(const nlohmann::json &j);

} // namespace dicke
