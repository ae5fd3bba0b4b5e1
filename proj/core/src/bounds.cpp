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
#include "dicke/bounds.hpp"

#include "dicke/pauli.hpp"
#include "dicke/qcore.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <limits>
#include <stdexcept>
#include <tuple>

namespace dicke {

double BlochVector::norm() const noexcept { return std::sqrt(x * x + y * y + z * z); }

BlochVector BlochVector::from_angles(double theta, double phi) noexcept {
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

namespace {

void require_bound_size(int n) {
    if (n < 4 || n % 2 != 0) {
        throw std::domain_error("biseparability bound: n must be even and >= 4");
    }
    if (n - 1 > 11) {
        throw capacity_error("biseparability bound: n - 1 exceeds 11 qubits");
    }
}

PauliSum local_sum(int m, Pauli p) {
    PauliSum s(m);
    for (int j = 0; j < m; ++j) {
        std::vector<Pauli> labels(static_cast<std::size_t>(m), Pauli::I);
        labels[static_cast<std::size_t>(j)] = p;
        s.add(PauliString(labels, 1.0));
    }
    return s;
}

PauliSum pair_sum(int m, Pauli p) {
    PauliSum s(m);
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            std::vector<Pauli> labels(static_cast<std::size_t>(m), Pauli::I);
            labels[static_cast<std::size_t>(i)] = p;
            labels[static_cast<std::size_t>(j)] = p;
            s.add(PauliString(labels, 1.0));
        }
    }
    return s;
}

} // namespace

OmegaBuilder::OmegaBuilder(int n, double alpha) : n_(n), alpha_(alpha) {
    require_bound_size(n);
    const int m = n - 1;
    qx_ = local_sum(m, Pauli::X).to_matrix();
    qy_ = local_sum(m, Pauli::Y).to_matrix();
    qz_ = local_sum(m, Pauli::Z).to_matrix();
    r_alpha_ = (pair_sum(m, Pauli::X) + pair_sum(m, Pauli::Y) + alpha * pair_sum(m, Pauli::Z))
                   .to_matrix();
}

CMatrix OmegaBuilder::operator()(const BlochVector &r) const {
    return r.x * qx_ + r.y * qy_ + (alpha_ * r.z) * qz_ + r_alpha_;
}

double OmegaBuilder::lambda_max(const BlochVector &r) const {
    // A collective rotation about z on qubits 2..n maps (x, y) to
    // (sqrt(x²+y²), 0) and leaves R unchanged, so the spectrum only depends
    // on the in-plane radius; the rotated operator is real symmetric.
    const double rho = std::hypot(r.x, r.y);
    const Eigen::MatrixXd m = (rho * qx_ + (alpha_ * r.z) * qz_ + r_alpha_).real();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(m, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        throw numerical_error("OmegaBuilder: eigensolver failed");
    }
    return es.eigenvalues().maxCoeff();
}

CMatrix omega_operator(int n, double alpha, const BlochVector &r) {
    return OmegaBuilder(n, alpha)(r);
}

namespace {

struct Candidate {
    double theta;
    double phi;
    double value;
    BlochVector r;
};

bool better(const Candidate &a, const Candidate &b) {
    if (std::abs(a.value - b.value) > 1e-12) {
        return a.value > b.value;
    }
    return std::tie(a.r.x, a.r.y, a.r.z) < std::tie(b.r.x, b.r.y, b.r.z);
}

Candidate evaluate(const OmegaBuilder &omega, double theta, double phi) {
    const BlochVector r = BlochVector::from_angles(theta, phi);
    return {theta, phi, omega.lambda_max(r), r};
}

Candidate refine(const OmegaBuilder &omega, Candidate c, double step, double tol) {
    while (step > tol) {
        bool moved = false;
        for (const auto &[dt, dp] : {std::pair{step, 0.0}, std::pair{-step, 0.0},
                                     std::pair{0.0, step}, std::pair{0.0, -step}}) {
            const Candidate trial = evaluate(omega, c.theta + dt, c.phi + dp);
            if (trial.value > c.value + 1e-15) {
                c = trial;
                moved = true;
            }
        }
        if (!moved) {
            step /= 2.0;
        }
    }
    return c;
}

} // namespace

BoundResult biseparable_bound(int n, double alpha, const BoundOptions &opts) {
    if (opts.grid_points < 1) {
        throw std::invalid_argument("biseparable_bound: grid_points must be >= 1");
    }
    const OmegaBuilder omega(n, alpha);
    const int m = opts.grid_points;
    const double golden = std::numbers::pi * (3.0 - std::sqrt(5.0));
    std::vector<Candidate> grid;
    grid.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const double z = m == 1 ? 1.0 : 1.0 - 2.0 * (i + 0.5) / m;
        grid.push_back(evaluate(omega, std::acos(z), golden * i));
    }
    std::sort(grid.begin(), grid.end(), better);
    const double spacing = std::sqrt(4.0 * std::numbers::pi / m);
    Candidate best = grid.front();
    const int starts = std::min(opts.refine_starts, m);
    for (int i = 0; i < starts; ++i) {
        const Candidate c =
            refine(omega, grid[static_cast<std::size_t>(i)], spacing, opts.angle_tolerance);
        if (better(c, best)) {
            best = c;
        }
    }
    BoundResult out;
    out.n = n;
    out.alpha = alpha;
    out.lambda_max = best.value;
    out.argmax = best.r;
    out.grid_points = m;
    out.b_bs = n / 2.0 + n * alpha / 4.0 + best.value / 2.0;
    return out;
}

// --- see-saw ---------------------------------------------------------------

namespace {

CVector random_state(std::mt19937_64 &rng, Eigen::Index dim) {
    std::normal_distribution<double> gauss;
    CVector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v[i] = cplx(gauss(rng), gauss(rng));
    }
    return v.normalized();
}

// Conditions the (A ⊗ B)-ordered operator on a fixed state of one side.
CMatrix condition_on_b(const CMatrix &s, const CVector &b, Eigen::Index da) {
    const Eigen::Index db = b.size();
    CMatrix embed = CMatrix::Zero(da * db, da);
    for (Eigen::Index i = 0; i < da; ++i) {
        embed.block(i * db, i, db, 1) = b;
    }
    return embed.adjoint() * s * embed;
}

CMatrix condition_on_a(const CMatrix &s, const CVector &a, Eigen::Index db) {
    const Eigen::Index da = a.size();
    CMatrix embed = CMatrix::Zero(da * db, db);
    for (Eigen::Index i = 0; i < da; ++i) {
        embed.block(i * db, 0, db, db) = a[i] * CMatrix::Identity(db, db);
    }
    return embed.adjoint() * s * embed;
}

} // namespace

SeesawResult biseparable_bound_seesaw(int n, double alpha, const std::vector<int> &part_a,
                                      const SeesawOptions &opts) {
    if (n < 2 || n > 8) {
        throw std::domain_error("biseparable_bound_seesaw: n must lie in 2..8");
    }
    std::vector<int> a_side = part_a;
    std::sort(a_side.begin(), a_side.end());
    if (a_side.empty() || static_cast<int>(a_side.size()) >= n ||
        std::adjacent_find(a_side.begin(), a_side.end()) != a_side.end() || a_side.front() < 1 ||
        a_side.back() > n) {
        throw std::invalid_argument("biseparable_bound_seesaw: part_a must be a proper subset of 1..n");
    }
    std::vector<int> order;
    for (int q : a_side) {
        order.push_back(q - 1);
    }
    for (int q = 0; q < n; ++q) {
        if (!std::binary_search(a_side.begin(), a_side.end(), q + 1)) {
            order.push_back(q);
        }
    }
    // Reorder qubits so that side A occupies the leading positions.
    const std::size_t dim = dim_of(n);
    std::vector<Eigen::Index> perm(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::size_t p = 0;
        for (int pos = 0; pos < n; ++pos) {
            if ((c & qubit_mask(n, order[static_cast<std::size_t>(pos)])) != 0) {
                p |= qubit_mask(n, pos);
            }
        }
        perm[c] = static_cast<Eigen::Index>(p);
    }
    const CMatrix s0 = s_operator(n, alpha).to_matrix();
    CMatrix s(s0.rows(), s0.cols());
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            s(perm[i], perm[j]) = s0(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    const auto da = static_cast<Eigen::Index>(dim_of(static_cast<int>(a_side.size())));
    const auto db = static_cast<Eigen::Index>(dim_of(n - static_cast<int>(a_side.size())));

    SeesawResult out;
    out.seed = opts.seed;
    out.value = -std::numeric_limits<double>::infinity();
    std::mt19937_64 rng(opts.seed);
    for (int start = 0; start < opts.starts; ++start) {
        CVector b = random_state(rng, db);
        CVector a;
        double value = -std::numeric_limits<double>::infinity();
        for (int it = 0; it < opts.max_iterations; ++it) {
            a = top_eigenvector(condition_on_b(s, b, da));
            const CMatrix mb = condition_on_a(s, a, db);
            b = top_eigenvector(mb);
            const double next = b.dot(mb * b).real();
            const bool done = std::abs(next - value) < opts.tolerance;
            value = next;
            if (done) {
                break;
            }
        }
        out.per_start.push_back(value);
        out.value = std::max(out.value, value);
    }
    return out;
}

// --- cache -----------------------------------------------------------------

nlohmann::json to_json(const BoundResult &r) {
    return {{"n", r.n},
            {"alpha", r.alpha},
            {"b_bs", r.b_bs},
            {"argmax", {r.argmax.x, r.argmax.y, r.argmax.z}},
            {"lambda_max", r.lambda_max},
            {"grid", r.grid_points}};
}

BoundResult bound_from_json(const nlohmann::json &j) {
    BoundResult r;
    r.n = j.at("n").get<int>();
    r.alpha = j.at("alpha").get<double>();
    r.b_bs = j.at("b_bs").get<double>();
    const auto &a = j.at("argmax");
    r.argmax = {a.at(0).get<double>(), a.at(1).get<double>(), a.at(2).get<double>()};
    r.lambda_max = j.at("lambda_max").get<double>();
    r.grid_points = j.at("grid").get<int>();
    return r;
}

BoundCache::BoundCache(std::filesystem::path path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) {
        return;
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception &) {
        throw std::runtime_error("BoundCache: cannot parse " + path_.string());
    }
    for (const auto &e : j.value("entries", nlohmann::json::array())) {
        const BoundResult r = bound_from_json(e);
        entries_[key(r.n, r.alpha, r.grid_points)] = r;
    }
}

BoundCache::Key BoundCache::key(int n, double alpha, int grid) {
    return {n, format_double(alpha), grid};
}

std::optional<BoundResult> BoundCache::lookup(int n, double alpha, int grid_points) const {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(key(n, alpha, grid_points));
    if (it == entries_.end()) {
        return std::nullopt;
    }
    return it->second;
}

BoundResult BoundCache::get_or_compute(int n, double alpha, const BoundOptions &opts) {
    if (auto hit = lookup(n, alpha, opts.grid_points)) {
        return *hit;
    }
    BoundResult r = biseparable_bound(n, alpha, opts);
    {
        std::lock_guard lock(mutex_);
        entries_[key(n, alpha, opts.grid_points)] = r;
    }
    save();
    return r;
}

void BoundCache::save() const {
    std::lock_guard lock(mutex_);
    nlohmann::json entries = nlohmann::json::array();
    for (const auto &[k, r] : entries_) {
        entries.push_back(to_json(r));
    }
    std::ofstream out(path_);
    if (!out) {
        throw std::runtime_error("BoundCache: cannot write " + path_.string());
    }
    out << nlohmann::json{{"entries", entries}}.dump(2) << '\n';
}

} // namespace dicke
