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
#include "dicke/discriminators.hpp"

#include "dicke/optimize.hpp"
#include "dicke/qcore.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace dicke {

namespace {

void require_even_n(int n, const char *what) {
    if (n < 4 || n % 2 != 0) {
        throw std::domain_error(std::string(what) + ": n must be even and >= 4");
    }
}

PauliSum head_times(Pauli head, const PauliSum &rest) {
    PauliSum h(1);
    h.add(PauliString(std::vector<Pauli>{head}, 1.0));
    return tensor(h, rest);
}

} // namespace

PauliSum characteristic_operator_unnormalized(int n) {
    require_even_n(n, "characteristic_operator");
    PauliSum out(n);
    for (char k : {'X', 'Y'}) {
        const std::string tail = std::string(static_cast<std::size_t>(n - 3), k) + "ZZ";
        out -= head_times(pauli_from_char(k), permutation_sum(tail));
    }
    return out;
}

Discriminator characteristic_operator(int n) {
    const double norm = 2.0 / (static_cast<double>(n) * (n - 2.0));
    return {n, norm * characteristic_operator_unnormalized(n), norm};
}

PauliSum bell_mermin_6() {
    PauliSum out(6);
    for (char k : {'X', 'Y'}) {
        const Pauli p = pauli_from_char(k);
        out.add(std::string(6, k), 1.0);
        out -= head_times(p, permutation_sum(std::string(3, k) + "ZZ"));
        out += head_times(p, permutation_sum(std::string(1, k) + "ZZZZ"));
    }
    out *= 1.0 / 20.0;
    return out;
}

double discriminator_expectation(int n, const NoiseChannel &ch) {
    require_even_n(n, "discriminator_expectation");
    const double g = ch.gamma();
    switch (ch.kind()) {
    case ChannelKind::AD:
        if (std::isinf(g)) {
            return 0.0;
        }
        return -std::exp(-n * g / 2.0) * (std::exp(g) - 2.0);
    case ChannelKind::PD:
        return std::exp(-(n - 2.0) * g);
    case ChannelKind::DP:
        return std::pow(1.0 - g, n);
    }
    return 0.0;
}

namespace {

// Rz(a) Ry(b) Rz(c).
Matrix2c euler_unitary(double a, double b, double c) {
    const cplx i(0.0, 1.0);
    Matrix2c rz_a;
    rz_a << std::exp(-i * a / 2.0), 0, 0, std::exp(i * a / 2.0);
    Matrix2c ry;
    ry << std::cos(b / 2.0), -std::sin(b / 2.0), std::sin(b / 2.0), std::cos(b / 2.0);
    Matrix2c rz_c;
    rz_c << std::exp(-i * c / 2.0), 0, 0, std::exp(i * c / 2.0);
    return rz_a * ry * rz_c;
}

CVector rotated_ghz(int n, const std::vector<double> &angles) {
    CVector zeros = CVector::Ones(1);
    CVector ones = CVector::Ones(1);
    for (int q = 0; q < n; ++q) {
        const auto j = static_cast<std::size_t>(3 * q);
        const Matrix2c u = euler_unitary(angles[j], angles[j + 1], angles[j + 2]);
        CVector nz(zeros.size() * 2);
        CVector no(ones.size() * 2);
        for (Eigen::Index r = 0; r < zeros.size(); ++r) {
            nz[2 * r] = zeros[r] * u(0, 0);
            nz[2 * r + 1] = zeros[r] * u(1, 0);
            no[2 * r] = ones[r] * u(0, 1);
            no[2 * r + 1] = ones[r] * u(1, 1);
        }
        zeros = std::move(nz);
        ones = std::move(no);
    }
    return (zeros + ones) / std::sqrt(2.0);
}

} // namespace

double ghz_discriminator_value(const PauliSum &d, int n, const std::vector<double> &angles) {
    if (static_cast<int>(angles.size()) != 3 * n || d.num_qubits() != n) {
        throw std::invalid_argument("ghz_discriminator_value: expected 3n angles");
    }
    const CVector phi = rotated_ghz(n, angles);
    return phi.dot(d.apply(phi)).real();
}

GhzSearchResult ghz_class_bound(int n, const GhzSearchOptions &opts) {
    if (n > 8) {
        throw std::domain_error("ghz_class_bound: n must be <= 8");
    }
    if (opts.restarts < 1) {
        throw std::invalid_argument("ghz_class_bound: at least one restart is required");
    }
    const PauliSum d = characteristic_operator(n).op;
    const double two_pi = 2.0 * std::numbers::pi;
    constexpr int kSamples = 8;

    GhzSearchResult out;
    out.seed = opts.seed;
    out.restarts = opts.restarts;
    out.best = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < opts.restarts; ++r) {
        std::mt19937_64 rng(opts.seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(r + 1));
        std::uniform_real_distribution<double> angle(0.0, two_pi);
        std::vector<double> x(static_cast<std::size_t>(3 * n));
        for (double &v : x) {
            v = angle(rng);
        }
        double value = ghz_discriminator_value(d, n, x);
        for (int sweep = 0; sweep < opts.max_sweeps; ++sweep) {
            const double before = value;
            for (std::size_t c = 0; c < x.size(); ++c) {
                const double origin = x[c];
                const auto f = [&](double t) {
                    x[c] = t;
                    return -ghz_discriminator_value(d, n, x);
                };
                double start = origin;
                double start_value = -value;
                for (int s = 1; s < kSamples; ++s) {
                    const double t = origin + two_pi * s / kSamples;
                    const double v = f(t);
                    if (v < start_value) {
                        start_value = v;
                        start = t;
                    }
                }
                const double half = two_pi / kSamples;
                const auto m = optimize::golden_section_minimize(f, start - half, start + half,
                                                                 opts.angle_tolerance);
                if (-m.value > -start_value) {
                    x[c] = std::remainder(m.x, two_pi);
                    value = -m.value;
                } else {
                    x[c] = std::remainder(start, two_pi);
                    value = -start_value;
                }
            }
            if (value - before < opts.sweep_tolerance) {
                break;
            }
        }
        value = ghz_discriminator_value(d, n, x);
        out.restart_values.push_back(value);
        if (value > out.best) {
            out.best = value;
            out.best_angles = x;
        }
    }
    return out;
}

Verdict discriminate(double expectation, double bound, std::string bound_source) {
    Verdict v;
    v.expectation = expectation;
    v.class_bound = bound;
    v.bound_source = std::move(bound_source);
    v.ghz_excluded = expectation > bound;
    if (v.ghz_excluded) {
        v.excluded_classes.emplace_back("GHZ");
    }
    return v;
}

} // namespace dicke
