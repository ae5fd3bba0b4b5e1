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
#include "dicke/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dicke {

namespace {

void require_even(int n, const char *what) {
    if (n < 2 || n % 2 != 0) {
        throw std::domain_error(std::string(what) + ": n must be even and >= 2");
    }
}

// e^{-m γ} with the convention 0·∞ = 0 in the exponent.
double decay(double m, double gamma) { return m == 0.0 ? 1.0 : std::exp(-m * gamma); }

double sign_pow(int k) { return k % 2 == 0 ? 1.0 : -1.0; }

} // namespace

double pure_correlation(int n, double theta) {
    require_even(n, "pure_correlation");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    double sum = 0.0;
    for (int k = 0; k <= n / 2; ++k) {
        const double b = binomial(n / 2, k);
        sum += sign_pow(k) * b * b * std::pow(c, n - 2 * k) * std::pow(s, 2 * k);
    }
    return sum;
}

double gamma_factor(int n, int k, const NoiseChannel &ch) {
    require_even(n, "gamma_factor");
    if (k < 0 || k > n / 2) {
        throw std::domain_error("gamma_factor: k out of range");
    }
    const double g = ch.gamma();
    switch (ch.kind()) {
    case ChannelKind::AD:
        return decay(n / 2.0 - k, g) * std::pow(1.0 - 2.0 * std::exp(-g), k);
    case ChannelKind::PD:
        return sign_pow(k) * decay(n - 2.0 * k, g);
    case ChannelKind::DP:
        return sign_pow(k) * std::pow(1.0 - g, n);
    }
    return 0.0;
}

double noisy_correlation(int n, double theta, const NoiseChannel &ch) {
    require_even(n, "noisy_correlation");
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    double sum = 0.0;
    for (int k = 0; k <= n / 2; ++k) {
        const double b = binomial(n / 2, k);
        sum += b * b * gamma_factor(n, k, ch) * std::pow(c, n - 2 * k) * std::pow(s, 2 * k);
    }
    return sum;
}

std::vector<double> theta_grid(int samples) {
    if (samples < 2) {
        throw std::invalid_argument("theta_grid: at least two samples are required");
    }
    std::vector<double> t(static_cast<std::size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        t[static_cast<std::size_t>(i)] = 2.0 * std::numbers::pi * i / (samples - 1);
    }
    return t;
}

CorrelationCurve correlation_curve(int n, const std::vector<double> &thetas,
                                   std::optional<NoiseChannel> ch) {
    CorrelationCurve curve;
    curve.n = n;
    curve.channel = ch;
    curve.samples.reserve(thetas.size());
    for (double t : thetas) {
        curve.samples.push_back({t, ch ? noisy_correlation(n, t, *ch) : pure_correlation(n, t)});
    }
    return curve;
}

double asymptotic_correlation(int n, double theta, ChannelKind kind) {
    require_even(n, "asymptotic_correlation");
    const double s = std::pow(std::sin(theta), n);
    switch (kind) {
    case ChannelKind::AD:
        return s;
    case ChannelKind::PD:
        return sign_pow(n / 2) * s;
    case ChannelKind::DP:
        break;
    }
    throw unsupported_channel("asymptotic_correlation: depolarizing noise flattens the curve to "
                              "zero and has no asymptotic component");
}

CorrelationCurve beat_component(const CorrelationCurve &curve) {
    if (!curve.channel || curve.channel->kind() == ChannelKind::DP) {
        throw unsupported_channel("beat_component: defined for amplitude and phase damping only");
    }
    const int n = curve.n;
    const auto &s = curve.samples;
    if (s.size() < 3) {
        throw std::invalid_argument("beat_component: grid too small");
    }
    const double two_pi = 2.0 * std::numbers::pi;
    const double h = s[1].theta - s[0].theta;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (std::abs(s[i].theta - s[i - 1].theta - h) > 1e-9 * std::max(1.0, h)) {
            throw std::invalid_argument("beat_component: theta grid is not uniform");
        }
    }
    // Periodic samples: drop a closing point at θ_0 + 2π.
    std::size_t m = s.size();
    if (std::abs(s.back().theta - s.front().theta - two_pi) < 1e-9) {
        --m;
    }
    if (std::abs(static_cast<double>(m) * h - two_pi) > 1e-9) {
        throw std::invalid_argument("beat_component: grid must span exactly one period");
    }
    if (static_cast<int>(m) < 4 * n) {
        throw std::invalid_argument("beat_component: need at least 4n samples per period");
    }
    const ChannelKind kind = curve.channel->kind();
    std::vector<double> a(static_cast<std::size_t>(n + 1), 0.0);
    std::vector<double> b(static_cast<std::size_t>(n + 1), 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const double f = asymptotic_correlation(n, s[i].theta, kind);
        for (int k = 0; k <= n; ++k) {
            a[static_cast<std::size_t>(k)] += f * std::cos(k * s[i].theta);
            b[static_cast<std::size_t>(k)] += f * std::sin(k * s[i].theta);
        }
    }
    const double md = static_cast<double>(m);
    CorrelationCurve out = curve;
    out.note = "asymptote subtracted by trigonometric projection, harmonics 0.." +
               std::to_string(n);
    for (auto &sample : out.samples) {
        double series = a[0] / md;
        for (int k = 1; k <= n; ++k) {
            series += 2.0 / md *
                      (a[static_cast<std::size_t>(k)] * std::cos(k * sample.theta) +
                       b[static_cast<std::size_t>(k)] * std::sin(k * sample.theta));
        }
        sample.value -= series;
    }
    return out;
}

double max_abs(const CorrelationCurve &curve) {
    double m = 0.0;
    for (const auto &s : curve.samples) {
        m = std::max(m, std::abs(s.value));
    }
    return m;
}

PauliSum correlation_operator(int n, double theta, Axis k, Axis j) {
    if (k == j) {
        throw std::invalid_argument("correlation_operator: axes must differ");
    }
    double u[4] = {0.0, 0.0, 0.0, 0.0};
    u[static_cast<int>(k)] = std::cos(theta);
    u[static_cast<int>(j)] = std::sin(theta);
    return tensor_power(single_qubit(u[1], u[2], u[3]), n);
}

double dense_correlation(int n, double theta, const NoiseChannel &ch, Axis k, Axis j) {
    require_even(n, "dense_correlation");
    require_density_cap(n, "dense_correlation");
    const DensityMatrix rho = apply_channel(DensityMatrix(symmetric_dicke_state(n)), ch);
    return expectation(correlation_operator(n, theta, k, j), rho);
}

} // namespace dicke
