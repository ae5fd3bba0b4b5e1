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
#include "dicke/witnesses.hpp"

#include "dicke/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace dicke {

namespace {

void require_even_n(int n, const char *what) {
    if (n < 4 || n % 2 != 0) {
        throw std::domain_error(std::string(what) + ": n must be even and >= 4");
    }
}

DensityMatrix noisy_state(const StateVector &psi, const NoiseChannel &ch) {
    require_density_cap(psi.num_qubits(), "dense witness evaluation");
    return apply_channel(DensityMatrix(psi), ch);
}

std::vector<double> filter_diagonal(const std::vector<double> &y) {
    const int n = static_cast<int>(y.size());
    const std::size_t dim = dim_of(n);
    std::vector<double> f(dim, 1.0);
    for (std::size_t c = 0; c < dim; ++c) {
        for (int q = 0; q < n; ++q) {
            if ((c & qubit_mask(n, q)) != 0) {
                f[c] *= y[static_cast<std::size_t>(q)];
            }
        }
    }
    return f;
}

double filtered_value(const CMatrix &rho, const CVector &target, double bound,
                      const std::vector<double> &y, FilterNormalization norm) {
    const std::vector<double> f = filter_diagonal(y);
    const auto dim = static_cast<Eigen::Index>(f.size());
    CVector ft(dim);
    double sum_f2 = 0.0;
    double sum_f2_rho = 0.0;
    for (Eigen::Index c = 0; c < dim; ++c) {
        const double fc = f[static_cast<std::size_t>(c)];
        ft[c] = fc * target[c];
        sum_f2 += fc * fc;
        sum_f2_rho += fc * fc * rho(c, c).real();
    }
    const double observed = bound * sum_f2_rho - ft.dot(rho * ft).real();
    if (norm == FilterNormalization::None) {
        return observed;
    }
    const double tr_w = bound * static_cast<double>(dim) - target.squaredNorm();
    const double tr_fwf = bound * sum_f2 - ft.squaredNorm();
    if (!(tr_fwf > 0.0)) {
        throw numerical_error("filtered witness: non-positive trace of F W F");
    }
    return tr_w / tr_fwf * observed;
}

WitnessReport make_report(WitnessKind kind, int n, const NoiseChannel &ch,
                          std::optional<double> alpha, std::optional<double> y,
                          double value, double bound) {
    return {kind, n, ch, alpha, y, value, bound, value < 0.0};
}

} // namespace

std::string to_string(WitnessKind kind) {
    switch (kind) {
    case WitnessKind::Collective:
        return "collective";
    case WitnessKind::Fidelity:
        return "fidelity";
    case WitnessKind::FilteredFidelity:
        return "filtered-fidelity";
    case WitnessKind::WState:
        return "w";
    case WitnessKind::WStateFiltered:
        return "w-filtered";
    case WitnessKind::ReducedPair:
        return "reduced-pair";
    }
    return "?";
}

WitnessKind parse_witness_kind(std::string_view s) {
    for (auto k : {WitnessKind::Collective, WitnessKind::Fidelity, WitnessKind::FilteredFidelity,
                   WitnessKind::WState, WitnessKind::WStateFiltered, WitnessKind::ReducedPair}) {
        if (s == to_string(k)) {
            return k;
        }
    }
    throw std::invalid_argument("unknown witness kind '" + std::string(s) +
                                "' (expected collective, fidelity, filtered-fidelity, w, "
                                "w-filtered, reduced-pair)");
}

FilterSpec::FilterSpec(std::vector<double> ys) : y(std::move(ys)) {
    if (y.empty()) {
        throw std::invalid_argument("FilterSpec: empty filter");
    }
    for (double v : y) {
        if (!(v > 0.0) || !std::isfinite(v)) {
            throw std::domain_error("FilterSpec: filter parameters must be positive");
        }
    }
}

FilterSpec FilterSpec::uniform(int n, double y) {
    return FilterSpec(std::vector<double>(static_cast<std::size_t>(n), y));
}

bool FilterSpec::is_uniform() const noexcept {
    return std::all_of(y.begin(), y.end(), [&](double v) { return v == y.front(); });
}

double FilterSpec::product() const noexcept {
    return std::accumulate(y.begin(), y.end(), 1.0, std::multiplies<>());
}

// --- collective ------------------------------------------------------------

double collective_jxy(int n, const NoiseChannel &ch) {
    const double g = ch.gamma();
    const double nn = n;
    switch (ch.kind()) {
    case ChannelKind::AD:
        return nn / 4.0 * (2.0 + nn * std::exp(-g));
    case ChannelKind::PD:
        return nn / 2.0 + nn * nn / 4.0 * std::exp(-2.0 * g);
    case ChannelKind::DP:
        return nn / 2.0 + nn * nn / 4.0 * (1.0 - g) * (1.0 - g);
    }
    return 0.0;
}

double collective_jz(int n, const NoiseChannel &ch) {
    const double g = ch.gamma();
    const double nn = n;
    switch (ch.kind()) {
    case ChannelKind::AD: {
        const double e = std::exp(-g);
        return 0.25 * (nn * (nn - 1.0) * (1.0 - e) * (1.0 - e) + nn * (1.0 - e * e));
    }
    case ChannelKind::PD:
        return 0.0;
    case ChannelKind::DP:
        return nn / 4.0 * g * (2.0 - g);
    }
    return 0.0;
}

double collective_expectation(int n, double alpha, const NoiseChannel &ch) {
    return collective_jxy(n, ch) + alpha * collective_jz(n, ch);
}

WitnessReport collective_witness(int n, double alpha, const NoiseChannel &ch,
                                 std::optional<double> bound, bool dense_check) {
    require_even_n(n, "collective_witness");
    if (!bound) {
        throw std::invalid_argument("collective_witness: a biseparability bound is required");
    }
    const double observed = collective_expectation(n, alpha, ch);
    if (dense_check) {
        const double dense =
            expectation(s_operator(n, alpha), noisy_state(symmetric_dicke_state(n), ch));
        if (std::abs(dense - observed) > 1e-8) {
            throw numerical_error("collective_witness: closed form and dense simulation differ by " +
                                  format_double(std::abs(dense - observed)));
        }
    }
    return make_report(WitnessKind::Collective, n, ch, alpha, std::nullopt, *bound - observed,
                       *bound);
}

// --- fidelity --------------------------------------------------------------

double fidelity_bound(int n) { return static_cast<double>(n) / (2.0 * n - 2.0); }

double dicke_fidelity(int n, const NoiseChannel &ch) {
    require_even_n(n, "dicke_fidelity");
    const double g = ch.gamma();
    switch (ch.kind()) {
    case ChannelKind::AD:
        return std::exp(-n * g / 2.0);
    case ChannelKind::PD: {
        double s = 0.0;
        for (int k = 0; k <= n / 2; ++k) {
            const double c = binomial(n / 2, k);
            s += c * c * std::exp(-g * (n - 2 * k));
        }
        return s / binomial(n, n / 2);
    }
    case ChannelKind::DP: {
        const StateVector d = symmetric_dicke_state(n);
        const DensityMatrix rho = noisy_state(d, ch);
        return d.amplitudes().dot(rho.matrix() * d.amplitudes()).real();
    }
    }
    return 0.0;
}

WitnessReport fidelity_witness(int n, const NoiseChannel &ch) {
    const double b = fidelity_bound(n);
    return make_report(WitnessKind::Fidelity, n, ch, std::nullopt, std::nullopt,
                       b - dicke_fidelity(n, ch), b);
}

double filtered_witness_dense(const DensityMatrix &rho, const StateVector &target, double bound,
                              const FilterSpec &filter, FilterNormalization norm) {
    if (rho.num_qubits() != target.num_qubits() || filter.size() != target.num_qubits()) {
        throw std::invalid_argument("filtered_witness_dense: register size mismatch");
    }
    return filtered_value(rho.matrix(), target.amplitudes(), bound, filter.y, norm);
}

namespace {

// Trace-matched filtered fidelity witness for AD and uniform y.
double filtered_ad_closed_form(int n, double gamma, double y) {
    const double nn = n;
    const double cn = fidelity_bound(n);
    const double pre = (std::pow(2.0, nn) * nn - 2.0 * nn + 2.0) * std::exp(-nn * gamma / 2.0) /
                       (nn * std::pow(y * y + 1.0, nn) - (2.0 * nn - 2.0) * std::pow(y, nn));
    return pre * (cn * std::pow(y * y + std::exp(gamma) - 1.0, nn / 2.0) - std::pow(y, nn));
}

double filtered_w_ad_closed_form(int n, double gamma, double y) {
    const double nn = n;
    const double e = std::exp(-gamma);
    const double y2 = y * y;
    return (std::pow(2.0, nn) * (nn - 1.0) - nn) * ((nn - 1.0) * (1.0 - e) - y2 * e) /
           (nn * ((nn - 1.0) * std::pow(y2 + 1.0, nn) - nn * y2));
}

} // namespace

WitnessReport filtered_fidelity_witness(int n, const NoiseChannel &ch, const FilterSpec &filter) {
    require_even_n(n, "filtered_fidelity_witness");
    if (filter.size() != n) {
        throw std::invalid_argument("filtered_fidelity_witness: filter size differs from n");
    }
    const double b = fidelity_bound(n);
    const std::optional<double> y_report =
        filter.is_uniform() ? std::optional<double>(filter.y.front()) : std::nullopt;
    double value = 0.0;
    if (ch.kind() == ChannelKind::AD && filter.is_uniform()) {
        value = filtered_ad_closed_form(n, ch.gamma(), filter.y.front());
    } else if (ch.kind() == ChannelKind::PD && filter.is_uniform()) {
        value = std::pow(filter.y.front(), n) * fidelity_witness(n, ch).value;
    } else {
        const StateVector d = symmetric_dicke_state(n);
        const auto norm = ch.kind() == ChannelKind::PD ? FilterNormalization::None
                                                       : FilterNormalization::TraceMatched;
        value = filtered_witness_dense(noisy_state(d, ch), d, b, filter, norm);
    }
    return make_report(WitnessKind::FilteredFidelity, n, ch, std::nullopt, y_report, value, b);
}

// --- W state ---------------------------------------------------------------

WitnessReport w_state_witness(int n, const NoiseChannel &ch, bool filtered, double y) {
    if (n < 3) {
        throw std::domain_error("w_state_witness: n must be >= 3");
    }
    if (!(y > 0.0)) {
        throw std::domain_error("w_state_witness: y must be positive");
    }
    const double nn = n;
    const double b = (nn - 1.0) / nn;
    const double g = ch.gamma();
    double value = 0.0;
    switch (ch.kind()) {
    case ChannelKind::AD:
        value = filtered ? filtered_w_ad_closed_form(n, g, y) : b - std::exp(-g);
        break;
    case ChannelKind::PD: {
        const double unfiltered = (nn - 2.0) / nn - (nn - 1.0) / nn * std::exp(-2.0 * g);
        value = filtered ? y * y * unfiltered : unfiltered;
        break;
    }
    case ChannelKind::DP: {
        const StateVector w = w_state(n);
        const DensityMatrix rho = noisy_state(w, ch);
        value = filtered_witness_dense(rho, w, b, FilterSpec::uniform(n, filtered ? y : 1.0));
        break;
    }
    }
    return make_report(filtered ? WitnessKind::WStateFiltered : WitnessKind::WState, n, ch,
                       std::nullopt, filtered ? std::optional<double>(y) : std::nullopt, value, b);
}

// --- filter optimization ---------------------------------------------------

FilterOptimum optimize_filter(int n, const NoiseChannel &ch, const FilterSearchOptions &opts,
                              FidelityTarget target) {
    if (!(opts.y_min > 0.0) || !(opts.y_max > opts.y_min) || opts.grid_points < 3) {
        throw std::invalid_argument("optimize_filter: bad search options");
    }
    const bool dicke = target == FidelityTarget::SymmetricDicke;
    FilterOptimum out;
    out.unfiltered = dicke ? fidelity_witness(n, ch).value : w_state_witness(n, ch, false).value;
    if (ch.kind() == ChannelKind::PD) {
        out.y = 1.0;
        out.value = out.unfiltered;
        out.converged = true;
        out.no_gain = true;
        return out;
    }

    std::function<double(double)> f;
    if (ch.kind() == ChannelKind::AD) {
        if (dicke) {
            f = [&](double y) { return filtered_ad_closed_form(n, ch.gamma(), y); };
        } else {
            f = [&](double y) { return filtered_w_ad_closed_form(n, ch.gamma(), y); };
        }
    } else {
        const StateVector psi = dicke ? symmetric_dicke_state(n) : w_state(n);
        const double b = dicke ? fidelity_bound(n) : (n - 1.0) / n;
        const CMatrix rho = noisy_state(psi, ch).matrix();
        const CVector amp = psi.amplitudes();
        f = [rho, amp, b, n](double y) {
            return filtered_value(rho, amp, b, std::vector<double>(static_cast<std::size_t>(n), y),
                                  FilterNormalization::TraceMatched);
        };
    }

    const double la = std::log(opts.y_min);
    const double lb = std::log(opts.y_max);
    const int m = opts.grid_points;
    std::vector<double> ys(static_cast<std::size_t>(m));
    std::size_t best = 0;
    double best_value = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
        const double y = std::exp(la + (lb - la) * i / (m - 1));
        ys[static_cast<std::size_t>(i)] = y;
        const double v = f(y);
        if (v < best_value) {
            best_value = v;
            best = static_cast<std::size_t>(i);
        }
    }
    const double lo = ys[best == 0 ? 0 : best - 1];
    const double hi = ys[std::min(best + 1, ys.size() - 1)];
    const auto refined = optimize::golden_section_minimize(f, lo, hi, opts.tolerance);
    out.bracket_lower = refined.lower;
    out.bracket_upper = refined.upper;
    const bool interior = best > 0 && best + 1 < ys.size();
    out.converged = refined.converged && interior;
    out.y = ys[best];
    out.value = best_value;
    if (refined.value < out.value) {
        out.y = refined.x;
        out.value = refined.value;
    }
    const double at_one = f(1.0);
    if (at_one < out.value || out.value > out.unfiltered) {
        out.y = 1.0;
        out.value = std::min(at_one, out.unfiltered);
    }
    return out;
}

// --- reduced pair ----------------------------------------------------------

double alpha_n(int n) { return static_cast<double>(n) / (2.0 * (n - 1.0)); }

double reduced_pair_fidelity(int n, const NoiseChannel &ch) {
    require_even_n(n, "reduced_pair_fidelity");
    const double a = alpha_n(n);
    const double g = ch.gamma();
    switch (ch.kind()) {
    case ChannelKind::AD:
        if (std::isinf(g)) {
            return 0.0;
        }
        return 0.5 * std::exp(-2.0 * g) * (a + std::exp(g) * (1.0 + a) - 1.0);
    case ChannelKind::DP:
        return a * (g - 1.0) * (g - 1.0) - 0.25 * (g - 2.0) * g;
    case ChannelKind::PD:
        return 0.5 * (1.0 + std::exp(-2.0 * g)) * a;
    }
    return 0.0;
}

double bell_fidelity_from_correlations(const DensityMatrix &pair) {
    if (pair.num_qubits() != 2) {
        throw std::invalid_argument("bell_fidelity_from_correlations: expects two qubits");
    }
    const double xx = expectation(PauliSum(2, {PauliString("XX", 1.0)}), pair);
    const double yy = expectation(PauliSum(2, {PauliString("YY", 1.0)}), pair);
    const double zz = expectation(PauliSum(2, {PauliString("ZZ", 1.0)}), pair);
    return (1.0 + xx + yy - zz) / 4.0;
}

double reduced_disconnection_threshold(int n, ChannelKind kind) {
    require_even_n(n, "reduced_disconnection_threshold");
    const double a = alpha_n(n);
    switch (kind) {
    case ChannelKind::AD:
        return std::log((1.0 + a + std::sqrt(a * a + 6.0 * a - 3.0)) / 2.0);
    case ChannelKind::DP:
        return 1.0 - 1.0 / std::sqrt(4.0 * a - 1.0);
    case ChannelKind::PD:
        return -0.5 * std::log((1.0 - a) / a);
    }
    return 0.0;
}

int ConnectivityGraph::edge_count() const {
    int count = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
                ++count;
            }
        }
    }
    return count;
}

ConnectivityGraph connectivity_graph(int n, const NoiseChannel &ch) {
    // The channel acts identically on every qubit of a permutation-symmetric
    // state, so each pair has the same reduced state.
    const bool linked = reduced_pair_fidelity(n, ch) > 0.5;
    ConnectivityGraph g;
    g.n = n;
    g.adjacency.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            g.adjacency[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                i != j && linked;
        }
    }
    return g;
}

// --- noise tolerance -------------------------------------------------------

double witness_value_at(const ToleranceQuery &q, double gamma) {
    const NoiseChannel ch(q.channel, gamma);
    switch (q.kind) {
    case WitnessKind::Collective:
        return collective_witness(q.n, q.alpha, ch, q.bound).value;
    case WitnessKind::Fidelity:
        return fidelity_witness(q.n, ch).value;
    case WitnessKind::FilteredFidelity:
        return optimize_filter(q.n, ch).value;
    case WitnessKind::WState:
        return w_state_witness(q.n, ch, false).value;
    case WitnessKind::WStateFiltered:
        return optimize_filter(q.n, ch, {}, FidelityTarget::W).value;
    case WitnessKind::ReducedPair:
        return 0.5 - reduced_pair_fidelity(q.n, ch);
    }
    return 0.0;
}

namespace {

std::optional<double> closed_form_tolerance(const ToleranceQuery &q) {
    const double n = q.n;
    const double t = q.threshold;
    switch (q.kind) {
    case WitnessKind::Fidelity:
        if (q.channel == ChannelKind::AD) {
            return -(2.0 / n) * std::log(fidelity_bound(q.n) - t);
        }
        return std::nullopt;
    case WitnessKind::WState:
        if (q.channel == ChannelKind::AD) {
            return -std::log((n - 1.0) / n - t);
        }
        return std::nullopt;
    case WitnessKind::Collective: {
        if (q.alpha != 0.0 || !q.bound) {
            return std::nullopt;
        }
        const double ratio = (4.0 * (*q.bound - t) - 2.0 * n) / (n * n);
        if (!(ratio > 0.0)) {
            return std::nullopt;
        }
        switch (q.channel) {
        case ChannelKind::AD:
            return -std::log(ratio);
        case ChannelKind::PD:
            return -0.5 * std::log(ratio);
        case ChannelKind::DP:
            return 1.0 - std::sqrt(ratio);
        }
        return std::nullopt;
    }
    case WitnessKind::ReducedPair:
        if (t == 0.0) {
            return reduced_disconnection_threshold(q.n, q.channel);
        }
        return std::nullopt;
    default:
        return std::nullopt;
    }
}

} // namespace

NoiseTolerance noise_tolerance(const ToleranceQuery &q) {
    if (q.threshold > 0.0 || q.threshold < -0.01) {
        throw std::domain_error("noise_tolerance: threshold must lie in [-0.01, 0]");
    }
    NoiseTolerance out;
    const double v0 = witness_value_at(q, 0.0);
    out.detectable_at_zero = v0 < q.threshold;
    if (!out.detectable_at_zero) {
        return out;
    }
    if (const auto closed = closed_form_tolerance(q)) {
        out.crosses = true;
        out.gamma = *closed;
        out.closed_form = true;
        return out;
    }
    const double g_max = q.channel == ChannelKind::DP ? 1.0 : 5.0;
    const int steps = q.channel == ChannelKind::DP ? 200 : 500;
    const auto f = [&](double g) { return witness_value_at(q, g) - q.threshold; };
    double prev = 0.0;
    for (int i = 1; i <= steps; ++i) {
        const double g = g_max * i / steps;
        if (f(g) >= 0.0) {
            const auto root = optimize::bisect(f, prev, g, 1e-8);
            out.crosses = true;
            out.gamma = root.value_or(g);
            return out;
        }
        prev = g;
    }
    out.gamma = g_max;
    return out;
}

} // namespace dicke
