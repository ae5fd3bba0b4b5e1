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
#include "dicke/oracle.hpp"

#include "dicke/bounds.hpp"
#include "dicke/correlations.hpp"
#include "dicke/discriminators.hpp"
#include "dicke/witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace dicke::oracle {

namespace {

CMatrix kron(const CMatrix &a, const CMatrix &b) {
    CMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

CMatrix single(char c) {
    CMatrix m(2, 2);
    const cplx i(0.0, 1.0);
    switch (c) {
    case 'I':
    case '0':
        m << 1, 0, 0, 1;
        break;
    case 'X':
    case 'x':
        m << 0, 1, 1, 0;
        break;
    case 'Y':
    case 'y':
        m << 0, -i, i, 0;
        break;
    case 'Z':
    case 'z':
        m << 1, 0, 0, -1;
        break;
    default:
        throw std::invalid_argument("oracle: bad Pauli label");
    }
    return m;
}

// Kraus operators written out directly from the channel definitions.
std::vector<CMatrix> kraus(const NoiseChannel &ch) {
    const double g = ch.gamma();
    std::vector<CMatrix> ks;
    CMatrix k(2, 2);
    switch (ch.kind()) {
    case ChannelKind::AD:
        k << 1, 0, 0, std::exp(-g / 2.0);
        ks.push_back(k);
        k << 0, std::sqrt(1.0 - std::exp(-g)), 0, 0;
        ks.push_back(k);
        break;
    case ChannelKind::PD:
        ks.push_back(std::sqrt((1.0 + std::exp(-g)) / 2.0) * single('I'));
        ks.push_back(std::sqrt((1.0 - std::exp(-g)) / 2.0) * single('Z'));
        break;
    case ChannelKind::DP:
        ks.push_back(std::sqrt(1.0 - 3.0 * g / 4.0) * single('I'));
        for (char c : {'X', 'Y', 'Z'}) {
            ks.push_back(std::sqrt(g / 4.0) * single(c));
        }
        break;
    }
    return ks;
}

std::vector<std::vector<int>> index_tuples(int n, int q) {
    std::vector<std::vector<int>> out;
    std::vector<int> t(static_cast<std::size_t>(n), 0);
    while (true) {
        out.push_back(t);
        int pos = n - 1;
        while (pos >= 0 && ++t[static_cast<std::size_t>(pos)] == q) {
            t[static_cast<std::size_t>(pos)] = 0;
            --pos;
        }
        if (pos < 0) {
            return out;
        }
    }
}

CMatrix embedded(const CMatrix &k, int n, int q) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (int j = 0; j < n; ++j) {
        out = kron(out, j == q ? k : single('I'));
    }
    return out;
}

} // namespace

CVector dicke_vector(int n, int k) {
    std::string bits = std::string(static_cast<std::size_t>(n - k), '0') +
                       std::string(static_cast<std::size_t>(k), '1');
    std::sort(bits.begin(), bits.end());
    CVector v = CVector::Zero(static_cast<Eigen::Index>(dim_of(n)));
    int count = 0;
    do {
        v[static_cast<Eigen::Index>(std::stoul(bits, nullptr, 2))] = 1.0;
        ++count;
    } while (std::next_permutation(bits.begin(), bits.end()));
    return v / std::sqrt(static_cast<double>(count));
}

CMatrix pauli_string_matrix(std::string_view labels) {
    CMatrix out = CMatrix::Identity(1, 1);
    for (char c : labels) {
        out = kron(out, single(c));
    }
    return out;
}

CMatrix operator_matrix(const PauliSum &op) {
    const auto dim = static_cast<Eigen::Index>(dim_of(op.num_qubits()));
    CMatrix out = CMatrix::Zero(dim, dim);
    for (const auto &t : op.terms()) {
        out += t.coefficient() * pauli_string_matrix(t.label_string());
    }
    return out;
}

CMatrix channel_output(const CMatrix &rho, int n, const NoiseChannel &ch) {
    if (n > 10) {
        throw capacity_error("oracle: at most 10 qubits");
    }
    const auto ks = kraus(ch);
    if (n <= 6) {
        CMatrix out = CMatrix::Zero(rho.rows(), rho.cols());
        for (const auto &t : index_tuples(n, static_cast<int>(ks.size()))) {
            CMatrix k = CMatrix::Identity(1, 1);
            for (int idx : t) {
                k = kron(k, ks[static_cast<std::size_t>(idx)]);
            }
            out += k * rho * k.adjoint();
        }
        return out;
    }
    CMatrix cur = rho;
    for (int q = 0; q < n; ++q) {
        CMatrix next = CMatrix::Zero(rho.rows(), rho.cols());
        for (const auto &k : ks) {
            const CMatrix e = embedded(k, n, q);
            next += e * cur * e.adjoint();
        }
        cur = std::move(next);
    }
    return cur;
}

CMatrix channel_output(const CVector &psi, int n, const NoiseChannel &ch) {
    if (n > 6) {
        return channel_output(CMatrix(psi * psi.adjoint()), n, ch);
    }
    const auto ks = kraus(ch);
    CMatrix out = CMatrix::Zero(psi.size(), psi.size());
    for (const auto &t : index_tuples(n, static_cast<int>(ks.size()))) {
        CMatrix k = CMatrix::Identity(1, 1);
        for (int idx : t) {
            k = kron(k, ks[static_cast<std::size_t>(idx)]);
        }
        const CVector v = k * psi;
        out += v * v.adjoint();
    }
    return out;
}

double oracle_expectation(const CVector &psi, int n, const NoiseChannel &ch,
                          const PauliSum &observable) {
    if (observable.num_qubits() != n) {
        throw std::invalid_argument("oracle_expectation: register size mismatch");
    }
    return (operator_matrix(observable) * channel_output(psi, n, ch)).trace().real();
}

CMatrix reduce_to_pair(const CMatrix &rho, int n, int a, int b) {
    CMatrix out = CMatrix::Zero(4, 4);
    const std::size_t dim = dim_of(n);
    const std::size_t ma = std::size_t{1} << (n - 1 - a);
    const std::size_t mb = std::size_t{1} << (n - 1 - b);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            if ((i & ~(ma | mb)) != (j & ~(ma | mb))) {
                continue;
            }
            const int ri = ((i & ma) ? 2 : 0) + ((i & mb) ? 1 : 0);
            const int rj = ((j & ma) ? 2 : 0) + ((j & mb) ? 1 : 0);
            out(ri, rj) += rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------

namespace {

const std::vector<int> kSizes{4, 6};

std::vector<double> gamma_grid() {
    std::vector<double> g;
    for (int i = 0; i <= 10; ++i) {
        g.push_back(0.05 * i);
    }
    return g;
}

const char *channel_suffix(ChannelKind k) {
    switch (k) {
    case ChannelKind::AD:
        return "ad";
    case ChannelKind::PD:
        return "pd";
    case ChannelKind::DP:
        return "dp";
    }
    return "?";
}

class Context {
  public:
    const CMatrix &rho(int n, int k, ChannelKind kind, double gamma) {
        const auto key = std::make_tuple(n, k, kind, gamma);
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, channel_output(dicke_vector(n, k), n, NoiseChannel(kind, gamma)))
                     .first;
        }
        return it->second;
    }

  private:
    std::map<std::tuple<int, int, ChannelKind, double>, CMatrix> cache_;
};

double tr(const CMatrix &op, const CMatrix &rho) { return (op * rho).trace().real(); }

// J_k = (1/2) Σ_j σ_k^j, squared by matrix multiplication.
CMatrix collective_square(int n, char axis) {
    const auto dim = static_cast<Eigen::Index>(dim_of(n));
    CMatrix j = CMatrix::Zero(dim, dim);
    for (int q = 0; q < n; ++q) {
        std::string labels(static_cast<std::size_t>(n), 'I');
        labels[static_cast<std::size_t>(q)] = axis;
        j += 0.5 * pauli_string_matrix(labels);
    }
    return j * j;
}

double fidelity(const CVector &target, const CMatrix &rho) {
    return target.dot(rho * target).real();
}

CMatrix filter_matrix(int n, double y) {
    CMatrix f1(2, 2);
    f1 << 1, 0, 0, y;
    CMatrix out = CMatrix::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        out = kron(out, f1);
    }
    return out;
}

// Tr[W^F ρ] with W = b𝟙 - |t><t|; trace matched or not.
double filtered(const CVector &target, double b, double y, const CMatrix &rho, int n,
                bool trace_matched) {
    const auto dim = static_cast<Eigen::Index>(dim_of(n));
    const CMatrix w = b * CMatrix::Identity(dim, dim) - target * target.adjoint();
    const CMatrix f = filter_matrix(n, y);
    CMatrix wf = f * w * f.adjoint();
    if (trace_matched) {
        wf *= w.trace().real() / wf.trace().real();
    }
    return tr(wf, rho);
}

double bell_fidelity(const CMatrix &pair) {
    CVector psi = CVector::Zero(4);
    psi[1] = 1.0 / std::sqrt(2.0);
    psi[2] = 1.0 / std::sqrt(2.0);
    return psi.dot(pair * psi).real();
}

CMatrix discriminator_matrix(int n) {
    const auto dim = static_cast<Eigen::Index>(dim_of(n));
    CMatrix d = CMatrix::Zero(dim, dim);
    for (char k : {'X', 'Y'}) {
        for (int i = 1; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                std::string labels(static_cast<std::size_t>(n), k);
                labels[static_cast<std::size_t>(i)] = 'Z';
                labels[static_cast<std::size_t>(j)] = 'Z';
                d -= pauli_string_matrix(labels);
            }
        }
    }
    return 2.0 / (n * (n - 2.0)) * d;
}

CMatrix correlation_matrix(int n, double theta) {
    const CMatrix s = std::cos(theta) * single('X') + std::sin(theta) * single('Z');
    CMatrix out = CMatrix::Identity(1, 1);
    for (int q = 0; q < n; ++q) {
        out = kron(out, s);
    }
    return out;
}

using Sink = std::vector<OracleReport>;

void record(Sink &out, std::string name, int n, double gamma, std::string detail, double analytic,
            double oracle) {
    out.push_back({std::move(name), n, gamma, std::move(detail), analytic, oracle,
                   std::abs(analytic - oracle)});
}

std::string fmt(const char *key, double v) { return std::string(key) + "=" + format_double(v); }

void suite_collective(Sink &out, Context &ctx, ChannelKind kind) {
    const std::string s = channel_suffix(kind);
    for (int n : kSizes) {
        const CMatrix jxy = collective_square(n, 'X') + collective_square(n, 'Y');
        const CMatrix jz = collective_square(n, 'Z');
        for (double g : gamma_grid()) {
            const NoiseChannel ch(kind, g);
            const CMatrix &rho = ctx.rho(n, n / 2, kind, g);
            record(out, "collective_jxy/" + s, n, g, "", collective_jxy(n, ch), tr(jxy, rho));
            record(out, "collective_jz/" + s, n, g, "", collective_jz(n, ch), tr(jz, rho));
        }
    }
}

void suite_fidelity(Sink &out, Context &ctx, ChannelKind kind) {
    const std::string s = channel_suffix(kind);
    for (int n : kSizes) {
        const CVector d = dicke_vector(n, n / 2);
        for (double g : gamma_grid()) {
            record(out, "dicke_fidelity/" + s, n, g, "", dicke_fidelity(n, NoiseChannel(kind, g)),
                   fidelity(d, ctx.rho(n, n / 2, kind, g)));
        }
    }
}

const std::vector<double> kFilterValues{0.5, 0.8, 1.3, 2.0};

void suite_filtered(Sink &out, Context &ctx, ChannelKind kind) {
    const std::string s = channel_suffix(kind);
    for (int n : kSizes) {
        const CVector d = dicke_vector(n, n / 2);
        const double b = n / (2.0 * n - 2.0);
        for (double g : gamma_grid()) {
            const NoiseChannel ch(kind, g);
            for (double y : kFilterValues) {
                const double analytic =
                    filtered_fidelity_witness(n, ch, FilterSpec::uniform(n, y)).value;
                record(out, "filtered_fidelity/" + s, n, g, fmt("y", y), analytic,
                       filtered(d, b, y, ctx.rho(n, n / 2, kind, g), n, kind != ChannelKind::PD));
            }
        }
    }
}

void suite_w(Sink &out, Context &ctx, ChannelKind kind) {
    const std::string s = channel_suffix(kind);
    for (int n : kSizes) {
        const CVector w = dicke_vector(n, 1);
        const double b = (n - 1.0) / n;
        for (double g : gamma_grid()) {
            const NoiseChannel ch(kind, g);
            const CMatrix &rho = ctx.rho(n, 1, kind, g);
            record(out, "w_state/" + s, n, g, "", w_state_witness(n, ch, false).value,
                   b - fidelity(w, rho));
            for (double y : kFilterValues) {
                record(out, "w_state_filtered/" + s, n, g, fmt("y", y),
                       w_state_witness(n, ch, true, y).value,
                       filtered(w, b, y, rho, n, kind != ChannelKind::PD));
            }
        }
    }
}

void suite_reduced(Sink &out, Context &ctx, ChannelKind kind) {
    const std::string s = channel_suffix(kind);
    for (int n : kSizes) {
        for (double g : gamma_grid()) {
            const CMatrix pair = reduce_to_pair(ctx.rho(n, n / 2, kind, g), n, 0, n - 1);
            record(out, "reduced_pair_fidelity/" + s, n, g, "pair=1,n",
                   reduced_pair_fidelity(n, NoiseChannel(kind, g)), bell_fidelity(pair));
        }
        const double gs = reduced_disconnection_threshold(n, kind);
        const CMatrix rho = channel_output(dicke_vector(n, n / 2), n, NoiseChannel(kind, gs));
        record(out, "reduced_disconnection_threshold/" + s, n, gs, "fidelity at threshold", 0.5,
               bell_fidelity(reduce_to_pair(rho, n, 0, 1)));
    }
}

void suite_tolerance(Sink &out) {
    for (int n : kSizes) {
        {
            ToleranceQuery q;
            q.kind = WitnessKind::Fidelity;
            q.n = n;
            const double gs = noise_tolerance(q).gamma;
            const CMatrix rho = channel_output(dicke_vector(n, n / 2), n, NoiseChannel::ad(gs));
            record(out, "fidelity_tolerance/ad", n, gs, "fidelity at threshold",
                   n / (2.0 * n - 2.0), fidelity(dicke_vector(n, n / 2), rho));
        }
        {
            ToleranceQuery q;
            q.kind = WitnessKind::WState;
            q.n = n;
            const double gs = noise_tolerance(q).gamma;
            const CMatrix rho = channel_output(dicke_vector(n, 1), n, NoiseChannel::ad(gs));
            record(out, "w_tolerance/ad", n, gs, "fidelity at threshold", (n - 1.0) / n,
                   fidelity(dicke_vector(n, 1), rho));
        }
        // Any bound between the pure value and n/2 exercises the inversion.
        const double bound = n / 2.0 + n * n / 8.0 + 0.3;
        const CMatrix jxy = collective_square(n, 'X') + collective_square(n, 'Y');
        for (ChannelKind kind : {ChannelKind::AD, ChannelKind::PD, ChannelKind::DP}) {
            ToleranceQuery q;
            q.kind = WitnessKind::Collective;
            q.n = n;
            q.channel = kind;
            q.bound = bound;
            const double gs = noise_tolerance(q).gamma;
            const CMatrix rho = channel_output(dicke_vector(n, n / 2), n, NoiseChannel(kind, gs));
            record(out, std::string("collective_tolerance/") + channel_suffix(kind), n, gs,
                   fmt("bound", bound), bound, tr(jxy, rho));
        }
    }
}

void suite_discriminator(Sink &out, Context &ctx, ChannelKind kind) {
    const std::string s = channel_suffix(kind);
    for (int n : kSizes) {
        const CMatrix d = discriminator_matrix(n);
        for (double g : gamma_grid()) {
            record(out, "discriminator/" + s, n, g, "",
                   discriminator_expectation(n, NoiseChannel(kind, g)),
                   tr(d, ctx.rho(n, n / 2, kind, g)));
        }
    }
}

const std::vector<double> kThetas{0.0, std::numbers::pi / 7.0, std::numbers::pi / 4.0,
                                  std::numbers::pi / 3.0, std::numbers::pi / 2.0, 2.0, 4.0};

void suite_correlation(Sink &out, Context &ctx, ChannelKind kind) {
    const std::string s = channel_suffix(kind);
    for (int n : kSizes) {
        for (double t : kThetas) {
            const CMatrix c = correlation_matrix(n, t);
            for (double g : gamma_grid()) {
                record(out, "noisy_correlation/" + s, n, g, fmt("theta", t),
                       noisy_correlation(n, t, NoiseChannel(kind, g)),
                       tr(c, ctx.rho(n, n / 2, kind, g)));
            }
        }
    }
}

void suite_correlation_pure(Sink &out) {
    for (int n : kSizes) {
        const CVector d = dicke_vector(n, n / 2);
        for (double t : kThetas) {
            record(out, "pure_correlation", n, 0.0, fmt("theta", t), pure_correlation(n, t),
                   d.dot(correlation_matrix(n, t) * d).real());
        }
    }
}

void suite_pauli_transform(Sink &out) {
    // A fixed mixed single-qubit state with all Bloch components nonzero.
    CMatrix rho(2, 2);
    rho << 0.7, cplx(0.2, -0.1), cplx(0.2, 0.1), 0.3;
    for (ChannelKind kind : {ChannelKind::AD, ChannelKind::PD, ChannelKind::DP}) {
        for (double g : gamma_grid()) {
            const NoiseChannel ch(kind, g);
            const PauliTransform t = pauli_transform(ch);
            const CMatrix out_rho = channel_output(rho, 1, ch);
            const double scales[3] = {t.scale_x, t.scale_y, t.scale_z};
            const char axes[3] = {'X', 'Y', 'Z'};
            for (int k = 0; k < 3; ++k) {
                const CMatrix s = single(axes[k]);
                const double analytic = scales[k] * tr(s, rho) + (k == 2 ? t.shift_z : 0.0);
                record(out, std::string("pauli_transform/") + channel_suffix(kind), 1, g,
                       std::string("axis=") + axes[k], analytic, tr(s, out_rho));
            }
        }
    }
}

using SuiteFn = std::function<void(Sink &, Context &)>;

const std::vector<std::pair<std::string, SuiteFn>> &registry() {
    static const std::vector<std::pair<std::string, SuiteFn>> r = [] {
        std::vector<std::pair<std::string, SuiteFn>> v;
        const ChannelKind kinds[3] = {ChannelKind::AD, ChannelKind::PD, ChannelKind::DP};
        for (ChannelKind k : kinds) {
            v.emplace_back(std::string("collective-") + channel_suffix(k),
                           [k](Sink &o, Context &c) { suite_collective(o, c, k); });
        }
        for (ChannelKind k : {ChannelKind::AD, ChannelKind::PD}) {
            v.emplace_back(std::string("fidelity-") + channel_suffix(k),
                           [k](Sink &o, Context &c) { suite_fidelity(o, c, k); });
            v.emplace_back(std::string("filtered-") + channel_suffix(k),
                           [k](Sink &o, Context &c) { suite_filtered(o, c, k); });
            v.emplace_back(std::string("w-") + channel_suffix(k),
                           [k](Sink &o, Context &c) { suite_w(o, c, k); });
        }
        for (ChannelKind k : kinds) {
            v.emplace_back(std::string("reduced-") + channel_suffix(k),
                           [k](Sink &o, Context &c) { suite_reduced(o, c, k); });
        }
        v.emplace_back("tolerance", [](Sink &o, Context &) { suite_tolerance(o); });
        for (ChannelKind k : kinds) {
            v.emplace_back(std::string("discriminator-") + channel_suffix(k),
                           [k](Sink &o, Context &c) { suite_discriminator(o, c, k); });
        }
        v.emplace_back("correlation-pure", [](Sink &o, Context &) { suite_correlation_pure(o); });
        for (ChannelKind k : kinds) {
            v.emplace_back(std::string("correlation-") + channel_suffix(k),
                           [k](Sink &o, Context &c) { suite_correlation(o, c, k); });
        }
        v.emplace_back("pauli-transform", [](Sink &o, Context &) { suite_pauli_transform(o); });
        return v;
    }();
    return r;
}

} // namespace

std::vector<std::string> closed_form_names() {
    return {"collective_jxy/ad",
            "collective_jxy/pd",
            "collective_jxy/dp",
            "collective_jz/ad",
            "collective_jz/pd",
            "collective_jz/dp",
            "dicke_fidelity/ad",
            "dicke_fidelity/pd",
            "filtered_fidelity/ad",
            "filtered_fidelity/pd",
            "w_state/ad",
            "w_state/pd",
            "w_state_filtered/ad",
            "w_state_filtered/pd",
            "reduced_pair_fidelity/ad",
            "reduced_pair_fidelity/pd",
            "reduced_pair_fidelity/dp",
            "reduced_disconnection_threshold/ad",
            "reduced_disconnection_threshold/pd",
            "reduced_disconnection_threshold/dp",
            "fidelity_tolerance/ad",
            "w_tolerance/ad",
            "collective_tolerance/ad",
            "collective_tolerance/pd",
            "collective_tolerance/dp",
            "discriminator/ad",
            "discriminator/pd",
            "discriminator/dp",
            "pure_correlation",
            "noisy_correlation/ad",
            "noisy_correlation/pd",
            "noisy_correlation/dp",
            "pauli_transform/ad",
            "pauli_transform/pd",
            "pauli_transform/dp"};
}

std::vector<std::string> suite_names() {
    std::vector<std::string> out;
    for (const auto &[name, fn] : registry()) {
        out.push_back(name);
    }
    return out;
}

std::vector<OracleReport> cross_validate(std::string_view suite) {
    Sink out;
    Context ctx;
    bool matched = false;
    for (const auto &[name, fn] : registry()) {
        if (suite.empty() || suite == name) {
            fn(out, ctx);
            matched = true;
        }
    }
    if (!matched) {
        throw std::invalid_argument("unknown oracle suite '" + std::string(suite) + "'");
    }
    return out;
}

double max_difference(const std::vector<OracleReport> &reports) {
    double m = 0.0;
    for (const auto &r : reports) {
        m = std::max(m, r.difference);
    }
    return m;
}

nlohmann::json to_json(const OracleReport &r) {
    nlohmann::json j{{"name", r.name},         {"n", r.n},
                     {"gamma", r.gamma},       {"analytic", r.analytic},
                     {"oracle", r.oracle},     {"difference", r.difference}};
    if (!r.detail.empty()) {
        j["detail"] = r.detail;
    }
    return j;
}

nlohmann::json to_json(const std::vector<OracleReport> &reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto &r : reports) {
        arr.push_back(to_json(r));
    }
    return arr;
}

} // namespace dicke::oracle
