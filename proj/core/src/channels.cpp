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
#include "dicke/channels.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <stdexcept>

namespace dicke {

std::string to_string(ChannelKind kind) {
    switch (kind) {
    case ChannelKind::AD:
        return "ad";
    case ChannelKind::PD:
        return "pd";
    case ChannelKind::DP:
        return "dp";
    }
    return "?";
}

ChannelKind parse_channel_kind(std::string_view s) {
    std::string lower(s);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "ad") {
        return ChannelKind::AD;
    }
    if (lower == "pd") {
        return ChannelKind::PD;
    }
    if (lower == "dp") {
        return ChannelKind::DP;
    }
    throw std::invalid_argument("unknown channel '" + std::string(s) + "' (expected ad, pd, dp)");
}

NoiseChannel::NoiseChannel(ChannelKind kind, double gamma) : kind_(kind), gamma_(gamma) {
    if (std::isnan(gamma) || gamma < 0.0) {
        throw std::domain_error("NoiseChannel: gamma must be >= 0");
    }
    if (kind == ChannelKind::DP && gamma > 1.0) {
        throw std::domain_error("NoiseChannel: depolarizing gamma must be <= 1");
    }
}

double KrausSet::completeness_error() const {
    Matrix2c sum = Matrix2c::Zero();
    for (const auto &k : operators) {
        sum += k.adjoint() * k;
    }
    return (sum - Matrix2c::Identity()).cwiseAbs().maxCoeff();
}

Matrix2c KrausSet::apply(const Matrix2c &rho) const {
    Matrix2c out = Matrix2c::Zero();
    for (const auto &k : operators) {
        out += k * rho * k.adjoint();
    }
    return out;
}

KrausSet kraus_set(const NoiseChannel &ch) {
    const double g = ch.gamma();
    const double e = std::exp(-g);
    KrausSet set;
    switch (ch.kind()) {
    case ChannelKind::AD: {
        Matrix2c k0;
        k0 << 1, 0, 0, std::sqrt(e);
        Matrix2c k1;
        k1 << 0, std::sqrt(1.0 - e), 0, 0;
        set.operators = {k0, k1};
        break;
    }
    case ChannelKind::PD:
        set.operators = {std::sqrt((1.0 + e) / 2.0) * pauli_matrix(Pauli::I),
                         std::sqrt((1.0 - e) / 2.0) * pauli_matrix(Pauli::Z)};
        break;
    case ChannelKind::DP:
        set.operators = {std::sqrt(1.0 - 0.75 * g) * pauli_matrix(Pauli::I),
                         std::sqrt(g / 4.0) * pauli_matrix(Pauli::X),
                         std::sqrt(g / 4.0) * pauli_matrix(Pauli::Y),
                         std::sqrt(g / 4.0) * pauli_matrix(Pauli::Z)};
        break;
    }
    return set;
}

PauliTransform pauli_transform(const NoiseChannel &ch) {
    const double g = ch.gamma();
    switch (ch.kind()) {
    case ChannelKind::AD:
        return {std::exp(-g / 2.0), std::exp(-g / 2.0), std::exp(-g), 1.0 - std::exp(-g)};
    case ChannelKind::PD:
        return {std::exp(-g), std::exp(-g), 1.0, 0.0};
    case ChannelKind::DP:
        return {1.0 - g, 1.0 - g, 1.0 - g, 0.0};
    }
    return {};
}

PauliSum heisenberg(const PauliSum &op, const NoiseChannel &ch) {
    const PauliTransform t = pauli_transform(ch);
    const int n = op.num_qubits();
    std::vector<PauliString> out;
    for (const auto &term : op.terms()) {
        // Expand Π_q f(σ_q) where only Z splits into two terms.
        std::vector<std::pair<std::vector<Pauli>, double>> partial{{{}, term.coefficient()}};
        for (Pauli p : term.labels()) {
            std::vector<std::pair<std::vector<Pauli>, double>> next;
            next.reserve(partial.size() * 2);
            for (auto &[labels, c] : partial) {
                auto push = [&](Pauli q, double s) {
                    if (s == 0.0) {
                        return;
                    }
                    auto l = labels;
                    l.push_back(q);
                    next.emplace_back(std::move(l), c * s);
                };
                switch (p) {
                case Pauli::I:
                    push(Pauli::I, 1.0);
                    break;
                case Pauli::X:
                    push(Pauli::X, t.scale_x);
                    break;
                case Pauli::Y:
                    push(Pauli::Y, t.scale_y);
                    break;
                case Pauli::Z:
                    push(Pauli::I, t.shift_z);
                    push(Pauli::Z, t.scale_z);
                    break;
                }
            }
            partial = std::move(next);
        }
        for (auto &[labels, c] : partial) {
            out.emplace_back(std::move(labels), c);
        }
    }
    return PauliSum(n, std::move(out));
}

namespace {

// S[(a'b'),(ab)] = Σ_μ K[a'a] conj(K[b'b]).
Eigen::Matrix4cd superoperator(const KrausSet &set) {
    Eigen::Matrix4cd s = Eigen::Matrix4cd::Zero();
    for (const auto &k : set.operators) {
        for (int ap = 0; ap < 2; ++ap) {
            for (int bp = 0; bp < 2; ++bp) {
                for (int a = 0; a < 2; ++a) {
                    for (int b = 0; b < 2; ++b) {
                        s(2 * ap + bp, 2 * a + b) += k(ap, a) * std::conj(k(bp, b));
                    }
                }
            }
        }
    }
    return s;
}

void apply_single(CMatrix &m, int n, int qubit, const Eigen::Matrix4cd &s) {
    const std::size_t bit = qubit_mask(n, qubit);
    const std::size_t dim = dim_of(n);
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & bit) != 0) {
            continue;
        }
        for (std::size_t j = 0; j < dim; ++j) {
            if ((j & bit) != 0) {
                continue;
            }
            const std::array<Eigen::Index, 2> rows{static_cast<Eigen::Index>(i),
                                                   static_cast<Eigen::Index>(i | bit)};
            const std::array<Eigen::Index, 2> cols{static_cast<Eigen::Index>(j),
                                                   static_cast<Eigen::Index>(j | bit)};
            Eigen::Vector4cd in;
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    in[2 * a + b] = m(rows[static_cast<std::size_t>(a)],
                                      cols[static_cast<std::size_t>(b)]);
                }
            }
            const Eigen::Vector4cd res = s * in;
            for (int a = 0; a < 2; ++a) {
                for (int b = 0; b < 2; ++b) {
                    m(rows[static_cast<std::size_t>(a)], cols[static_cast<std::size_t>(b)]) =
                        res[2 * a + b];
                }
            }
        }
    }
}

// Restores exact hermiticity lost to rounding.
void symmetrize(CMatrix &m) {
    const CMatrix h = 0.5 * (m + m.adjoint());
    m = h;
}

} // namespace

DensityMatrix apply_channel(const DensityMatrix &rho, const NoiseChannel &ch,
                            std::span<const int> qubits) {
    const int n = rho.num_qubits();
    require_density_cap(n, "apply_channel");
    for (int q : qubits) {
        if (q < 1 || q > n) {
            throw std::invalid_argument("apply_channel: qubit index out of range");
        }
    }
    const Eigen::Matrix4cd s = superoperator(kraus_set(ch));
    CMatrix m = rho.matrix();
    for (int q : qubits) {
        apply_single(m, n, q - 1, s);
    }
    symmetrize(m);
    return {n, std::move(m)};
}

DensityMatrix apply_channel(const DensityMatrix &rho, const NoiseChannel &ch) {
    std::vector<int> all(static_cast<std::size_t>(rho.num_qubits()));
    for (int q = 0; q < rho.num_qubits(); ++q) {
        all[static_cast<std::size_t>(q)] = q + 1;
    }
    return apply_channel(rho, ch, all);
}

DensityMatrix collective_depolarize(const DensityMatrix &rho, double gamma) {
    if (gamma < 0.0 || gamma > 1.0) {
        throw std::domain_error("collective_depolarize: gamma must lie in [0, 1]");
    }
    const int n = rho.num_qubits();
    const auto dim = static_cast<Eigen::Index>(dim_of(n));
    CMatrix m = (1.0 - gamma) * rho.matrix() +
                (gamma / static_cast<double>(dim)) * CMatrix::Identity(dim, dim);
    return {n, std::move(m)};
}

} // namespace dicke
