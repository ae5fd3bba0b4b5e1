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
#include "dicke/oracle.hpp"
#include "dicke/qcore.hpp"

#include <doctest.h>

#include <array>
#include <limits>
#include <random>

using namespace dicke;

namespace {

DensityMatrix random_density(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    const auto dim = static_cast<Eigen::Index>(dim_of(n));
    CMatrix a(dim, dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        for (Eigen::Index j = 0; j < dim; ++j) {
            a(i, j) = cplx(gauss(rng), gauss(rng));
        }
    }
    CMatrix rho = a * a.adjoint();
    rho /= rho.trace().real();
    return DensityMatrix(n, rho);
}

const std::array<ChannelKind, 3> kKinds{ChannelKind::AD, ChannelKind::PD, ChannelKind::DP};

} // namespace

TEST_CASE("channel names") {
    CHECK(parse_channel_kind("AD") == ChannelKind::AD);
    CHECK(parse_channel_kind("pd") == ChannelKind::PD);
    CHECK(to_string(ChannelKind::DP) == "dp");
    CHECK_THROWS_AS((void)parse_channel_kind("xx"), std::invalid_argument);
    CHECK_THROWS_AS((void)NoiseChannel::dp(1.5), std::domain_error);
    CHECK_THROWS_AS((void)NoiseChannel::ad(-0.1), std::domain_error);
    CHECK_NOTHROW((void)NoiseChannel::ad(std::numeric_limits<double>::infinity()));
}

TEST_CASE("Kraus sets are complete") {
    for (auto kind : kKinds) {
        for (double g : {0.0, 0.1, 0.7, 1.0}) {
            CHECK(kraus_set(NoiseChannel(kind, g)).completeness_error() < 1e-15);
        }
    }
}

TEST_CASE("Heisenberg transform is dual to the Kraus action") {
    const auto rho = random_density(1, 3);
    for (auto kind : kKinds) {
        for (double g : {0.05, 0.4, 1.0}) {
            const NoiseChannel ch(kind, g);
            const Matrix2c out = kraus_set(ch).apply(rho.matrix());
            for (char axis : {'X', 'Y', 'Z'}) {
                PauliSum op(1);
                op.add(std::string(1, axis), 1.0);
                const double schrodinger = (op.to_matrix() * out).trace().real();
                const double heisenberg_value = expectation(heisenberg(op, ch), rho);
                CHECK(schrodinger == doctest::Approx(heisenberg_value).epsilon(1e-13));
            }
        }
    }
}

TEST_CASE("register channel matches the product-Kraus oracle") {
    const auto rho = random_density(3, 11);
    for (auto kind : kKinds) {
        const NoiseChannel ch(kind, 0.3);
        const CMatrix expected = oracle::channel_output(rho.matrix(), 3, ch);
        CHECK((apply_channel(rho, ch).matrix() - expected).cwiseAbs().maxCoeff() < 1e-14);
    }
}

TEST_CASE("channel on a subset of qubits") {
    const DensityMatrix rho(symmetric_dicke_state(4));
    const std::array<int, 1> first{1};
    const auto out = apply_channel(rho, NoiseChannel::ad(std::numeric_limits<double>::infinity()),
                                   first);
    const std::array<int, 1> keep{1};
    const auto q1 = partial_trace(out, keep);
    CHECK(q1.matrix()(0, 0).real() == doctest::Approx(1.0));
}

TEST_CASE("Heisenberg expectation of many-body operators") {
    const auto psi = symmetric_dicke_state(4);
    const PauliSum op = s_operator(4, -1.3);
    for (auto kind : kKinds) {
        const NoiseChannel ch(kind, 0.25);
        const double dense = expectation(op, apply_channel(DensityMatrix(psi), ch));
        CHECK(expectation(heisenberg(op, ch), psi) == doctest::Approx(dense).epsilon(1e-12));
    }
}

TEST_CASE("collective depolarizing map") {
    const DensityMatrix rho(symmetric_dicke_state(4));
    const auto out = collective_depolarize(rho, 1.0);
    CHECK((out.matrix() - CMatrix::Identity(16, 16) / 16.0).cwiseAbs().maxCoeff() < 1e-15);
    CHECK_THROWS((void)collective_depolarize(rho, 1.5));
}
