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
#include "dicke/qcore.hpp"

#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

using namespace dicke;

namespace {
constexpr double kPi = std::numbers::pi;
const double kInf = std::numeric_limits<double>::infinity();
} // namespace

TEST_CASE("pure parity at theta = pi/2") {
    for (int n = 4; n <= 10; n += 2) {
        CHECK(pure_correlation(n, kPi / 2.0) == doctest::Approx(n % 4 == 0 ? 1.0 : -1.0));
    }
}

TEST_CASE("closed form matches the Pauli-sum operator") {
    for (int n : {4, 6}) {
        for (double t : {0.0, 0.4, 1.3, 2.9}) {
            CHECK(pure_correlation(n, t) ==
                  doctest::Approx(expectation(correlation_operator(n, t),
                                              symmetric_dicke_state(n)))
                      .epsilon(1e-12));
        }
    }
}

TEST_CASE("other axis pairs agree with the x-z form by symmetry") {
    for (double t : {0.3, 1.1}) {
        const double xz = noisy_correlation(4, t, NoiseChannel::pd(0.2));
        CHECK(dense_correlation(4, t, NoiseChannel::pd(0.2), Axis::Y, Axis::Z) ==
              doctest::Approx(xz).epsilon(1e-12));
    }
}

TEST_CASE("gamma factors") {
    CHECK(gamma_factor(6, 1, NoiseChannel::dp(0.2)) == doctest::Approx(-std::pow(0.8, 6)));
    CHECK(gamma_factor(6, 0, NoiseChannel::pd(0.3)) == doctest::Approx(std::exp(-1.8)));
    CHECK(gamma_factor(6, 3, NoiseChannel::pd(kInf)) == doctest::Approx(-1.0));
    CHECK(gamma_factor(6, 2, NoiseChannel::ad(kInf)) == doctest::Approx(0.0));
}

TEST_CASE("asymptotes") {
    for (int n : {4, 6}) {
        for (double t : {0.2, kPi / 2.0, 2.5}) {
            CHECK(noisy_correlation(n, t, NoiseChannel::ad(kInf)) ==
                  doctest::Approx(asymptotic_correlation(n, t, ChannelKind::AD)));
            CHECK(noisy_correlation(n, t, NoiseChannel::pd(kInf)) ==
                  doctest::Approx(asymptotic_correlation(n, t, ChannelKind::PD)));
        }
    }
    CHECK_THROWS_AS((void)asymptotic_correlation(4, 0.1, ChannelKind::DP), unsupported_channel);
}

TEST_CASE("theta grid covers one closed period") {
    const auto g = theta_grid(5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == doctest::Approx(2.0 * kPi));
    CHECK_THROWS((void)theta_grid(1));
}

TEST_CASE("beat component removes the asymptote") {
    const auto thetas = theta_grid(121);
    const auto far = correlation_curve(6, thetas, NoiseChannel::ad(30.0));
    CHECK(max_abs(beat_component(far)) < 1e-10);
    const auto near = correlation_curve(6, thetas, NoiseChannel::ad(0.2));
    const auto beat = beat_component(near);
    CHECK(max_abs(beat) > 1e-2);
    CHECK(!beat.note.empty());
    CHECK_THROWS_AS((void)beat_component(correlation_curve(6, thetas, NoiseChannel::dp(0.2))),
                    unsupported_channel);
    CHECK_THROWS((void)beat_component(correlation_curve(6, theta_grid(9), NoiseChannel::ad(0.2))));
}

TEST_CASE("beat amplitude decays with gamma") {
    const auto thetas = theta_grid(121);
    double last = 10.0;
    for (double g : {0.0, 0.2, 0.5, 1.0, 2.0}) {
        const double a = max_abs(beat_component(correlation_curve(6, thetas, NoiseChannel::pd(g))));
        CHECK(a < last);
        last = a;
    }
}
