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

#include <algorithm>
#include <set>

using namespace dicke;

TEST_CASE("every closed form is exercised by a suite") {
    std::set<std::string> seen;
    for (const auto &r : oracle::cross_validate()) {
        seen.insert(r.name);
    }
    for (const auto &name : oracle::closed_form_names()) {
        CHECK_MESSAGE(seen.count(name) == 1, name);
    }
}

TEST_CASE("each suite agrees with brute force") {
    for (const auto &suite : oracle::suite_names()) {
        const auto reports = oracle::cross_validate(suite);
        CHECK_MESSAGE(!reports.empty(), suite);
        CHECK_MESSAGE(oracle::max_difference(reports) < 1e-10, suite);
    }
    CHECK_THROWS_AS((void)oracle::cross_validate("nope"), std::invalid_argument);
}

TEST_CASE("sequential Kraus path for larger registers") {
    const auto psi = dicke_state(7, 3);
    for (const auto &ch : {NoiseChannel::ad(0.2), NoiseChannel::pd(0.4), NoiseChannel::dp(0.3)}) {
        const CMatrix rho = oracle::channel_output(psi.amplitudes(), 7, ch);
        const auto library = apply_channel(DensityMatrix(psi), ch);
        CHECK((rho - library.matrix()).cwiseAbs().maxCoeff() < 1e-13);
    }
}

TEST_CASE("JSON report shape") {
    const auto reports = oracle::cross_validate("pauli-transform");
    const auto j = oracle::to_json(reports);
    CHECK(j.is_array());
    CHECK(j[0].contains("difference"));
    CHECK(j[0].contains("detail"));
}
