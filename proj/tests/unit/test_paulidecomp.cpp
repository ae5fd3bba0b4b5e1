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
#include "dicke/paulidecomp.hpp"
#include "dicke/qcore.hpp"

#include <doctest.h>

#include <cmath>

using namespace dicke;

TEST_CASE("correlation tensor sizes") {
    CHECK(correlation_tensor(symmetric_dicke_state(4)).nonzero_count() == 40);
    CHECK(correlation_tensor(symmetric_dicke_state(6)).nonzero_count() == 544);
}

TEST_CASE("tensor rebuilds the projector") {
    const auto psi = symmetric_dicke_state(4);
    const auto t = correlation_tensor(psi);
    CHECK((t.to_operator().to_matrix() - psi.projector()).cwiseAbs().maxCoeff() < 1e-14);
    CHECK(t.at("IIII") == doctest::Approx(1.0));
    CHECK(t.at("XXXX") == doctest::Approx(1.0));
    CHECK(t.at("ZZII") == doctest::Approx(-1.0 / 3.0));
}

TEST_CASE("printed four-qubit expansion against the tensor") {
    const auto t = correlation_tensor(symmetric_dicke_state(4));
    const auto mismatches = compare_terms(t, compact_d4_expansion(), 1e-12);
    // The identity-identity-z-z group is the only disagreement.
    REQUIRE(!mismatches.empty());
    for (const auto &m : mismatches) {
        int z = 0;
        int id = 0;
        for (char c : m.labels) {
            z += c == 'z';
            id += c == '0';
        }
        CHECK(z == 2);
        CHECK(id == 2);
        CHECK(m.expected == doctest::Approx(-1.0 / 48.0));
        CHECK(m.found == doctest::Approx(2.0 / 48.0));
    }
}

TEST_CASE("identities") {
    for (const auto &id : identity_ids()) {
        const auto check = verify_identity(id);
        CHECK(!check.statement.empty());
        if (id == "antisym24-6") {
            CHECK(!check.holds);
        } else {
            CHECK_MESSAGE(check.holds, id);
        }
    }
    CHECK_THROWS_AS((void)verify_identity("nope"), std::invalid_argument);
}

TEST_CASE("setting plans rematerialize") {
    for (int n : {4, 6}) {
        const PauliSum target = correlation_tensor(symmetric_dicke_state(n)).to_operator();
        const auto plan = synthesize_settings(target);
        CHECK(plan.residual_norm < 1e-10);
        CHECK(max_coefficient_difference(materialize(plan), target) < 1e-10);
    }
    CHECK(setting_count(symmetric_dicke_state(4)) == 9);
}

TEST_CASE("printed directions give a 21-setting plan for six qubits") {
    const PauliSum target = correlation_tensor(symmetric_dicke_state(6)).to_operator();
    const auto dirs = compaction_directions(6);
    CHECK(dirs.size() == 21);
    const auto plan = plan_from_directions(target, dirs);
    CHECK(plan.size() == 21);
    CHECK(max_coefficient_difference(materialize(plan), target) < 1e-10);
    CHECK(setting_count(symmetric_dicke_state(6)) <= 21);
}

TEST_CASE("discriminator settings and raw coefficients") {
    const auto plan =
        synthesize_settings(characteristic_operator_unnormalized(6), z_plus_mk_dictionary(), {});
    CHECK(plan.size() == 10);
    CHECK(max_coefficient_difference(materialize(plan), characteristic_operator_unnormalized(6)) <
          1e-10);
    std::vector<double> raw;
    for (const auto &s : plan.settings) {
        raw.push_back(std::round(s.raw_coefficient(5) * 12.0) / 12.0);
    }
    std::sort(raw.begin(), raw.end());
    const std::vector<double> expected{-1.0 / 6, -1.0 / 6, -1.0 / 12, -1.0 / 12, 1.0 / 12,
                                       1.0 / 12, 1.0 / 6,  1.0 / 6,   5.0,       5.0};
    REQUIRE(raw.size() == expected.size());
    for (std::size_t i = 0; i < raw.size(); ++i) {
        CHECK(raw[i] == doctest::Approx(expected[i]));
    }
}

TEST_CASE("JSON plan carries settings and residual") {
    const auto plan = synthesize_settings(correlation_tensor(symmetric_dicke_state(4)).to_operator());
    const auto j = to_json(plan);
    CHECK(j.at("settings").size() == 9);
    CHECK(j.at("settings")[0].contains("u"));
    CHECK(j.at("settings")[0].contains("c"));
    CHECK(j.contains("residual_norm"));
}

TEST_CASE("setting budgets and unsupported targets") {
    SynthesisOptions opts;
    opts.max_settings = 2;
    const auto plan = synthesize_settings(
        correlation_tensor(symmetric_dicke_state(4)).to_operator(), default_dictionary(), opts);
    // Over budget: the whole dictionary is used and the plan says so.
    CHECK(plan.size() > 2);
    CHECK(plan.diagnostic.find("at most 2") != std::string::npos);
    PauliSum asymmetric(3);
    asymmetric.add("XYZ", 1.0);
    CHECK_THROWS((void)synthesize_settings(asymmetric));
}
