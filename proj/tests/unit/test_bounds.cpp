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
#include "dicke/qcore.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>

using namespace dicke;

TEST_CASE("b_bs(0) for small registers") {
    // n = 4 has the closed value 7/2 + √3.
    CHECK(biseparable_bound(4, 0.0).b_bs == doctest::Approx(3.5 + std::sqrt(3.0)).epsilon(1e-9));
    CHECK(biseparable_bound(6, 0.0).b_bs == doctest::Approx(11.018).epsilon(5e-4));
}

TEST_CASE("bound lies between the product value and the Dicke value") {
    for (double alpha : {-3.0, -1.0, 0.0, 1.0}) {
        const double b = biseparable_bound(4, alpha).b_bs;
        const double dicke = expectation(s_operator(4, alpha), symmetric_dicke_state(4));
        CHECK(b < dicke);
    }
}

TEST_CASE("bound is convex in alpha") {
    const double lo = biseparable_bound(4, -2.0).b_bs;
    const double mid = biseparable_bound(4, -1.0).b_bs;
    const double hi = biseparable_bound(4, 0.0).b_bs;
    CHECK(mid <= 0.5 * (lo + hi) + 1e-9);
}

TEST_CASE("real reduction of the largest eigenvalue") {
    const OmegaBuilder omega(6, -0.7);
    for (const auto &r : {BlochVector::from_angles(0.3, 1.1), BlochVector::from_angles(2.0, 4.0),
                          BlochVector{0.0, 0.0, 1.0}}) {
        CHECK(omega.lambda_max(r) == doctest::Approx(max_eigenvalue(omega(r))).epsilon(1e-12));
    }
    CHECK((omega_operator(6, -0.7, BlochVector{0.6, 0.0, 0.8}) -
           omega(BlochVector{0.6, 0.0, 0.8}))
              .cwiseAbs()
              .maxCoeff() < 1e-14);
}

TEST_CASE("argmax is a unit vector and matches the reported eigenvalue") {
    const auto r = biseparable_bound(4, -1.5);
    CHECK(r.argmax.norm() == doctest::Approx(1.0));
    CHECK(OmegaBuilder(4, -1.5).lambda_max(r.argmax) == doctest::Approx(r.lambda_max));
}

TEST_CASE("seesaw agrees on the one-vs-rest split and stays below elsewhere") {
    SeesawOptions opts;
    opts.starts = 8;
    const double b = biseparable_bound(4, 0.0).b_bs;
    const auto one = biseparable_bound_seesaw(4, 0.0, {1}, opts);
    CHECK(one.value == doctest::Approx(b).epsilon(1e-7));
    CHECK(one.per_start.size() == 8);
    const auto two = biseparable_bound_seesaw(4, 0.0, {1, 2}, opts);
    CHECK(two.value <= b + 1e-9);
    CHECK(biseparable_bound_seesaw(4, 0.0, {1}, opts).value == one.value);
    CHECK_THROWS((void)biseparable_bound_seesaw(4, 0.0, {}, opts));
}

TEST_CASE("JSON and cache round trips") {
    const auto r = biseparable_bound(4, 0.5);
    const auto back = bound_from_json(to_json(r));
    CHECK(back.b_bs == r.b_bs);
    CHECK(back.argmax.x == r.argmax.x);

    const auto path = std::filesystem::temp_directory_path() / "dicke_bound_cache_test.json";
    std::filesystem::remove(path);
    {
        BoundCache cache(path);
        CHECK(!cache.lookup(4, 0.5, 2000));
        CHECK(cache.get_or_compute(4, 0.5).b_bs == r.b_bs);
    }
    BoundCache reloaded(path);
    const auto hit = reloaded.lookup(4, 0.5, 2000);
    REQUIRE(hit);
    CHECK(hit->b_bs == r.b_bs);
    CHECK(!reloaded.lookup(4, 0.5, 1000));
    std::filesystem::remove(path);
}
