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
#include "cli.hpp"
#include "recipes.hpp"
#include "sweep.hpp"

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace dicke::cli;

namespace {

std::filesystem::path temp(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("dicke_cli_test_" + name);
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_CASE("ranges") {
    const auto r = Range::parse("0:0.4:81");
    CHECK(r.values().size() == 81);
    CHECK(r.values().back() == doctest::Approx(0.4));
    CHECK(Range::parse("0.25").values() == std::vector<double>{0.25});
    CHECK(Range::parse(r.to_string()).values() == r.values());
    CHECK_THROWS_AS((void)Range::parse("0:1"), usage_error);
    CHECK_THROWS_AS((void)Range::parse("0:1:0"), usage_error);
    CHECK_THROWS_AS((void)Range::parse("a:1:3"), usage_error);
    CHECK_THROWS_AS((void)Range::parse("0:1:2.5"), usage_error);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run({"no-such-command"}) == 2);
    CHECK(run({"bound", "--n", "4", "--bogus"}) == 2);
    CHECK(run({"sweep-witness", "--n", "4", "--channel", "ad", "--gamma", "0:1:3", "--threshold",
               "0.5"}) == 2);
    CHECK(run({"sweep-witness", "--n", "4", "--channel", "zz", "--gamma", "0:1:3"}) == 2);
    CHECK(run({"bound", "--n", "4", "-o", "/nonexistent-dir/out.json"}) == 2);
    CHECK(run({"figure", "--id", "fig99"}) == 2);
    CHECK(run({}) == 2);
}

TEST_CASE("fidelity sweep writes a header and crosses zero near 0.170") {
    const auto out = temp("fid.csv");
    REQUIRE(run({"sweep-witness", "--kind", "fidelity", "--n", "6", "--channel", "ad", "--gamma",
                 "0:0.4:81", "-o", out.string()}) == 0);
    std::ifstream in(out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,gamma,value,detected");
    double prev_g = 0.0;
    double prev_v = -1.0;
    double crossing = -1.0;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        std::string n, g, v, d;
        std::getline(ss, n, ',');
        std::getline(ss, g, ',');
        std::getline(ss, v, ',');
        const double gv = std::stod(g);
        const double vv = std::stod(v);
        if (prev_v < 0.0 && vv >= 0.0 && crossing < 0.0) {
            crossing = prev_g + (gv - prev_g) * (-prev_v) / (vv - prev_v);
        }
        prev_g = gv;
        prev_v = vv;
    }
    CHECK(crossing == doctest::Approx(0.170).epsilon(0.01));
    std::filesystem::remove(out);
}

TEST_CASE("output does not depend on the worker count") {
    const auto a = temp("w1.csv");
    const auto b = temp("w3.csv");
    const std::vector<std::string> base{"sweep-witness", "--kind", "filtered-fidelity", "--n",
                                        "4,6",           "--channel", "ad", "--gamma", "0:0.3:13"};
    auto with = [&](const std::filesystem::path &p) {
        auto args = base;
        args.push_back("-o");
        args.push_back(p.string());
        return args;
    };
    ::setenv("DICKE_WORKERS", "1", 1);
    REQUIRE(run(with(a)) == 0);
    ::setenv("DICKE_WORKERS", "3", 1);
    REQUIRE(run(with(b)) == 0);
    ::setenv("DICKE_WORKERS", "2", 1);
    CHECK(slurp(a) == slurp(b));
    CHECK(!slurp(a).empty());
    ::setenv("DICKE_WORKERS", "zero", 1);
    CHECK(run(with(b)) == 2);
    ::setenv("DICKE_WORKERS", "2", 1);
    std::filesystem::remove(a);
    std::filesystem::remove(b);
}

TEST_CASE("config file supplies defaults and flags override it") {
    const auto cfg = temp("config.json");
    const auto out = temp("cfg.csv");
    {
        std::ofstream f(cfg);
        f << R"({"reduced-graph": {"n": [4], "channel": "pd", "gamma": "0:0.5:3"}})";
    }
    REQUIRE(run({"reduced-graph", "--config", cfg.string(), "-o", out.string()}) == 0);
    CHECK(slurp(out).find(",pd,") != std::string::npos);
    REQUIRE(run({"reduced-graph", "--config", cfg.string(), "--channel", "dp", "-o",
                 out.string()}) == 0);
    const auto text = slurp(out);
    CHECK(text.find(",dp,") != std::string::npos);
    CHECK(text.find(",pd,") == std::string::npos);
    std::filesystem::remove(cfg);
    std::filesystem::remove(out);
}

TEST_CASE("bound JSON") {
    const auto out = temp("bound.json");
    REQUIRE(run({"bound", "--n", "4", "--alpha", "0", "-o", out.string()}) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j.at("b_bs").get<double>() == doctest::Approx(5.232).epsilon(1e-3));
    std::filesystem::remove(out);
}

TEST_CASE("decompose JSON") {
    const auto out = temp("plan.json");
    REQUIRE(run({"decompose", "--n", "4", "--kind", "dicke", "-o", out.string()}) == 0);
    const auto j = nlohmann::json::parse(slurp(out));
    CHECK(j.at("setting_count").get<int>() == 9);
    CHECK(j.at("tensor_nonzero").get<int>() == 40);
    std::filesystem::remove(out);
}

TEST_CASE("figure registry") {
    for (const char *id : {"fig1a", "fig1b", "fig2a", "fig2b", "fig3a", "fig3b", "fig4a", "fig4b",
                           "fig4c", "fig5b", "fig6", "fig7", "fig8a", "fig8b", "fig8c", "fig8d",
                           "fig8e"}) {
        CHECK_NOTHROW(figure_recipe(id).validate());
    }
    const auto c = figure_recipe("fig2b");
    CHECK(c.threshold == -1e-3);
    CHECK(c.n.front() == 4);
    CHECK(c.n.back() == 20);
    CHECK(run({"figure", "--list"}) == 0);
}

TEST_CASE("emitted recipe configs replay through --config") {
    const auto cfg = temp("fig5b.json");
    const auto direct = temp("fig5b_direct.csv");
    const auto replay = temp("fig5b_replay.csv");
    {
        std::ofstream f(cfg);
        f << figure_recipe("fig5b").to_config().dump(2);
    }
    REQUIRE(run({"figure", "--id", "fig5b", "-o", direct.string()}) == 0);
    REQUIRE(run({"reduced-graph", "--config", cfg.string(), "-o", replay.string()}) == 0);
    CHECK(slurp(direct) == slurp(replay));
    for (const auto &p : {cfg, direct, replay}) {
        std::filesystem::remove(p);
    }
}
