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
#include "recipes.hpp"

namespace dicke::cli {

namespace {

SweepConfig make(std::string command, std::vector<int> n, std::optional<ChannelKind> ch,
                 std::optional<Range> gamma) {
    SweepConfig c;
    c.command = std::move(command);
    c.n = std::move(n);
    c.channel = ch;
    c.gamma = gamma;
    return c;
}

std::vector<int> even_sizes(int lo, int hi) {
    std::vector<int> out;
    for (int n = lo; n <= hi; n += 2) {
        out.push_back(n);
    }
    return out;
}

FigureRecipe collective(std::string id, std::string description, int n, ChannelKind ch,
                        Range gamma) {
    auto c = make("sweep-witness", {n}, ch, gamma);
    c.kind = "collective";
    c.alpha = Range{-5.0, 2.0, 36};
    return {std::move(id), std::move(description), c};
}

FigureRecipe filtered(std::string id, std::string description, std::vector<int> n, ChannelKind ch,
                      Range gamma, std::optional<Range> y) {
    auto c = make("sweep-witness", std::move(n), ch, gamma);
    c.kind = "filtered-fidelity";
    c.y = y;
    return {std::move(id), std::move(description), c};
}

FigureRecipe correlation(std::string id, std::string description, std::optional<ChannelKind> ch,
                         std::string mode) {
    const double top = ch == ChannelKind::DP ? 1.0 : 3.0;
    auto c = make("correlation", {6}, ch, Range{0.0, top, 31});
    c.samples = 201;
    c.mode = std::move(mode);
    return {std::move(id), std::move(description), c};
}

std::vector<FigureRecipe> build() {
    std::vector<FigureRecipe> r;
    r.push_back(filtered("fig1a", "fidelity witness, n=6 AD, unfiltered and optimally filtered",
                         {6}, ChannelKind::AD, Range{0.0, 0.4, 81}, std::nullopt));
    r.push_back(filtered("fig1b", "fidelity witness, n=6 PD, unfiltered and filtered at y=0.9",
                         {6}, ChannelKind::PD, Range{0.0, 0.4, 81}, Range::single(0.9)));
    r.push_back(filtered("fig2a", "fidelity witness under AD for n=4..50, both versions",
                         even_sizes(4, 50), ChannelKind::AD, Range{0.0, 0.25, 101}, std::nullopt));
    {
        auto c = make("filter-opt", even_sizes(4, 20), ChannelKind::AD, std::nullopt);
        c.mode = "tolerance";
        c.threshold = -1e-3;
        r.push_back({"fig2b", "AD thresholds: filtered at t=-1e-3, unfiltered at 0, n=4..20", c});
    }
    r.push_back(collective("fig3a", "collective witness vs alpha, n=4 AD", 4, ChannelKind::AD,
                           Range{0.0, 0.3, 7}));
    r.push_back(collective("fig3b", "collective witness vs alpha, n=6 AD", 6, ChannelKind::AD,
                           Range{0.0, 0.16, 9}));
    r.push_back(collective("fig3a-dp", "collective witness vs alpha, n=4 DP", 4, ChannelKind::DP,
                           Range{0.0, 0.16, 9}));
    r.push_back(collective("fig3b-dp", "collective witness vs alpha, n=6 DP", 6, ChannelKind::DP,
                           Range{0.0, 0.16, 9}));
    r.push_back(filtered("fig4a", "DP filtered fidelity witness, n=4, y=0.1..3", {4},
                         ChannelKind::DP, Range{0.0, 0.3, 61}, Range{0.1, 3.0, 30}));
    r.push_back(filtered("fig4b", "DP filtered fidelity witness, n=6, y=0.1..3", {6},
                         ChannelKind::DP, Range{0.0, 0.3, 61}, Range{0.1, 3.0, 30}));
    r.push_back(filtered("fig4c", "DP filtered fidelity witness surface, n=6", {6},
                         ChannelKind::DP, Range{0.0, 0.3, 61}, Range{0.05, 3.0, 60}));
    r.push_back({"fig5b", "reduced-pair Bell fidelity, n=4,6, all channels",
                 make("reduced-graph", {4, 6}, std::nullopt, Range{0.0, 1.0, 201})});
    r.push_back({"fig6", "discriminator curves, n=4,6,8,10, all channels",
                 make("discriminate", {4, 6, 8, 10}, std::nullopt, Range{0.0, 1.0, 101})});
    {
        auto c = make("correlation", {4, 6, 8, 10}, std::nullopt, std::nullopt);
        r.push_back({"fig7", "pure-state correlation curves, n=4,6,8,10", c});
    }
    r.push_back(correlation("fig8a", "n=6 correlation surface, AD", ChannelKind::AD, "raw"));
    r.push_back(correlation("fig8b", "n=6 correlation surface, PD", ChannelKind::PD, "raw"));
    r.push_back(correlation("fig8c", "n=6 correlation surface, DP", ChannelKind::DP, "raw"));
    r.push_back(correlation("fig8d", "n=6 AD surface minus asymptote", ChannelKind::AD, "beat"));
    r.push_back(correlation("fig8e", "n=6 PD surface minus asymptote", ChannelKind::PD, "beat"));
    return r;
}

} // namespace

const std::vector<FigureRecipe> &figure_recipes() {
    static const std::vector<FigureRecipe> recipes = build();
    return recipes;
}

SweepConfig figure_recipe(std::string_view id) {
    for (const auto &r : figure_recipes()) {
        if (r.id == id) {
            return r.config;
        }
    }
    throw usage_error("unknown figure id '" + std::string(id) + "'");
}

} // namespace dicke::cli
