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

#include "dicke/common.hpp"
#include "dicke/oracle.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace dicke::cli {

namespace {

// Reads {"<subcommand>": {"flag": value}} config files.
class JsonConfig : public CLI::Config {
  public:
    std::string to_config(const CLI::App *, bool, bool, std::string) const override {
        return "{}";
    }

    std::vector<CLI::ConfigItem> from_config(std::istream &input) const override {
        nlohmann::json j;
        try {
            input >> j;
        } catch (const nlohmann::json::exception &e) {
            throw CLI::ConversionError(std::string("config is not valid JSON: ") + e.what());
        }
        if (!j.is_object()) {
            throw CLI::ConversionError("config must be a JSON object");
        }
        std::vector<CLI::ConfigItem> items;
        collect(j, {}, items);
        return items;
    }

  private:
    static std::string scalar(const nlohmann::json &v, const std::string &name) {
        if (v.is_string()) {
            return v.get<std::string>();
        }
        if (v.is_boolean()) {
            return v.get<bool>() ? "true" : "false";
        }
        if (v.is_number_integer()) {
            return v.dump();
        }
        if (v.is_number()) {
            return format_double(v.get<double>());
        }
        throw CLI::ConversionError("unsupported config value for '" + name + "'");
    }

    static void collect(const nlohmann::json &j, const std::vector<std::string> &parents,
                        std::vector<CLI::ConfigItem> &items) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (it->is_object()) {
                auto next = parents;
                next.push_back(it.key());
                collect(*it, next, items);
                continue;
            }
            CLI::ConfigItem item;
            item.parents = parents;
            item.name = it.key();
            if (it->is_array()) {
                for (const auto &v : *it) {
                    item.inputs.push_back(scalar(v, it.key()));
                }
            } else {
                item.inputs.push_back(scalar(*it, it.key()));
            }
            items.push_back(std::move(item));
        }
    }
};

struct Flags {
    std::vector<int> n;
    std::string channel;
    std::string gamma;
    std::string alpha;
    std::string y;
    std::string kind;
    std::string mode;
    std::string cache;
    std::string output;
    double threshold = 0.0;
    std::uint64_t seed = 20260415;
    int grid = 2000;
    int samples = 401;
    int restarts = 64;
    std::string id;
    bool list = false;
    bool emit_config = false;
};

enum Flag : unsigned {
    kN = 1u << 0,
    kChannel = 1u << 1,
    kGamma = 1u << 2,
    kAlpha = 1u << 3,
    kY = 1u << 4,
    kKind = 1u << 5,
    kMode = 1u << 6,
    kCache = 1u << 7,
    kThreshold = 1u << 8,
    kSeed = 1u << 9,
    kGrid = 1u << 10,
    kSamples = 1u << 11,
    kRestarts = 1u << 12,
};

CLI::App *add_command(CLI::App &app, Flags &f, const std::string &name,
                      const std::string &description, unsigned which,
                      const std::string &kind_help = "", const std::string &mode_help = "") {
    auto *sub = app.add_subcommand(name, description);
    if (which & kN) {
        sub->add_option("--n", f.n, "qubit counts, comma separated")->delimiter(',');
    }
    if (which & kChannel) {
        sub->add_option("--channel", f.channel, "ad, pd or dp");
    }
    if (which & kGamma) {
        sub->add_option("--gamma", f.gamma, "noise rate, start:stop:steps or a value");
    }
    if (which & kAlpha) {
        sub->add_option("--alpha", f.alpha, "J_z² weight, start:stop:steps or a value");
    }
    if (which & kY) {
        sub->add_option("--y", f.y, "filter parameter, start:stop:steps; omitted: optimized");
    }
    if (which & kKind) {
        sub->add_option("--kind", f.kind, kind_help);
    }
    if (which & kMode) {
        sub->add_option("--mode", f.mode, mode_help);
    }
    if (which & kCache) {
        sub->add_option("--cache", f.cache, "JSON cache file for biseparability bounds");
    }
    if (which & kThreshold) {
        sub->add_option("--threshold", f.threshold, "detection threshold t <= 0");
    }
    if (which & kSeed) {
        sub->add_option("--seed", f.seed, "random seed");
    }
    if (which & kGrid) {
        sub->add_option("--grid", f.grid, "Bloch-sphere grid points for bounds");
    }
    if (which & kSamples) {
        sub->add_option("--samples", f.samples, "theta samples over [0, 2π]");
    }
    if (which & kRestarts) {
        sub->add_option("--restarts", f.restarts, "random restarts of the GHZ search");
    }
    sub->add_option("-o,--output", f.output, "output file (default: stdout)");
    return sub;
}

SweepConfig to_config(const std::string &command, const Flags &f) {
    SweepConfig c;
    c.command = command;
    c.n = f.n;
    if (!f.channel.empty()) {
        try {
            c.channel = parse_channel_kind(f.channel);
        } catch (const std::invalid_argument &e) {
            throw usage_error(e.what());
        }
    }
    if (!f.gamma.empty()) {
        c.gamma = Range::parse(f.gamma);
    }
    if (!f.alpha.empty()) {
        c.alpha = Range::parse(f.alpha);
    }
    if (!f.y.empty()) {
        c.y = Range::parse(f.y);
    }
    c.threshold = f.threshold;
    c.output = f.output;
    c.seed = f.seed;
    c.kind = f.kind;
    c.mode = f.mode;
    c.grid = f.grid;
    c.samples = f.samples;
    c.restarts = f.restarts;
    c.cache = f.cache;
    return c;
}

int emit(const SweepConfig &c) {
    std::ostringstream buffer;
    std::ofstream file;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file) {
            throw usage_error("cannot write output file '" + c.output + "'");
        }
    }
    const int code = execute(c, buffer);
    (c.output.empty() ? std::cout : file) << buffer.str();
    return code;
}

int dispatch(CLI::App &app, Flags &f) {
    for (const auto *sub : app.get_subcommands()) {
        const std::string name = sub->get_name();
        if (name != "figure") {
            return emit(to_config(name, f));
        }
        if (f.list) {
            for (const auto &r : figure_recipes()) {
                std::cout << r.id << '\t' << r.description << '\n';
            }
            return 0;
        }
        if (f.id.empty()) {
            throw usage_error("figure: --id or --list is required");
        }
        SweepConfig c = figure_recipe(f.id);
        if (f.emit_config) {
            std::cout << c.to_config().dump(2) << '\n';
            return 0;
        }
        c.output = f.output;
        return emit(c);
    }
    throw usage_error("a subcommand is required");
}

} // namespace

int run(int argc, const char *const *argv) {
    CLI::App app{"Noisy Dicke and W state entanglement toolkit"};
    app.config_formatter(std::make_shared<JsonConfig>());
    app.set_config("--config", "", "JSON file with defaults; flags override it");
    app.require_subcommand(1);
    app.fallthrough();

    Flags f;
    add_command(app, f, "sweep-witness", "witness values over a noise grid",
                kN | kChannel | kGamma | kAlpha | kY | kKind | kThreshold | kGrid | kCache,
                "collective, fidelity, filtered-fidelity, w, w-filtered, reduced-pair");
    add_command(app, f, "bound", "biseparability bound b_bs(alpha) as JSON",
                kN | kAlpha | kGrid | kCache);
    add_command(app, f, "filter-opt", "optimal filter per noise point, or noise thresholds",
                kN | kChannel | kGamma | kKind | kMode | kThreshold, "dicke or w",
                "curve or tolerance");
    add_command(app, f, "discriminate", "characteristic-operator curves or the GHZ-class search",
                kN | kChannel | kGamma | kMode | kSeed | kRestarts, "", "curve or ghz-search");
    add_command(app, f, "correlation", "correlation function curves",
                kN | kChannel | kGamma | kSamples | kMode, "", "raw or beat");
    add_command(app, f, "decompose", "local measurement settings as JSON", kN | kKind | kMode,
                "dicke, w, discriminator, bell-mermin or identities",
                "dictionary: default, zmk or printed");
    add_command(app, f, "reduced-graph", "two-qubit Bell fidelity and connectivity",
                kN | kChannel | kGamma);
    auto *validate = add_command(app, f, "validate", "cross-check closed forms against the dense oracle", 0);
    validate->add_option("--suite", f.kind, "one oracle suite (default: all)")
        ->check(CLI::IsMember(oracle::suite_names()));
    auto *figure = app.add_subcommand("figure", "run the sweep behind a figure");
    figure->add_option("--id", f.id, "figure id");
    figure->add_flag("--list", f.list, "list figure ids");
    figure->add_flag("--emit-config", f.emit_config, "print the recipe as a config file");
    figure->add_option("-o,--output", f.output, "output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }
    try {
        return dispatch(app, f);
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::length_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
}

int run(const std::vector<std::string> &args) {
    std::vector<const char *> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("dicke");
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    return run(static_cast<int>(argv.size()), argv.data());
}

} // namespace dicke::cli
