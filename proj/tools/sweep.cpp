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
#include "sweep.hpp"

#include "dicke/bounds.hpp"
#include "dicke/correlations.hpp"
#include "dicke/discriminators.hpp"
#include "dicke/oracle.hpp"
#include "dicke/paulidecomp.hpp"
#include "dicke/qcore.hpp"
#include "dicke/witnesses.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

namespace dicke::cli {

Range Range::parse(std::string_view text) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : text) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    parts.push_back(cur);
    auto number = [&](const std::string &s) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(s, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used == 0 || used != s.size() || !std::isfinite(v)) {
            throw usage_error("bad range '" + std::string(text) + "'");
        }
        return v;
    };
    if (parts.size() == 1) {
        return single(number(parts[0]));
    }
    if (parts.size() != 3) {
        throw usage_error("range must be start:stop:steps, got '" + std::string(text) + "'");
    }
    Range r{number(parts[0]), number(parts[1]), 0};
    const double steps = number(parts[2]);
    if (steps < 1.0 || steps != std::floor(steps)) {
        throw usage_error("range steps must be a positive integer in '" + std::string(text) + "'");
    }
    r.steps = static_cast<int>(steps);
    if (r.steps == 1 && r.start != r.stop) {
        throw usage_error("a one-step range needs start == stop in '" + std::string(text) + "'");
    }
    return r;
}

std::vector<double> Range::values() const {
    if (steps <= 1) {
        return {start};
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) {
        out.push_back(start + (stop - start) * i / (steps - 1));
    }
    return out;
}

std::string Range::to_string() const {
    if (steps <= 1) {
        return format_double(start);
    }
    return format_double(start) + ":" + format_double(stop) + ":" + std::to_string(steps);
}

std::vector<std::string> command_names() {
    return {"sweep-witness", "bound",          "filter-opt", "discriminate",
            "correlation",   "decompose",      "reduced-graph", "validate"};
}

void SweepConfig::validate() const {
    const auto names = command_names();
    if (std::find(names.begin(), names.end(), command) == names.end()) {
        throw usage_error("unknown command '" + command + "'");
    }
    for (const auto *r : {&gamma, &alpha, &y}) {
        if (*r && (*r)->steps < 1) {
            throw usage_error("ranges need at least one step");
        }
    }
    if (threshold > 0.0) {
        throw usage_error("threshold t must be <= 0");
    }
    for (int v : n) {
        if (v < 1) {
            throw usage_error("n must be positive");
        }
    }
    if (grid < 1 || samples < 2 || restarts < 1) {
        throw usage_error("grid, samples and restarts must be positive");
    }
}

nlohmann::json SweepConfig::to_config() const {
    nlohmann::json body;
    if (!n.empty()) {
        body["n"] = n;
    }
    if (channel) {
        body["channel"] = to_string(*channel);
    }
    if (gamma) {
        body["gamma"] = gamma->to_string();
    }
    if (alpha) {
        body["alpha"] = alpha->to_string();
    }
    if (y) {
        body["y"] = y->to_string();
    }
    if (threshold != 0.0) {
        body["threshold"] = threshold;
    }
    if (!output.empty()) {
        body["output"] = output;
    }
    if (!kind.empty()) {
        body["kind"] = kind;
    }
    if (!mode.empty()) {
        body["mode"] = mode;
    }
    if (!cache.empty()) {
        body["cache"] = cache;
    }
    const SweepConfig defaults;
    if (seed != defaults.seed) {
        body["seed"] = seed;
    }
    if (grid != defaults.grid) {
        body["grid"] = grid;
    }
    if (samples != defaults.samples) {
        body["samples"] = samples;
    }
    if (restarts != defaults.restarts) {
        body["restarts"] = restarts;
    }
    return nlohmann::json{{command, body}};
}

int worker_count() {
    if (const char *env = std::getenv("DICKE_WORKERS"); env != nullptr && *env != '\0') {
        char *end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (*end != '\0' || v < 1 || v > 1024) {
            throw usage_error("DICKE_WORKERS must be an integer in [1, 1024]");
        }
        return static_cast<int>(v);
    }
    return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body) {
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(worker_count()), count);
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) {
                        failure = std::current_exception();
                    }
                    next = count;
                }
            }
        });
    }
    for (auto &t : pool) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

namespace {

using Row = std::vector<std::string>;

std::string cell(double v) { return format_double(v); }
std::string cell(int v) { return std::to_string(v); }
std::string cell(bool v) { return v ? "1" : "0"; }

// Rows carry a numeric sort key so that output order never depends on
// scheduling.
class Table {
  public:
    explicit Table(Row header) : header_(std::move(header)) {}

    void resize(std::size_t count) { rows_.resize(count); }
    void add(std::vector<double> key, Row row) {
        rows_.emplace_back(std::move(key), std::move(row));
    }
    void set(std::size_t i, std::vector<double> key, Row row) {
        rows_[i] = {std::move(key), std::move(row)};
    }

    void write(std::ostream &out) {
        std::stable_sort(rows_.begin(), rows_.end(),
                         [](const auto &a, const auto &b) { return a.first < b.first; });
        write_row(out, header_);
        for (const auto &r : rows_) {
            write_row(out, r.second);
        }
    }

  private:
    static void write_row(std::ostream &out, const Row &row) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            out << (i ? "," : "") << row[i];
        }
        out << '\n';
    }

    Row header_;
    std::vector<std::pair<std::vector<double>, Row>> rows_;
};

std::vector<int> sizes(const SweepConfig &c) {
    if (c.n.empty()) {
        throw usage_error(c.command + ": --n is required");
    }
    return c.n;
}

std::vector<double> gammas(const SweepConfig &c) {
    if (!c.gamma) {
        throw usage_error(c.command + ": --gamma is required");
    }
    return c.gamma->values();
}

std::vector<ChannelKind> channels_or_all(const SweepConfig &c) {
    if (c.channel) {
        return {*c.channel};
    }
    return {ChannelKind::AD, ChannelKind::PD, ChannelKind::DP};
}

ChannelKind required_channel(const SweepConfig &c) {
    if (!c.channel) {
        throw usage_error(c.command + ": --channel is required");
    }
    return *c.channel;
}

std::unique_ptr<BoundCache> open_cache(const SweepConfig &c) {
    if (c.cache.empty()) {
        return nullptr;
    }
    return std::make_unique<BoundCache>(c.cache);
}

BoundResult bound_for(BoundCache *cache, int n, double alpha, const BoundOptions &opts) {
    return cache ? cache->get_or_compute(n, alpha, opts) : biseparable_bound(n, alpha, opts);
}

int sweep_witness(const SweepConfig &c, std::ostream &out) {
    const WitnessKind kind = parse_witness_kind(c.kind.empty() ? "fidelity" : c.kind);
    const ChannelKind ch = required_channel(c);
    const auto ns = sizes(c);
    const auto gs = gammas(c);
    const double t = c.threshold;

    if (kind == WitnessKind::Collective) {
        const auto alphas = c.alpha ? c.alpha->values() : std::vector<double>{0.0};
        auto cache = open_cache(c);
        BoundOptions bopts;
        bopts.grid_points = c.grid;
        std::vector<std::pair<int, double>> keys;
        for (int n : ns) {
            for (double a : alphas) {
                keys.emplace_back(n, a);
            }
        }
        std::vector<double> bounds(keys.size());
        parallel_for(keys.size(), [&](std::size_t i) {
            bounds[i] = bound_for(cache.get(), keys[i].first, keys[i].second, bopts).b_bs;
        });
        Table table({"n", "alpha", "gamma", "expectation", "bound", "value", "detected"});
        table.resize(keys.size() * gs.size());
        parallel_for(keys.size() * gs.size(), [&](std::size_t i) {
            const auto [n, a] = keys[i / gs.size()];
            const double g = gs[i % gs.size()];
            const auto r = collective_witness(n, a, NoiseChannel(ch, g), bounds[i / gs.size()]);
            table.set(i, {double(n), a, g},
                      {cell(n), cell(a), cell(g), cell(r.bound - r.value), cell(r.bound),
                       cell(r.value), cell(r.value < t)});
        });
        table.write(out);
        return 0;
    }

    const bool filtered =
        kind == WitnessKind::FilteredFidelity || kind == WitnessKind::WStateFiltered;
    if (filtered) {
        const auto ys = c.y ? c.y->values() : std::vector<double>{};
        const std::size_t per = ys.empty() ? 1 : ys.size();
        Table table({"n", "gamma", "y", "value", "unfiltered", "detected"});
        table.resize(ns.size() * gs.size() * per);
        parallel_for(ns.size() * gs.size() * per, [&](std::size_t i) {
            const int n = ns[i / (gs.size() * per)];
            const double g = gs[(i / per) % gs.size()];
            const NoiseChannel noise(ch, g);
            const bool w = kind == WitnessKind::WStateFiltered;
            double y = 1.0;
            double value = 0.0;
            double unfiltered = 0.0;
            if (ys.empty()) {
                const auto opt = optimize_filter(
                    n, noise, {}, w ? FidelityTarget::W : FidelityTarget::SymmetricDicke);
                y = opt.y;
                value = opt.value;
                unfiltered = opt.unfiltered;
            } else {
                y = ys[i % per];
                if (w) {
                    value = w_state_witness(n, noise, true, y).value;
                    unfiltered = w_state_witness(n, noise, false).value;
                } else {
                    value = filtered_fidelity_witness(n, noise, FilterSpec::uniform(n, y)).value;
                    unfiltered = fidelity_witness(n, noise).value;
                }
            }
            table.set(i, {double(n), g, y},
                      {cell(n), cell(g), cell(y), cell(value), cell(unfiltered), cell(value < t)});
        });
        table.write(out);
        return 0;
    }

    Table table({"n", "gamma", "value", "detected"});
    table.resize(ns.size() * gs.size());
    parallel_for(ns.size() * gs.size(), [&](std::size_t i) {
        const int n = ns[i / gs.size()];
        const double g = gs[i % gs.size()];
        ToleranceQuery q;
        q.kind = kind;
        q.n = n;
        q.channel = ch;
        const double v = witness_value_at(q, g);
        table.set(i, {double(n), g}, {cell(n), cell(g), cell(v), cell(v < t)});
    });
    table.write(out);
    return 0;
}

int bound(const SweepConfig &c, std::ostream &out) {
    const auto ns = sizes(c);
    const auto alphas = c.alpha ? c.alpha->values() : std::vector<double>{0.0};
    auto cache = open_cache(c);
    BoundOptions opts;
    opts.grid_points = c.grid;
    std::vector<std::pair<int, double>> keys;
    for (int n : ns) {
        for (double a : alphas) {
            keys.emplace_back(n, a);
        }
    }
    std::vector<nlohmann::json> results(keys.size());
    parallel_for(keys.size(), [&](std::size_t i) {
        results[i] = to_json(bound_for(cache.get(), keys[i].first, keys[i].second, opts));
    });
    if (results.size() == 1) {
        out << results[0].dump(2) << '\n';
    } else {
        out << nlohmann::json(results).dump(2) << '\n';
    }
    return 0;
}

int filter_opt(const SweepConfig &c, std::ostream &out) {
    const auto ns = sizes(c);
    const ChannelKind ch = c.channel.value_or(ChannelKind::AD);
    const bool w = c.kind == "w";
    if (!c.kind.empty() && c.kind != "w" && c.kind != "dicke") {
        throw usage_error("filter-opt: --kind must be dicke or w");
    }
    const FidelityTarget target = w ? FidelityTarget::W : FidelityTarget::SymmetricDicke;

    if (c.mode == "tolerance") {
        Table table({"n", "threshold", "filtered_gamma", "unfiltered_gamma"});
        table.resize(ns.size());
        parallel_for(ns.size(), [&](std::size_t i) {
            const int n = ns[i];
            ToleranceQuery q;
            q.n = n;
            q.channel = ch;
            q.kind = w ? WitnessKind::WStateFiltered : WitnessKind::FilteredFidelity;
            q.threshold = c.threshold;
            const auto filtered = noise_tolerance(q);
            q.kind = w ? WitnessKind::WState : WitnessKind::Fidelity;
            q.threshold = 0.0;
            const auto plain = noise_tolerance(q);
            table.set(i, {double(n)},
                      {cell(n), cell(c.threshold), cell(filtered.gamma), cell(plain.gamma)});
        });
        table.write(out);
        return 0;
    }
    if (!c.mode.empty() && c.mode != "curve") {
        throw usage_error("filter-opt: --mode must be curve or tolerance");
    }
    const auto gs = gammas(c);
    Table table({"n", "gamma", "y", "value", "unfiltered", "converged", "no_gain", "detected"});
    table.resize(ns.size() * gs.size());
    parallel_for(ns.size() * gs.size(), [&](std::size_t i) {
        const int n = ns[i / gs.size()];
        const double g = gs[i % gs.size()];
        const auto opt = optimize_filter(n, NoiseChannel(ch, g), {}, target);
        table.set(i, {double(n), g},
                  {cell(n), cell(g), cell(opt.y), cell(opt.value), cell(opt.unfiltered),
                   cell(opt.converged), cell(opt.no_gain), cell(opt.value < c.threshold)});
    });
    table.write(out);
    return 0;
}

int discriminate_cmd(const SweepConfig &c, std::ostream &out) {
    const auto ns = sizes(c);
    if (c.mode == "ghz-search") {
        nlohmann::json results = nlohmann::json::array();
        for (int n : ns) {
            GhzSearchOptions opts;
            opts.restarts = c.restarts;
            opts.seed = c.seed;
            const auto r = ghz_class_bound(n, opts);
            results.push_back({{"n", n},
                               {"class_bound", r.best},
                               {"restart_values", r.restart_values},
                               {"best_angles", r.best_angles},
                               {"seed", r.seed},
                               {"restarts", r.restarts}});
        }
        out << (results.size() == 1 ? results[0] : results).dump(2) << '\n';
        return 0;
    }
    if (!c.mode.empty() && c.mode != "curve") {
        throw usage_error("discriminate: --mode must be curve or ghz-search");
    }
    const auto gs = gammas(c);
    const auto chs = channels_or_all(c);
    Table table({"n", "channel", "gamma", "value", "class_bound", "ghz_excluded"});
    const std::size_t total = ns.size() * chs.size() * gs.size();
    table.resize(total);
    parallel_for(total, [&](std::size_t i) {
        const int n = ns[i / (chs.size() * gs.size())];
        const std::size_t ci = (i / gs.size()) % chs.size();
        const double g = gs[i % gs.size()];
        const double v = discriminator_expectation(n, NoiseChannel(chs[ci], g));
        Row row{cell(n), to_string(chs[ci]), cell(g), cell(v), "", ""};
        if (n == 6) {
            const auto verdict = discriminate(v, kGhzClassBound6);
            row[4] = cell(verdict.class_bound);
            row[5] = cell(verdict.ghz_excluded);
        }
        table.set(i, {double(n), double(ci), g}, std::move(row));
    });
    table.write(out);
    return 0;
}

int correlation_cmd(const SweepConfig &c, std::ostream &out) {
    const auto ns = sizes(c);
    const auto thetas = theta_grid(c.samples);
    const bool beat = c.mode == "beat";
    if (!c.mode.empty() && c.mode != "raw" && !beat) {
        throw usage_error("correlation: --mode must be raw or beat");
    }
    std::vector<std::optional<NoiseChannel>> channels;
    std::vector<double> gs{0.0};
    if (c.channel) {
        gs = gammas(c);
        for (double g : gs) {
            channels.emplace_back(NoiseChannel(*c.channel, g));
        }
    } else {
        if (beat) {
            throw usage_error("correlation: --mode beat needs --channel ad or pd");
        }
        channels.emplace_back(std::nullopt);
    }
    std::vector<CorrelationCurve> curves(ns.size() * channels.size());
    parallel_for(curves.size(), [&](std::size_t i) {
        const int n = ns[i / channels.size()];
        auto curve = correlation_curve(n, thetas, channels[i % channels.size()]);
        curves[i] = beat ? beat_component(curve) : std::move(curve);
    });
    Table table({"n", "channel", "gamma", "theta", "value"});
    for (const auto &curve : curves) {
        const std::string name = curve.channel ? to_string(curve.channel->kind()) : "none";
        const double g = curve.channel ? curve.channel->gamma() : 0.0;
        for (const auto &smp : curve.samples) {
            table.add({double(curve.n), g, smp.theta},
                      {cell(curve.n), name, cell(g), cell(smp.theta), cell(smp.value)});
        }
    }
    table.write(out);
    return 0;
}

int decompose_cmd(const SweepConfig &c, std::ostream &out) {
    const std::string target = c.kind.empty() ? "dicke" : c.kind;
    if (target == "identities") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &id : identity_ids()) {
            const auto check = verify_identity(id);
            arr.push_back({{"id", check.id},
                           {"holds", check.holds},
                           {"max_deviation", check.max_deviation},
                           {"statement", check.statement}});
        }
        out << arr.dump(2) << '\n';
        return 0;
    }
    const auto ns = sizes(c);
    if (ns.size() != 1) {
        throw usage_error("decompose: exactly one --n");
    }
    const int n = ns[0];
    PauliSum op(n);
    std::optional<std::size_t> tensor_nonzero;
    if (target == "dicke" || target == "w") {
        const auto psi = target == "w" ? w_state(n) : symmetric_dicke_state(n);
        const auto tensor = correlation_tensor(psi);
        tensor_nonzero = tensor.nonzero_count();
        op = tensor.to_operator();
    } else if (target == "discriminator") {
        op = characteristic_operator_unnormalized(n);
    } else if (target == "bell-mermin") {
        if (n != 6) {
            throw usage_error("decompose: bell-mermin is defined for n = 6");
        }
        op = bell_mermin_6();
    } else {
        throw usage_error("decompose: --kind must be dicke, w, discriminator, bell-mermin or "
                          "identities");
    }
    const std::string dict = c.mode.empty() ? "default" : c.mode;
    const SettingPlan plan = [&] {
        if (dict == "default") {
            return synthesize_settings(op, default_dictionary(), {});
        }
        if (dict == "zmk") {
            return synthesize_settings(op, z_plus_mk_dictionary(), {});
        }
        if (dict == "printed") {
            return plan_from_directions(op, compaction_directions(n));
        }
        throw usage_error("decompose: --mode must be default, zmk or printed");
    }();
    auto j = to_json(plan);
    j["target"] = target;
    j["n"] = n;
    if (tensor_nonzero) {
        j["tensor_nonzero"] = *tensor_nonzero;
    }
    out << j.dump(2) << '\n';
    return 0;
}

int reduced_graph(const SweepConfig &c, std::ostream &out) {
    const auto ns = sizes(c);
    const auto gs = gammas(c);
    const auto chs = channels_or_all(c);
    Table table({"n", "channel", "gamma", "pair_fidelity", "witness", "edges", "complete",
                 "threshold"});
    const std::size_t total = ns.size() * chs.size() * gs.size();
    table.resize(total);
    parallel_for(total, [&](std::size_t i) {
        const int n = ns[i / (chs.size() * gs.size())];
        const std::size_t ci = (i / gs.size()) % chs.size();
        const double g = gs[i % gs.size()];
        const NoiseChannel noise(chs[ci], g);
        const double f = reduced_pair_fidelity(n, noise);
        const auto graph = connectivity_graph(n, noise);
        table.set(i, {double(n), double(ci), g},
                  {cell(n), to_string(chs[ci]), cell(g), cell(f), cell(0.5 - f),
                   cell(graph.edge_count()), cell(graph.complete()),
                   cell(reduced_disconnection_threshold(n, chs[ci]))});
    });
    table.write(out);
    return 0;
}

constexpr double kValidationTolerance = 1e-10;

int validate(const SweepConfig &c, std::ostream &out) {
    const auto reports = oracle::cross_validate(c.kind);
    const double worst = oracle::max_difference(reports);
    const bool passed = worst < kValidationTolerance;
    nlohmann::json j{{"suite", c.kind.empty() ? "all" : c.kind},
                     {"reports", oracle::to_json(reports)},
                     {"max_difference", worst},
                     {"tolerance", kValidationTolerance},
                     {"passed", passed}};
    out << j.dump(2) << '\n';
    return passed ? 0 : 3;
}

} // namespace

int execute(const SweepConfig &config, std::ostream &out) {
    config.validate();
    static const std::map<std::string, int (*)(const SweepConfig &, std::ostream &)> table{
        {"sweep-witness", sweep_witness}, {"bound", bound},
        {"filter-opt", filter_opt},       {"discriminate", discriminate_cmd},
        {"correlation", correlation_cmd}, {"decompose", decompose_cmd},
        {"reduced-graph", reduced_graph}, {"validate", validate}};
    return table.at(config.command)(config, out);
}

} // namespace dicke::cli
