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
#pragma once

#include "dicke/channels.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace dicke::cli {

/// Bad flags, bad values, unwritable paths. Maps to exit code 2.
class usage_error : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// start:stop:steps, or a single value.
struct Range {
    double start = 0.0;
    double stop = 0.0;
    int steps = 1;

    [[nodiscard]] static Range parse(std::string_view text);
    [[nodiscard]] static Range single(double v) { return {v, v, 1}; }
    [[nodiscard]] std::vector<double> values() const;
    [[nodiscard]] std::string to_string() const;
};

/// One run of a subcommand. `kind`, `mode` and the integer knobs are read
/// only by the commands that use them.
struct SweepConfig {
    std::string command;
    std::vector<int> n;
    std::optional<ChannelKind> channel;
    std::optional<Range> gamma;
    std::optional<Range> alpha;
    std::optional<Range> y;
    double threshold = 0.0;
    std::string output; ///< empty: stdout
    std::uint64_t seed = 20260415;

    std::string kind;
    std::string mode;
    int grid = 2000;
    int samples = 401;
    int restarts = 64;
    std::string cache;

    void validate() const;
    /// Config-file form: {"<command>": {flag: value, ...}}.
    [[nodiscard]] nlohmann::json to_config() const;
};

/// DICKE_WORKERS, else hardware concurrency (at least 1).
[[nodiscard]] int worker_count();

/// Runs body(i) for i in [0, count) on the worker pool; rethrows the first failure.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

/// Runs the command, writing CSV or JSON to `out`. Returns the exit code
/// (3 when a validation suite fails).
int execute(const SweepConfig &config, std::ostream &out);

[[nodiscard]] std::vector<std::string> command_names();

} // namespace dicke::cli
