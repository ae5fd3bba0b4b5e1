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
#include "dicke/common.hpp"

#include <atomic>
#include <cmath>
#include <cstdio>

namespace dicke {

namespace {
std::atomic<int> g_density_qubits{10};
std::atomic<int> g_state_qubits{20};
} // namespace

DenseLimits dense_limits() noexcept {
    return {g_density_qubits.load(), g_state_qubits.load()};
}

void set_dense_limits(DenseLimits limits) noexcept {
    g_density_qubits.store(limits.density_qubits);
    g_state_qubits.store(limits.state_qubits);
}

void require_density_cap(int n, const char *what) {
    if (n > g_density_qubits.load()) {
        throw capacity_error(std::string(what) + ": " + std::to_string(n) +
                             " qubits exceeds the density-matrix cap of " +
                             std::to_string(g_density_qubits.load()));
    }
}

void require_state_cap(int n, const char *what) {
    if (n > g_state_qubits.load()) {
        throw capacity_error(std::string(what) + ": " + std::to_string(n) +
                             " qubits exceeds the state-vector cap of " +
                             std::to_string(g_state_qubits.load()));
    }
}

double binomial(int n, int k) noexcept {
    if (k < 0 || k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double r = 1.0;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
    }
    return std::round(r);
}

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

} // namespace dicke
