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

#include <Eigen/Dense>

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace dicke {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Matrix2c = Eigen::Matrix2cd;

/// Raised when a dense object would exceed the configured qubit cap.
class capacity_error : public std::length_error {
  public:
    using std::length_error::length_error;
};

/// Raised when an iterative routine fails to reach its tolerance.
class numerical_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Raised for a channel that an operation has no definition for.
class unsupported_channel : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Dense-representation caps. Density matrices scale as 4^n, state vectors
/// as 2^n.
struct DenseLimits {
    int density_qubits = 10;
    int state_qubits = 20;
};

[[nodiscard]] DenseLimits dense_limits() noexcept;
void set_dense_limits(DenseLimits limits) noexcept;

void require_density_cap(int n, const char *what);
void require_state_cap(int n, const char *what);

[[nodiscard]] constexpr std::size_t dim_of(int n) noexcept {
    return std::size_t{1} << static_cast<unsigned>(n);
}

/// Bit mask of qubit `q` (0-based, qubit 0 is the most significant bit).
[[nodiscard]] constexpr std::size_t qubit_mask(int n, int q) noexcept {
    return std::size_t{1} << static_cast<unsigned>(n - 1 - q);
}

[[nodiscard]] double binomial(int n, int k) noexcept;

/// Formats with 17 significant digits so values round-trip exactly.
[[nodiscard]] std::string format_double(double v);

} // namespace dicke
