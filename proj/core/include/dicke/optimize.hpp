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

#include <cmath>
#include <functional>
#include <limits>
#include <optional>

namespace dicke::optimize {

struct ScalarMinimum {
    double x = 0.0;
    double value = 0.0;
    double lower = 0.0; ///< final bracket
    double upper = 0.0;
    int iterations = 0;
    bool converged = false;
};

/// Golden-section search for a minimum of f on [lo, hi]; stops when the
/// bracket is narrower than tol.
inline ScalarMinimum golden_section_minimize(const std::function<double(double)> &f,
                                             double lo, double hi, double tol,
                                             int max_iterations = 500) {
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    int it = 0;
    while (b - a > tol && it < max_iterations) {
        if (fc <= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
        ++it;
    }
    ScalarMinimum out;
    out.lower = a;
    out.upper = b;
    out.iterations = it;
    out.converged = (b - a) <= tol;
    if (fc <= fd) {
        out.x = c;
        out.value = fc;
    } else {
        out.x = d;
        out.value = fd;
    }
    return out;
}

/// Root of f on [lo, hi] by bisection, assuming f(lo) and f(hi) differ in
/// sign. Returns nullopt when they do not.
inline std::optional<double> bisect(const std::function<double(double)> &f,
                                    double lo, double hi, double tol,
                                    int max_iterations = 200) {
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) {
        return lo;
    }
    if (fhi == 0.0) {
        return hi;
    }
    if ((flo < 0.0) == (fhi < 0.0)) {
        return std::nullopt;
    }
    for (int it = 0; it < max_iterations && hi - lo > tol; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double fm = f(mid);
        if (fm == 0.0) {
            return mid;
        }
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

} // namespace dicke::optimize
