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
#include "dicke/paulidecomp.hpp"

#include <Eigen/QR>

#include <algorithm>
#include <cctype>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace dicke {

namespace {

constexpr const char kTensorLabels[] = "0xyz";

std::string tensor_label(const PauliString &t) {
    std::string s;
    for (Pauli p : t.labels()) {
        s.push_back(kTensorLabels[static_cast<int>(p)]);
    }
    return s;
}

} // namespace

// --- correlation tensor ----------------------------------------------------

double CorrelationTensor::at(std::string_view labels) const {
    std::string key;
    for (char c : labels) {
        const Pauli p = pauli_from_char(c);
        key.push_back(p == Pauli::I ? '0' : static_cast<char>(std::tolower(pauli_char(p))));
    }
    auto it = entries.find(key);
    return it == entries.end() ? 0.0 : it->second;
}

PauliSum CorrelationTensor::to_operator() const {
    std::vector<PauliString> terms;
    terms.reserve(entries.size());
    const double scale = 1.0 / static_cast<double>(dim_of(n));
    for (const auto &[labels, c] : entries) {
        terms.emplace_back(labels, c * scale);
    }
    return PauliSum(n, std::move(terms));
}

CorrelationTensor correlation_tensor(const StateVector &psi, double tolerance) {
    const int n = psi.num_qubits();
    if (n > 8) {
        throw capacity_error("correlation_tensor: at most 8 qubits");
    }
    static const cplx phase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const CVector &a = psi.amplitudes();
    const std::size_t dim = dim_of(n);
    CorrelationTensor out;
    out.n = n;
    std::vector<Pauli> labels(static_cast<std::size_t>(n));
    const std::size_t count = std::size_t{1} << (2 * n);
    for (std::size_t code = 0; code < count; ++code) {
        for (int q = 0; q < n; ++q) {
            labels[static_cast<std::size_t>(q)] =
                static_cast<Pauli>((code >> (2 * (n - 1 - q))) & 3U);
        }
        const PauliString p(labels, 1.0);
        const std::size_t x = p.x_mask();
        const std::size_t z = p.z_mask();
        cplx acc = 0.0;
        for (std::size_t c = 0; c < dim; ++c) {
            const cplx v = std::conj(a[static_cast<Eigen::Index>(c ^ x)]) *
                           a[static_cast<Eigen::Index>(c)];
            acc += (std::popcount(c & z) & 1) != 0 ? -v : v;
        }
        const double value = (phase[p.y_count() & 3] * acc).real();
        if (std::abs(value) > tolerance) {
            out.entries.emplace(tensor_label(p), value);
        }
    }
    return out;
}

PauliSum compact_d4_expansion() {
    PauliSum inner = permutation_sum("XXYY");
    PauliSum pairs = permutation_sum("IIXX") + permutation_sum("IIYY") + permutation_sum("IIZZ") -
                     permutation_sum("XXZZ") - permutation_sum("YYZZ");
    inner += 2.0 * pairs;
    PauliSum out = PauliSum::identity(4);
    for (const char *k : {"XXXX", "YYYY", "ZZZZ"}) {
        out.add(k, 1.0);
    }
    out += (1.0 / 3.0) * inner;
    out *= 1.0 / 16.0;
    return out;
}

std::vector<TermMismatch> compare_terms(const CorrelationTensor &tensor, const PauliSum &sum,
                                        double tol) {
    const PauliSum expected = tensor.to_operator();
    const PauliSum diff = sum - expected;
    std::vector<TermMismatch> out;
    for (const auto &t : diff.terms()) {
        if (std::abs(t.coefficient()) > tol) {
            const std::string label = t.label_string();
            out.push_back({tensor_label(t), expected.coefficient(label), sum.coefficient(label)});
        }
    }
    return out;
}

// --- identities ------------------------------------------------------------

namespace {

PauliSum axis_power(int n, const std::array<double, 3> &u) {
    return tensor_power(single_qubit(u[0], u[1], u[2]), n);
}

std::array<double, 3> combo(Axis i, double a, Axis j, double b) {
    std::array<double, 3> u{0.0, 0.0, 0.0};
    u[static_cast<std::size_t>(i) - 1] += a;
    u[static_cast<std::size_t>(j) - 1] += b;
    return u;
}

std::string repeat(Axis a, int k) {
    return std::string(static_cast<std::size_t>(k), pauli_char(to_pauli(a)));
}

const std::vector<std::string> &ids() {
    static const std::vector<std::string> v{"comp-4", "xyz-6", "sym24-6", "antisym24-6"};
    return v;
}

} // namespace

std::vector<std::string> identity_ids() { return ids(); }

std::pair<PauliSum, PauliSum> identity_sides(std::string_view id, Axis i, Axis j) {
    if (i == j) {
        throw std::invalid_argument("identity_sides: axes must differ");
    }
    const auto pi = [&](Axis a, int ka, Axis b, int kb) {
        return permutation_sum(repeat(a, ka) + repeat(b, kb));
    };
    if (id == "comp-4") {
        PauliSum lhs = pi(i, 2, j, 2);
        PauliSum rhs = 0.5 * (axis_power(4, combo(i, 1, j, 1)) + axis_power(4, combo(i, 1, j, -1)));
        rhs -= axis_power(4, combo(i, 1, j, 0));
        rhs -= axis_power(4, combo(j, 1, i, 0));
        return {lhs, rhs};
    }
    if (id == "xyz-6") {
        PauliSum lhs = permutation_sum("XXYYZZ");
        PauliSum rhs(6);
        for (double sy : {1.0, -1.0}) {
            for (double sz : {1.0, -1.0}) {
                rhs += 0.25 * axis_power(6, {1.0, sy, sz});
            }
        }
        rhs -= pi(Axis::X, 2, Axis::Y, 4) + pi(Axis::X, 4, Axis::Y, 2);
        for (Axis k : {Axis::X, Axis::Y}) {
            rhs -= pi(k, 2, Axis::Z, 4) + pi(k, 4, Axis::Z, 2);
        }
        for (Axis k : {Axis::X, Axis::Y, Axis::Z}) {
            rhs -= axis_power(6, combo(k, 1, k == Axis::X ? Axis::Y : Axis::X, 0));
        }
        return {lhs, rhs};
    }
    if (id == "sym24-6") {
        PauliSum lhs = pi(i, 2, j, 4) + pi(i, 4, j, 2);
        PauliSum rhs = 0.5 * (axis_power(6, combo(i, 1, j, 1)) + axis_power(6, combo(i, 1, j, -1)));
        rhs -= axis_power(6, combo(i, 1, j, 0));
        rhs -= axis_power(6, combo(j, 1, i, 0));
        return {lhs, rhs};
    }
    if (id == "antisym24-6") {
        PauliSum lhs = pi(i, 2, j, 4) - pi(i, 4, j, 2);
        PauliSum rhs = axis_power(6, combo(i, 1, j, 2)) + axis_power(6, combo(i, 1, j, -2));
        rhs -= 4.0 * (axis_power(6, combo(i, 1, j, 1)) + axis_power(6, combo(i, 1, j, -1)));
        rhs -= 10.0 * axis_power(6, combo(i, 1, j, 0));
        rhs -= 136.0 * axis_power(6, combo(j, 1, i, 0));
        rhs *= 1.0 / 24.0;
        return {lhs, rhs};
    }
    throw std::invalid_argument("unknown identity '" + std::string(id) + "'");
}

IdentityCheck verify_identity(std::string_view id, Axis i, Axis j) {
    const auto [lhs, rhs] = identity_sides(id, i, j);
    IdentityCheck out;
    out.id = std::string(id);
    out.max_deviation = (lhs.to_matrix() - rhs.to_matrix()).cwiseAbs().maxCoeff();
    out.holds = out.max_deviation < 1e-10;
    const char ci = pauli_char(to_pauli(i));
    const char cj = pauli_char(to_pauli(j));
    const std::string si(1, ci);
    const std::string sj(1, cj);
    if (id == "comp-4") {
        out.statement = "Sum_pi " + si + "^2 " + sj + "^2 = 1/2[(" + si + "+" + sj + ")^4 + (" +
                        si + "-" + sj + ")^4] - " + si + "^4 - " + sj + "^4";
    } else if (id == "xyz-6") {
        out.statement = "Sum_pi X^2 Y^2 Z^2 = 1/4 Sum_{+-,+-} (X+-Y+-Z)^6 - Sum_pi(X^2Y^4+X^4Y^2) "
                        "- Sum_{k=x,y} Sum_pi(k^2Z^4+k^4Z^2) - X^6 - Y^6 - Z^6";
    } else if (id == "sym24-6") {
        out.statement = "Sum_pi(" + si + "^2" + sj + "^4+" + si + "^4" + sj + "^2) = 1/2[(" + si +
                        "+" + sj + ")^6 + (" + si + "-" + sj + ")^6] - " + si + "^6 - " + sj + "^6";
    } else {
        out.statement = "Sum_pi(" + si + "^2" + sj + "^4-" + si + "^4" + sj + "^2) = 1/24{(" + si +
                        "+2" + sj + ")^6 + (" + si + "-2" + sj + ")^6 - 4[(" + si + "+" + sj +
                        ")^6 + (" + si + "-" + sj + ")^6] - 10 " + si + "^6 - 136 " + sj + "^6}";
    }
    return out;
}

// --- measurement settings --------------------------------------------------

namespace {

using Monomial = std::array<int, 3>;

std::vector<Monomial> monomials(int w) {
    std::vector<Monomial> out;
    for (int a = w; a >= 0; --a) {
        for (int b = w - a; b >= 0; --b) {
            out.push_back({a, b, w - a - b});
        }
    }
    return out;
}

double factorial(int k) { return std::tgamma(k + 1.0); }

double multinomial(int w, const Monomial &m) {
    return std::round(factorial(w) / (factorial(m[0]) * factorial(m[1]) * factorial(m[2])));
}

std::array<double, 3> unit(const Direction &d) {
    const double norm = std::sqrt(static_cast<double>(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]));
    return {d[0] / norm, d[1] / norm, d[2] / norm};
}

Eigen::VectorXd power_vector(const std::array<double, 3> &u, int w) {
    const auto ms = monomials(w);
    Eigen::VectorXd v(static_cast<Eigen::Index>(ms.size()));
    for (std::size_t i = 0; i < ms.size(); ++i) {
        v[static_cast<Eigen::Index>(i)] = multinomial(w, ms[i]) * std::pow(u[0], ms[i][0]) *
                                          std::pow(u[1], ms[i][1]) * std::pow(u[2], ms[i][2]);
    }
    return v;
}

// Symmetric part of the target on `m` qubits, optionally below a fixed
// label on qubit 1.
struct Sector {
    std::optional<Pauli> head;
    int m = 0;
    std::map<int, Eigen::VectorXd> q; ///< weight -> polynomial coefficients
};

struct Decomposition {
    std::vector<Sector> sectors;
    double identity = 0.0;
};

Monomial counts_of(const std::vector<Pauli> &labels, std::size_t from) {
    Monomial c{0, 0, 0};
    for (std::size_t i = from; i < labels.size(); ++i) {
        if (labels[i] != Pauli::I) {
            ++c[static_cast<std::size_t>(labels[i]) - 1];
        }
    }
    return c;
}

// Builds the weight polynomials of one sector; nullopt if the terms are not
// permutation symmetric over the sector's qubits.
std::optional<Sector> build_sector(const std::vector<const PauliString *> &terms,
                                   std::optional<Pauli> head, int m, std::size_t from,
                                   double &identity) {
    std::map<Monomial, std::pair<double, double>> groups; // coefficient, count
    for (const PauliString *t : terms) {
        const Monomial c = counts_of(t->labels(), from);
        auto [it, inserted] = groups.try_emplace(c, t->coefficient(), 0.0);
        if (!inserted && std::abs(it->second.first - t->coefficient()) > 1e-12) {
            return std::nullopt;
        }
        it->second.second += 1.0;
    }
    Sector s;
    s.head = head;
    s.m = m;
    for (const auto &[c, value] : groups) {
        const int w = c[0] + c[1] + c[2];
        const double arrangements =
            std::round(factorial(m) / (factorial(c[0]) * factorial(c[1]) * factorial(c[2]) *
                                       factorial(m - w)));
        if (value.second != arrangements) {
            return std::nullopt;
        }
        if (w == 0 && (!head || *head == Pauli::I)) {
            identity += value.first;
            continue;
        }
        auto &vec = s.q[w];
        if (vec.size() == 0) {
            vec = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(monomials(w).size()));
        }
        const auto ms = monomials(w);
        const auto idx = std::find(ms.begin(), ms.end(), c) - ms.begin();
        vec[idx] = value.first * multinomial(w, c);
    }
    return s;
}

Decomposition decompose_target(const PauliSum &target) {
    const int n = target.num_qubits();
    std::vector<const PauliString *> all;
    for (const auto &t : target.terms()) {
        all.push_back(&t);
    }
    Decomposition d;
    if (auto s = build_sector(all, std::nullopt, n, 0, d.identity)) {
        if (!s->q.empty()) {
            d.sectors.push_back(std::move(*s));
        }
        return d;
    }
    if (n < 2) {
        throw std::invalid_argument("synthesize_settings: target is not permutation symmetric");
    }
    d.identity = 0.0;
    for (Pauli h : {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z}) {
        std::vector<const PauliString *> part;
        for (const PauliString *t : all) {
            if (t->labels().front() == h) {
                part.push_back(t);
            }
        }
        if (part.empty()) {
            continue;
        }
        auto s = build_sector(part, h, n - 1, 1, d.identity);
        if (!s) {
            throw std::invalid_argument(
                "synthesize_settings: target is not permutation symmetric over all qubits or "
                "over qubits 2..n");
        }
        if (!s->q.empty()) {
            d.sectors.push_back(std::move(*s));
        }
    }
    return d;
}

struct Solution {
    std::map<int, Eigen::VectorXd> coefficients; ///< weight -> per-direction
    double residual = 0.0;
};

Solution solve(const Sector &s, const std::vector<std::array<double, 3>> &dirs) {
    Solution out;
    for (const auto &[w, q] : s.q) {
        Eigen::MatrixXd a(q.size(), static_cast<Eigen::Index>(dirs.size()));
        for (std::size_t k = 0; k < dirs.size(); ++k) {
            a.col(static_cast<Eigen::Index>(k)) = power_vector(dirs[k], w);
        }
        Eigen::VectorXd x = a.completeOrthogonalDecomposition().solve(q);
        for (Eigen::Index k = 0; k < x.size(); ++k) {
            if (std::abs(x[k]) < 1e-14) {
                x[k] = 0.0;
            }
        }
        const double scale = std::max(1.0, q.cwiseAbs().maxCoeff());
        out.residual = std::max(out.residual, (a * x - q).cwiseAbs().maxCoeff() / scale);
        out.coefficients[w] = std::move(x);
    }
    return out;
}

using SignedPermutation = std::pair<std::array<int, 3>, std::array<int, 3>>;

std::array<double, 3> act(const SignedPermutation &g, const std::array<double, 3> &v) {
    std::array<double, 3> out{};
    for (std::size_t k = 0; k < 3; ++k) {
        out[static_cast<std::size_t>(g.first[k])] = g.second[k] * v[k];
    }
    return out;
}

double evaluate(const Eigen::VectorXd &q, int w, const std::array<double, 3> &v) {
    const auto ms = monomials(w);
    double s = 0.0;
    for (std::size_t i = 0; i < ms.size(); ++i) {
        s += q[static_cast<Eigen::Index>(i)] * std::pow(v[0], ms[i][0]) * std::pow(v[1], ms[i][1]) *
             std::pow(v[2], ms[i][2]);
    }
    return s;
}

// Signed permutations mapping every weight polynomial to ± itself.
std::vector<SignedPermutation> symmetry_group(const Sector &s) {
    static const std::array<std::array<double, 3>, 4> probes{
        {{0.31, -0.57, 0.83}, {-0.72, 0.19, 0.44}, {0.13, 0.92, -0.38}, {0.66, 0.41, 0.27}}};
    std::array<int, 3> perm{0, 1, 2};
    std::vector<SignedPermutation> group;
    do {
        for (int mask = 0; mask < 8; ++mask) {
            const SignedPermutation g{perm, {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1,
                                             mask & 4 ? -1 : 1}};
            bool ok = true;
            for (const auto &[w, q] : s.q) {
                const double scale = std::max(1e-300, q.cwiseAbs().maxCoeff());
                bool plus = true;
                bool minus = true;
                for (const auto &v : probes) {
                    const double a = evaluate(q, w, v);
                    const double b = evaluate(q, w, act(g, v));
                    plus = plus && std::abs(b - a) < 1e-9 * scale;
                    minus = minus && std::abs(b + a) < 1e-9 * scale;
                }
                ok = ok && (plus || minus);
            }
            if (ok) {
                group.push_back(g);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return group;
}

std::optional<std::size_t> find_direction(const DirectionSet &dict, const Direction &d) {
    for (std::size_t i = 0; i < dict.size(); ++i) {
        const Direction &e = dict[i];
        if (e == d || (e[0] == -d[0] && e[1] == -d[1] && e[2] == -d[2])) {
            return i;
        }
    }
    return std::nullopt;
}

std::vector<std::vector<std::size_t>> orbits(const DirectionSet &dict,
                                             const std::vector<SignedPermutation> &group) {
    std::vector<bool> seen(dict.size(), false);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t i = 0; i < dict.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        std::vector<std::size_t> orbit;
        for (const auto &g : group) {
            Direction img{};
            for (std::size_t k = 0; k < 3; ++k) {
                img[static_cast<std::size_t>(g.first[k])] = g.second[k] * dict[i][k];
            }
            if (auto j = find_direction(dict, img); j && !seen[*j]) {
                seen[*j] = true;
                orbit.push_back(*j);
            }
        }
        std::sort(orbit.begin(), orbit.end());
        out.push_back(std::move(orbit));
    }
    return out;
}

std::vector<std::array<double, 3>> units_of(const DirectionSet &dict,
                                            const std::vector<std::size_t> &idx) {
    std::vector<std::array<double, 3>> out;
    for (std::size_t i : idx) {
        out.push_back(unit(dict[i]));
    }
    return out;
}

void append_settings(SettingPlan &plan, const Sector &s, const DirectionSet &dirs,
                     const Solution &sol) {
    for (std::size_t k = 0; k < dirs.size(); ++k) {
        Setting st;
        st.direction = dirs[k];
        st.u = unit(dirs[k]);
        st.head = s.head;
        for (const auto &[w, x] : sol.coefficients) {
            const double v = x[static_cast<Eigen::Index>(k)];
            if (w == s.m) {
                st.c = v;
            } else if (v != 0.0) {
                st.marginals[w] = v;
            }
        }
        plan.settings.push_back(std::move(st));
    }
}

void finish(SettingPlan &plan, const PauliSum &target) {
    if (plan.settings.empty()) {
        // Even a constant needs one measurement to be taken.
        Setting placeholder;
        placeholder.direction = {0, 0, 1};
        placeholder.u = {0.0, 0.0, 1.0};
        plan.settings.push_back(placeholder);
    }
    plan.residual = PauliSum(plan.n);
    plan.residual = target - materialize(plan);
    plan.residual_norm = plan.residual.max_abs_coefficient();
}

constexpr long kSearchBudget = 2000000;

// First union of orbits (by total size, then orbit order) that solves the
// sector.
std::optional<std::vector<std::size_t>> search_sector(const Sector &s, const DirectionSet &dict,
                                                      const SynthesisOptions &opts) {
    const auto orbs = orbits(dict, symmetry_group(s));
    long evaluated = 0;
    std::vector<std::size_t> chosen;
    std::optional<std::vector<std::size_t>> found;
    std::function<bool(std::size_t, int)> dfs = [&](std::size_t start, int remaining) -> bool {
        if (remaining == 0) {
            std::vector<std::size_t> idx;
            for (std::size_t o : chosen) {
                idx.insert(idx.end(), orbs[o].begin(), orbs[o].end());
            }
            ++evaluated;
            if (solve(s, units_of(dict, idx)).residual < opts.tolerance) {
                found = idx;
                return true;
            }
            return false;
        }
        for (std::size_t o = start; o < orbs.size(); ++o) {
            const int size = static_cast<int>(orbs[o].size());
            if (size > remaining) {
                continue;
            }
            chosen.push_back(o);
            const bool done = dfs(o + 1, remaining - size);
            chosen.pop_back();
            if (done || evaluated > kSearchBudget) {
                return done;
            }
        }
        return false;
    };
    const int limit = std::min<int>(opts.max_settings, static_cast<int>(dict.size()));
    for (int size = 1; size <= limit; ++size) {
        if (dfs(0, size)) {
            return found;
        }
        if (evaluated > kSearchBudget) {
            break;
        }
    }
    return std::nullopt;
}

} // namespace

double Setting::raw_coefficient(int weight) const {
    const double norm2 = static_cast<double>(direction[0] * direction[0] +
                                             direction[1] * direction[1] +
                                             direction[2] * direction[2]);
    return c / std::pow(norm2, weight / 2.0);
}

DirectionSet default_dictionary() {
    DirectionSet out;
    for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
            for (int c = -2; c <= 2; ++c) {
                if (a == 0 && b == 0 && c == 0) {
                    continue;
                }
                if (std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) != 1) {
                    continue;
                }
                const int lead = a != 0 ? a : (b != 0 ? b : c);
                if (lead < 0) {
                    continue;
                }
                out.push_back({a, b, c});
            }
        }
    }
    const auto key = [](const Direction &d) {
        return std::make_tuple(d[0] * d[0] + d[1] * d[1] + d[2] * d[2],
                               std::array<int, 3>{-std::abs(d[0]), -std::abs(d[1]), -std::abs(d[2])},
                               d);
    };
    std::sort(out.begin(), out.end(),
              [&](const Direction &x, const Direction &y) { return key(x) < key(y); });
    return out;
}

DirectionSet z_plus_mk_dictionary() {
    return {{1, 0, 0},  {1, 0, 1}, {-1, 0, 1}, {2, 0, 1},  {-2, 0, 1},
            {0, 1, 0},  {0, 1, 1}, {0, -1, 1}, {0, 2, 1},  {0, -2, 1}};
}

DirectionSet compaction_directions(int n) {
    if (n == 4) {
        return {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 0}, {1, -1, 0},
                {1, 0, 1}, {1, 0, -1}, {0, 1, 1}, {0, 1, -1}};
    }
    if (n == 6) {
        return {{1, 0, 0},  {0, 1, 0},  {0, 0, 1},  {1, 1, 0},  {1, -1, 0},  {1, 0, 1},
                {1, 0, -1}, {0, 1, 1},  {0, 1, -1}, {1, 0, 2},  {1, 0, -2},  {0, 1, 2},
                {0, 1, -2}, {2, 0, 1},  {2, 0, -1}, {0, 2, 1},  {0, 2, -1},  {1, 1, 1},
                {1, 1, -1}, {1, -1, 1}, {1, -1, -1}};
    }
    throw std::invalid_argument("compaction_directions: available for n = 4 and 6");
}

SettingPlan synthesize_settings(const PauliSum &target, const DirectionSet &dictionary,
                                const SynthesisOptions &opts) {
    if (target.num_qubits() > 8) {
        throw capacity_error("synthesize_settings: at most 8 qubits");
    }
    if (dictionary.empty()) {
        throw std::invalid_argument("synthesize_settings: empty dictionary");
    }
    const Decomposition d = decompose_target(target);
    SettingPlan plan;
    plan.n = target.num_qubits();
    plan.identity = d.identity;
    for (const auto &s : d.sectors) {
        if (auto idx = search_sector(s, dictionary, opts)) {
            DirectionSet dirs;
            for (std::size_t i : *idx) {
                dirs.push_back(dictionary[i]);
            }
            append_settings(plan, s, dirs, solve(s, units_of(dictionary, *idx)));
        } else {
            std::vector<std::size_t> all(dictionary.size());
            std::iota(all.begin(), all.end(), std::size_t{0});
            append_settings(plan, s, dictionary, solve(s, units_of(dictionary, all)));
            plan.diagnostic += "no feasible subset of at most " + std::to_string(opts.max_settings) +
                               " directions for a sector; using the whole dictionary. ";
        }
    }
    finish(plan, target);
    if (plan.residual_norm > opts.tolerance && plan.diagnostic.empty()) {
        plan.diagnostic = "dictionary cannot represent the target";
    }
    return plan;
}

SettingPlan synthesize_settings(const PauliSum &target) {
    return synthesize_settings(target, default_dictionary());
}

SettingPlan plan_from_directions(const PauliSum &target, const DirectionSet &directions) {
    if (directions.empty()) {
        throw std::invalid_argument("plan_from_directions: no directions");
    }
    const Decomposition d = decompose_target(target);
    SettingPlan plan;
    plan.n = target.num_qubits();
    plan.identity = d.identity;
    std::vector<std::array<double, 3>> units;
    for (const auto &dir : directions) {
        units.push_back(unit(dir));
    }
    for (const auto &s : d.sectors) {
        append_settings(plan, s, directions, solve(s, units));
    }
    finish(plan, target);
    if (plan.residual_norm > 1e-10) {
        plan.diagnostic = "directions cannot represent the target";
    }
    return plan;
}

std::size_t setting_count(const PauliSum &target) { return synthesize_settings(target).size(); }

std::size_t setting_count(const StateVector &psi) {
    return setting_count(correlation_tensor(psi).to_operator());
}

PauliSum materialize(const SettingPlan &plan) {
    const int n = plan.n;
    std::vector<PauliString> terms;
    terms.emplace_back(std::vector<Pauli>(static_cast<std::size_t>(n), Pauli::I), plan.identity);
    for (const auto &s : plan.settings) {
        const bool headed = s.head.has_value();
        const int m = headed ? n - 1 : n;
        const std::size_t count = std::size_t{1} << (2 * m);
        std::vector<Pauli> labels(static_cast<std::size_t>(n), Pauli::I);
        if (headed) {
            labels[0] = *s.head;
        }
        const std::size_t offset = headed ? 1 : 0;
        for (std::size_t code = 0; code < count; ++code) {
            double coef = 1.0;
            int w = 0;
            for (int q = 0; q < m && coef != 0.0; ++q) {
                const auto p = static_cast<Pauli>((code >> (2 * (m - 1 - q))) & 3U);
                labels[offset + static_cast<std::size_t>(q)] = p;
                if (p != Pauli::I) {
                    ++w;
                    coef *= s.u[static_cast<std::size_t>(p) - 1];
                }
            }
            if (coef == 0.0) {
                continue;
            }
            double weight_coef = 0.0;
            if (w == m) {
                weight_coef = s.c;
            } else if (auto it = s.marginals.find(w); it != s.marginals.end()) {
                weight_coef = it->second;
            }
            if (weight_coef != 0.0) {
                terms.emplace_back(labels, weight_coef * coef);
            }
        }
    }
    return PauliSum(n, std::move(terms));
}

nlohmann::json to_json(const SettingPlan &plan) {
    nlohmann::json settings = nlohmann::json::array();
    for (const auto &s : plan.settings) {
        nlohmann::json j{{"u", {s.u[0], s.u[1], s.u[2]}},
                         {"direction", {s.direction[0], s.direction[1], s.direction[2]}},
                         {"c", s.c}};
        if (s.head) {
            j["head"] = std::string(1, pauli_char(*s.head));
        }
        if (!s.marginals.empty()) {
            nlohmann::json m = nlohmann::json::object();
            for (const auto &[w, v] : s.marginals) {
                m[std::to_string(w)] = v;
            }
            j["marginals"] = m;
        }
        settings.push_back(std::move(j));
    }
    nlohmann::json out{{"n", plan.n},
                       {"settings", settings},
                       {"setting_count", plan.settings.size()},
                       {"identity", plan.identity},
                       {"residual_norm", plan.residual_norm}};
    if (!plan.diagnostic.empty()) {
        out["diagnostic"] = plan.diagnostic;
    }
    return out;
}

} // namespace dicke
