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
#include "dicke/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace dicke {

namespace {

const cplx kPhase[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

// i^{nY} (-1)^{popcount(c & z)} for the basis column c.
cplx column_phase(std::size_t c, std::size_t z, int y_count) {
    const int sign = std::popcount(c & z) & 1;
    return (sign != 0 ? -1.0 : 1.0) * kPhase[y_count & 3];
}

bool labels_less(const std::vector<Pauli> &a, const std::vector<Pauli> &b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace

char pauli_char(Pauli p) noexcept {
    switch (p) {
    case Pauli::I:
        return 'I';
    case Pauli::X:
        return 'X';
    case Pauli::Y:
        return 'Y';
    case Pauli::Z:
        return 'Z';
    }
    return '?';
}

Pauli pauli_from_char(char c) {
    switch (c) {
    case 'I':
    case 'i':
    case '0':
        return Pauli::I;
    case 'X':
    case 'x':
        return Pauli::X;
    case 'Y':
    case 'y':
        return Pauli::Y;
    case 'Z':
    case 'z':
        return Pauli::Z;
    default:
        throw std::invalid_argument(std::string("not a Pauli label: '") + c + "'");
    }
}

Matrix2c pauli_matrix(Pauli p) {
    Matrix2c m;
    switch (p) {
    case Pauli::I:
        m << 1, 0, 0, 1;
        break;
    case Pauli::X:
        m << 0, 1, 1, 0;
        break;
    case Pauli::Y:
        m << 0, cplx(0, -1), cplx(0, 1), 0;
        break;
    case Pauli::Z:
        m << 1, 0, 0, -1;
        break;
    }
    return m;
}

// --- PauliString -----------------------------------------------------------

PauliString::PauliString(std::vector<Pauli> labels, double coefficient)
    : labels_(std::move(labels)), coeff_(coefficient) {
    if (labels_.empty()) {
        throw std::invalid_argument("PauliString: empty label sequence");
    }
    if (!std::isfinite(coeff_)) {
        throw std::invalid_argument("PauliString: coefficient must be finite");
    }
}

PauliString::PauliString(std::string_view labels, double coefficient)
    : PauliString(
          [&] {
              std::vector<Pauli> v;
              v.reserve(labels.size());
              for (char c : labels) {
                  v.push_back(pauli_from_char(c));
              }
              return v;
          }(),
          coefficient) {}

std::string PauliString::label_string() const {
    std::string s;
    s.reserve(labels_.size());
    for (Pauli p : labels_) {
        s.push_back(pauli_char(p));
    }
    return s;
}

int PauliString::weight() const noexcept {
    return static_cast<int>(
        std::count_if(labels_.begin(), labels_.end(), [](Pauli p) { return p != Pauli::I; }));
}

std::size_t PauliString::x_mask() const noexcept {
    const int n = size();
    std::size_t m = 0;
    for (int q = 0; q < n; ++q) {
        if (labels_[q] == Pauli::X || labels_[q] == Pauli::Y) {
            m |= qubit_mask(n, q);
        }
    }
    return m;
}

std::size_t PauliString::z_mask() const noexcept {
    const int n = size();
    std::size_t m = 0;
    for (int q = 0; q < n; ++q) {
        if (labels_[q] == Pauli::Z || labels_[q] == Pauli::Y) {
            m |= qubit_mask(n, q);
        }
    }
    return m;
}

int PauliString::y_count() const noexcept {
    return static_cast<int>(std::count(labels_.begin(), labels_.end(), Pauli::Y));
}

CMatrix PauliString::to_matrix() const {
    const int n = size();
    require_state_cap(n, "PauliString::to_matrix");
    const std::size_t dim = dim_of(n);
    const std::size_t x = x_mask();
    const std::size_t z = z_mask();
    const int ny = y_count();
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (std::size_t c = 0; c < dim; ++c) {
        m(static_cast<Eigen::Index>(c ^ x), static_cast<Eigen::Index>(c)) =
            coeff_ * column_phase(c, z, ny);
    }
    return m;
}

// --- PauliSum --------------------------------------------------------------

PauliSum::PauliSum(int n) : n_(n) {
    if (n < 1) {
        throw std::invalid_argument("PauliSum: register size must be >= 1");
    }
}

PauliSum::PauliSum(int n, std::vector<PauliString> terms) : PauliSum(n) {
    for (const auto &t : terms) {
        if (t.size() != n) {
            throw std::invalid_argument("PauliSum: term size mismatch");
        }
    }
    std::sort(terms.begin(), terms.end(), [](const PauliString &a, const PauliString &b) {
        return labels_less(a.labels(), b.labels());
    });
    for (auto &t : terms) {
        if (!terms_.empty() && terms_.back().labels() == t.labels()) {
            terms_.back() = PauliString(terms_.back().labels(),
                                        terms_.back().coefficient() + t.coefficient());
        } else {
            terms_.push_back(std::move(t));
        }
    }
    std::erase_if(terms_, [](const PauliString &t) {
        return std::abs(t.coefficient()) < kDropTolerance;
    });
}

PauliSum PauliSum::identity(int n, double coefficient) {
    PauliSum s(n);
    s.insert(std::vector<Pauli>(static_cast<std::size_t>(n), Pauli::I), coefficient);
    return s;
}

double PauliSum::coefficient(std::string_view labels) const {
    const PauliString probe(labels, 0.0);
    auto it = std::lower_bound(terms_.begin(), terms_.end(), probe.labels(),
                               [](const PauliString &t, const std::vector<Pauli> &key) {
                                   return labels_less(t.labels(), key);
                               });
    if (it != terms_.end() && it->labels() == probe.labels()) {
        return it->coefficient();
    }
    return 0.0;
}

void PauliSum::insert(std::vector<Pauli> labels, double coefficient) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), labels,
                               [](const PauliString &t, const std::vector<Pauli> &key) {
                                   return labels_less(t.labels(), key);
                               });
    if (it != terms_.end() && it->labels() == labels) {
        const double c = it->coefficient() + coefficient;
        if (std::abs(c) < kDropTolerance) {
            terms_.erase(it);
        } else {
            *it = PauliString(std::move(labels), c);
        }
        return;
    }
    if (std::abs(coefficient) < kDropTolerance) {
        return;
    }
    terms_.insert(it, PauliString(std::move(labels), coefficient));
}

void PauliSum::add(const PauliString &term) {
    if (term.size() != n_) {
        throw std::invalid_argument("PauliSum::add: term size mismatch");
    }
    insert(term.labels(), term.coefficient());
}

void PauliSum::add(std::string_view labels, double coefficient) {
    add(PauliString(labels, coefficient));
}

PauliSum &PauliSum::operator+=(const PauliSum &other) {
    if (other.n_ != n_) {
        throw std::invalid_argument("PauliSum: register size mismatch");
    }
    std::vector<PauliString> all = terms_;
    all.insert(all.end(), other.terms_.begin(), other.terms_.end());
    *this = PauliSum(n_, std::move(all));
    return *this;
}

PauliSum &PauliSum::operator-=(const PauliSum &other) {
    return *this += (-1.0) * other;
}

PauliSum &PauliSum::operator*=(double s) {
    std::vector<PauliString> scaled;
    scaled.reserve(terms_.size());
    for (const auto &t : terms_) {
        scaled.emplace_back(t.labels(), s * t.coefficient());
    }
    *this = PauliSum(n_, std::move(scaled));
    return *this;
}

double PauliSum::max_abs_coefficient() const noexcept {
    double m = 0.0;
    for (const auto &t : terms_) {
        m = std::max(m, std::abs(t.coefficient()));
    }
    return m;
}

CMatrix PauliSum::to_matrix() const {
    require_state_cap(n_, "PauliSum::to_matrix");
    const std::size_t dim = dim_of(n_);
    CMatrix m = CMatrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto &t : terms_) {
        const std::size_t x = t.x_mask();
        const std::size_t z = t.z_mask();
        const int ny = t.y_count();
        for (std::size_t c = 0; c < dim; ++c) {
            m(static_cast<Eigen::Index>(c ^ x), static_cast<Eigen::Index>(c)) +=
                t.coefficient() * column_phase(c, z, ny);
        }
    }
    return m;
}

CVector PauliSum::apply(const CVector &psi) const {
    const std::size_t dim = dim_of(n_);
    if (static_cast<std::size_t>(psi.size()) != dim) {
        throw std::invalid_argument("PauliSum::apply: dimension mismatch");
    }
    CVector out = CVector::Zero(psi.size());
    for (const auto &t : terms_) {
        const std::size_t x = t.x_mask();
        const std::size_t z = t.z_mask();
        const int ny = t.y_count();
        for (std::size_t c = 0; c < dim; ++c) {
            const auto ci = static_cast<Eigen::Index>(c);
            if (psi[ci] != cplx(0.0, 0.0)) {
                out[static_cast<Eigen::Index>(c ^ x)] +=
                    t.coefficient() * column_phase(c, z, ny) * psi[ci];
            }
        }
    }
    return out;
}

PauliSum operator+(PauliSum a, const PauliSum &b) {
    a += b;
    return a;
}

PauliSum operator-(PauliSum a, const PauliSum &b) {
    a -= b;
    return a;
}

PauliSum operator*(double s, PauliSum a) {
    a *= s;
    return a;
}

PauliSum tensor(const PauliSum &a, const PauliSum &b) {
    const int n = a.num_qubits() + b.num_qubits();
    std::vector<PauliString> out;
    out.reserve(a.size() * b.size());
    for (const auto &ta : a.terms()) {
        for (const auto &tb : b.terms()) {
            std::vector<Pauli> labels = ta.labels();
            labels.insert(labels.end(), tb.labels().begin(), tb.labels().end());
            out.emplace_back(std::move(labels), ta.coefficient() * tb.coefficient());
        }
    }
    return PauliSum(n, std::move(out));
}

PauliSum single_qubit(double ux, double uy, double uz, double u0) {
    return PauliSum(1, {PauliString("I", u0), PauliString("X", ux), PauliString("Y", uy),
                        PauliString("Z", uz)});
}

PauliSum tensor_power(const PauliSum &a, int k) {
    if (k < 1) {
        throw std::invalid_argument("tensor_power: exponent must be >= 1");
    }
    PauliSum out = a;
    for (int i = 1; i < k; ++i) {
        out = tensor(out, a);
    }
    return out;
}

PauliSum permutation_sum(std::string labels, double coefficient) {
    if (labels.empty()) {
        throw std::invalid_argument("permutation_sum: empty labels");
    }
    for (char &c : labels) {
        c = pauli_char(pauli_from_char(c));
    }
    std::sort(labels.begin(), labels.end());
    std::vector<PauliString> terms;
    do {
        terms.emplace_back(labels, coefficient);
    } while (std::next_permutation(labels.begin(), labels.end()));
    return PauliSum(static_cast<int>(labels.size()), std::move(terms));
}

PauliSum pauli_decompose(const CMatrix &m) {
    const auto dim = static_cast<std::size_t>(m.rows());
    if (m.rows() != m.cols() || dim == 0 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("pauli_decompose: matrix must be 2^n square");
    }
    const int n = std::countr_zero(dim);
    require_state_cap(n, "pauli_decompose");
    std::vector<PauliString> terms;
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
        const int ny = p.y_count();
        cplx tr = 0.0;
        for (std::size_t d = 0; d < dim; ++d) {
            tr += column_phase(d, z, ny) *
                  m(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d ^ x));
        }
        const double c = tr.real() / static_cast<double>(dim);
        if (std::abs(c) >= PauliSum::kDropTolerance) {
            terms.emplace_back(labels, c);
        }
    }
    return PauliSum(n, std::move(terms));
}

double max_coefficient_difference(const PauliSum &a, const PauliSum &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw std::invalid_argument("max_coefficient_difference: size mismatch");
    }
    double worst = 0.0;
    for (const auto &t : (a - b).terms()) {
        worst = std::max(worst, std::abs(t.coefficient()));
    }
    return worst;
}

} // namespace dicke
