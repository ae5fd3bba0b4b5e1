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
// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.
#include "recipes.hpp"
#include "sweep.hpp"

#include "dicke/bounds.hpp"
#include "dicke/channels.hpp"
#include "dicke/correlations.hpp"
#include "dicke/discriminators.hpp"
#include "dicke/optimize.hpp"
#include "dicke/oracle.hpp"
#include "dicke/paulidecomp.hpp"
#include "dicke/qcore.hpp"
#include "dicke/witnesses.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace dicke;

namespace {

int failures = 0;

void report(const std::string &id, bool pass, const std::string &detail) {
    std::printf("%s %-3s %s\n", pass ? "PASS" : "FAIL", id.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!pass) {
        ++failures;
    }
}

std::string fmt(const char *f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

class Stopwatch {
  public:
    [[nodiscard]] double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

  private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

// Parses CSV text into rows of cells, header dropped.
std::vector<std::vector<std::string>> csv_rows(const std::string &text) {
    std::vector<std::vector<std::string>> rows;
    std::stringstream in(text);
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        std::vector<std::string> row;
        std::stringstream ls(line);
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            row.push_back(cell);
        }
        rows.push_back(row);
    }
    return rows;
}

double bound_via_cli(int n, double alpha, double &seconds) {
    cli::SweepConfig c;
    c.command = "bound";
    c.n = {n};
    c.alpha = cli::Range::single(alpha);
    std::ostringstream out;
    Stopwatch sw;
    cli::execute(c, out);
    seconds = sw.seconds();
    return nlohmann::json::parse(out.str()).at("b_bs").get<double>();
}

void criterion_1(std::map<int, double> &bbs) {
    const std::map<int, std::pair<double, double>> expected{
        {4, {5.23, 0.01}}, {6, {11.018, 0.005}}, {8, {18.83, 0.01}}};
    bool pass = true;
    std::string detail;
    for (const auto &[n, ref] : expected) {
        double seconds = 0.0;
        const double b = bound_via_cli(n, 0.0, seconds);
        bbs[n] = b;
        const double limit = n == 8 ? 120.0 : 10.0;
        pass = pass && std::abs(b - ref.first) <= ref.second && seconds < limit;
        detail += "n=" + std::to_string(n) + " b_bs=" + fmt("%.5f", b) + " (" +
                  fmt("%.2f", seconds) + " s) ";
    }
    report("1", pass, "biseparability bounds: " + detail);
}

void criterion_2() {
    bool pass = true;
    std::string detail;
    const std::map<int, double> expected{{4, 0.203}, {6, 0.170}};
    for (const auto &[n, ref] : expected) {
        ToleranceQuery q;
        q.n = n;
        const double g = noise_tolerance(q).gamma;
        const double formula = 2.0 / n * std::log((2.0 * n - 2.0) / n);
        // Independent root of the witness curve itself.
        const auto root = optimize::bisect(
            [n](double x) { return fidelity_witness(n, NoiseChannel::ad(x)).value; }, 0.0, 1.0,
            1e-15);
        const double machine = 4.0 * std::numeric_limits<double>::epsilon() * formula;
        pass = pass && std::abs(g - ref) <= 0.001 && std::abs(g - formula) <= machine && root &&
               std::abs(*root - formula) < 1e-12;
        detail += "n=" + std::to_string(n) + " gamma=" + fmt("%.6f", g) +
                  " |closed-formula|=" + fmt("%.1e", std::abs(g - formula)) +
                  " |root-formula|=" + fmt("%.1e", root ? std::abs(*root - formula) : 1.0) + " ";
    }
    report("2", pass, "fidelity-witness AD thresholds: " + detail);
}

void criterion_3(double b6) {
    ToleranceQuery q;
    q.kind = WitnessKind::Collective;
    q.n = 6;
    q.alpha = 0.0;
    q.bound = b6;
    const double g = noise_tolerance(q).gamma;
    report("3", std::abs(g - 0.116) <= 0.001,
           "collective AD failure point n=6 alpha=0: gamma=" + fmt("%.6f", g) +
               " (b_bs=" + fmt("%.5f", b6) + ")");
}

void criterion_4(double b8) {
    ToleranceQuery q;
    q.kind = WitnessKind::Collective;
    q.n = 8;
    q.alpha = 0.0;
    q.bound = b8;
    const double g0 = noise_tolerance(q).gamma;
    report("4a", std::abs(g0 - 0.076) <= 0.002,
           "n=8 alpha=0 collective witness fails from gamma=" + fmt("%.6f", g0));

    // α over [-5, -0.1] in steps of 0.1, γ over [0.18, 0.20] in steps of 0.005.
    double best = std::numeric_limits<double>::infinity();
    double best_alpha = 0.0;
    double best_gamma = 0.0;
    double reach = 0.0;
    double reach_alpha = 0.0;
    std::vector<double> alphas;
    for (int i = 0; i <= 49; ++i) {
        alphas.push_back(-5.0 + 0.1 * i);
    }
    std::vector<double> bounds(alphas.size());
    cli::parallel_for(alphas.size(),
                      [&](std::size_t i) { bounds[i] = biseparable_bound(8, alphas[i]).b_bs; });
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        for (int k = 0; k <= 4; ++k) {
            const double g = 0.18 + 0.005 * k;
            const double v =
                collective_witness(8, alphas[i], NoiseChannel::ad(g), bounds[i]).value;
            if (v < best) {
                best = v;
                best_alpha = alphas[i];
                best_gamma = g;
            }
        }
        ToleranceQuery qa = q;
        qa.alpha = alphas[i];
        qa.bound = bounds[i];
        const double ga = noise_tolerance(qa).gamma;
        if (ga > reach) {
            reach = ga;
            reach_alpha = alphas[i];
        }
    }
    report("4b", best < 0.0,
           "n=8 some alpha in [-5,-0.1] detects at gamma in [0.18,0.20]: min witness=" +
               fmt("%.6f", best) + " at alpha=" + fmt("%.1f", best_alpha) +
               " gamma=" + fmt("%.3f", best_gamma) + "; largest detected gamma over the alpha grid=" +
               fmt("%.4f", reach) + " at alpha=" + fmt("%.1f", reach_alpha));
}

void criterion_5() {
    double worst = 0.0;
    for (int n : {4, 6, 8}) {
        const auto psi = symmetric_dicke_state(n);
        for (double g : {0.02, 0.1, 0.25, 0.5, 1.0}) {
            const NoiseChannel ch = NoiseChannel::pd(g);
            const DensityMatrix rho(n, oracle::channel_output(psi.amplitudes(), n, ch));
            const double unfiltered = fidelity_witness(n, ch).value;
            for (double y : {0.3, 0.8, 1.25, 2.0}) {
                const double filtered = filtered_witness_dense(
                    rho, psi, fidelity_bound(n), FilterSpec::uniform(n, y), FilterNormalization::None);
                const double ref = std::pow(y, n) * unfiltered;
                worst = std::max(worst, std::abs(filtered - ref) / std::max(1.0, std::abs(ref)));
            }
        }
    }

    cli::SweepConfig c = cli::figure_recipe("fig2b");
    std::ostringstream out;
    cli::execute(c, out);
    bool gap = true;
    bool persistent = true;
    int rows = 0;
    std::string first;
    std::string last;
    for (const auto &row : csv_rows(out.str())) {
        const double filtered = std::stod(row.at(2));
        const double plain = std::stod(row.at(3));
        ToleranceQuery q;
        q.kind = WitnessKind::FilteredFidelity;
        q.n = std::stoi(row.at(0));
        const auto filtered_zero = noise_tolerance(q);
        gap = gap && filtered > plain && filtered_zero.gamma > plain;
        persistent = persistent && !filtered_zero.crosses;
        const std::string entry = "n=" + row.at(0) + " " + fmt("%.4f", filtered) + " vs " +
                                  fmt("%.4f", plain);
        if (rows == 0) {
            first = entry;
        }
        last = entry;
        ++rows;
    }
    report("5", worst <= 1e-12 && gap && rows == 9,
           "PD filter identity max rel dev=" + fmt("%.1e", worst) +
               " over 60 (n,gamma,y) points; AD thresholds filtered vs unfiltered: " + first +
               " ... " + last + (persistent ? "; at t=0 the filtered witness stays negative up to gamma=5" : ""));
}

void criterion_6() {
    bool pass = true;
    std::string detail;
    for (int n : {4, 6}) {
        double worst = 0.0;
        int points = 0;
        for (int i = 0; i <= 200; ++i) {
            const double g = 0.0025 * i;
            const auto opt = optimize_filter(n, NoiseChannel::dp(g));
            if (!(opt.value < 0.0)) {
                break;
            }
            worst = std::max(worst, std::abs(opt.y - 1.0));
            ++points;
        }
        pass = pass && points > 10 && worst <= 1e-3;
        detail += "n=" + std::to_string(n) + " max|y-1|=" + fmt("%.1e", worst) + " over " +
                  std::to_string(points) + " negative points ";
    }
    report("6", pass, "DP filtered minimum at y=1: " + detail);
}

void criterion_7() {
    Stopwatch sw;
    const auto reports = oracle::cross_validate();
    const double seconds = sw.seconds();
    std::set<std::string> names;
    std::set<int> sizes;
    for (const auto &r : reports) {
        names.insert(r.name);
        sizes.insert(r.n);
    }
    bool covered = true;
    for (const auto &name : oracle::closed_form_names()) {
        covered = covered && names.count(name) == 1;
    }
    const double worst = oracle::max_difference(reports);
    report("7", covered && worst < 1e-10 && seconds < 180.0 && sizes.count(4) && sizes.count(6),
           "oracle equivalence: " + std::to_string(oracle::closed_form_names().size()) +
               " closed forms, " + std::to_string(reports.size()) + " checks, max diff=" +
               fmt("%.2e", worst) + ", " + fmt("%.1f", seconds) + " s");
}

void criterion_8() {
    const auto search = ghz_class_bound(6);
    // Each curve must fall strictly from γ = 0 until it first reaches zero
    // (the whole of [0, 1] when it stays positive). AD curves dip below zero
    // and then relax back towards the |0...0> value 0; that turnaround is
    // reported, not scored.
    bool monotone = true;
    double dp_worst = 0.0;
    std::string turns;
    for (int n : {4, 6, 8, 10}) {
        for (auto kind : {ChannelKind::AD, ChannelKind::PD, ChannelKind::DP}) {
            double last = std::numeric_limits<double>::infinity();
            double turn = -1.0;
            for (int i = 0; i <= 1000; ++i) {
                const double g = 0.001 * i;
                const double v = discriminator_expectation(n, NoiseChannel(kind, g));
                if (last > 0.0) {
                    monotone = monotone && v < last;
                } else if (v > last && turn < 0.0) {
                    turn = g;
                }
                last = v;
                if (kind == ChannelKind::DP) {
                    dp_worst = std::max(dp_worst, std::abs(v - std::pow(1.0 - g, n)));
                }
            }
            if (turn >= 0.0) {
                turns += " n=" + std::to_string(n) + " " + to_string(kind) + "@" + fmt("%.3f", turn);
            }
        }
    }
    report("8", std::abs(search.best - 0.833) <= 0.005 && monotone && dp_worst < 1e-15,
           "GHZ-class LU bound n=6=" + fmt("%.6f", search.best) + " (" +
               std::to_string(search.restarts) + " restarts); curves strictly decreasing to zero: " +
               (monotone ? "yes" : "no") + "; DP vs (1-g)^n max dev=" + fmt("%.1e", dp_worst) +
               "; upturn after the zero crossing:" + (turns.empty() ? " none" : turns));
}

void criterion_9() {
    bool pass = true;
    std::string detail;
    const auto t4 = correlation_tensor(symmetric_dicke_state(4));
    const auto t6 = correlation_tensor(symmetric_dicke_state(6));
    const auto p4 = synthesize_settings(t4.to_operator());
    const auto p6 = plan_from_directions(t6.to_operator(), compaction_directions(6));
    const auto p6_search = synthesize_settings(t6.to_operator());
    const double r4 = max_coefficient_difference(materialize(p4), t4.to_operator());
    const double r6 = max_coefficient_difference(materialize(p6), t6.to_operator());
    const double r6s = max_coefficient_difference(materialize(p6_search), t6.to_operator());
    pass = t4.nonzero_count() == 40 && p4.size() == 9 && r4 < 1e-10 && t6.nonzero_count() == 544 &&
           p6.size() == 21 && r6 < 1e-10 && r6s < 1e-10 && p6_search.size() <= 21;
    detail += "D4: " + std::to_string(t4.nonzero_count()) + " terms, " +
              std::to_string(p4.size()) + " settings; D6: " + std::to_string(t6.nonzero_count()) +
              " terms, " + std::to_string(p6.size()) + " settings on the listed directions (search finds " +
              std::to_string(p6_search.size()) + "); ";

    const PauliSum dhat = characteristic_operator_unnormalized(6);
    const auto pd = synthesize_settings(dhat, z_plus_mk_dictionary(), {});
    const double rd = max_coefficient_difference(materialize(pd), dhat);
    // Quoted weights on σ_z + m σ_k for m = 1, -1, 2, -2 and on σ_k alone.
    const std::map<std::pair<int, int>, double> quoted{
        {{1, 1}, 1.0 / 6}, {{-1, 1}, -1.0 / 6}, {{2, 1}, -1.0 / 12}, {{-2, 1}, 1.0 / 12}, {{1, 0}, 5.0}};
    bool coeffs = pd.size() == 10;
    for (const auto &s : pd.settings) {
        const int m = s.direction[0] != 0 ? s.direction[0] : s.direction[1];
        const auto it = quoted.find({m, s.direction[2]});
        coeffs = coeffs && it != quoted.end() &&
                 std::abs(s.raw_coefficient(5) - it->second) < 1e-10;
    }
    pass = pass && coeffs && rd < 1e-10;
    detail += "D-hat: " + std::to_string(pd.size()) + " settings, quoted coefficients " +
              (coeffs ? "reproduced" : "not reproduced") + "; max rematerialization dev=" +
              fmt("%.1e", std::max({r4, r6, r6s, rd}));
    report("9", pass, "decomposition counts: " + detail);
}

void criterion_10() {
    bool pass = true;
    std::string detail;
    for (const auto &id : identity_ids()) {
        const auto check = verify_identity(id);
        const bool ok = check.holds ? check.max_deviation < 1e-10
                                    : (!check.id.empty() && !check.statement.empty());
        pass = pass && ok;
        detail += id + (check.holds ? " holds" : " FAILS (report: max dev " +
                                                     fmt("%.3g", check.max_deviation) + ")") +
                  "; ";
    }
    report("10", pass, "identity verification: " + detail);
}

void criterion_11() {
    constexpr double half_pi = std::numbers::pi / 2.0;
    double worst_pure = 0.0;
    double worst_ad = 0.0;
    double worst_pd = 0.0;
    double worst_limit = 0.0;
    for (int n = 4; n <= 10; n += 2) {
        const double parity = (n / 2) % 2 == 0 ? 1.0 : -1.0;
        worst_pure = std::max(worst_pure, std::abs(pure_correlation(n, half_pi) - parity));
        worst_ad = std::max(worst_ad, std::abs(noisy_correlation(n, half_pi, NoiseChannel::ad(10.0)) - 1.0));
        worst_pd =
            std::max(worst_pd, std::abs(noisy_correlation(n, half_pi, NoiseChannel::pd(10.0)) - parity));
        worst_limit = std::max({worst_limit,
                                std::abs(asymptotic_correlation(n, half_pi, ChannelKind::AD) - 1.0),
                                std::abs(asymptotic_correlation(n, half_pi, ChannelKind::PD) - parity)});
    }
    report("11", worst_pure < 1e-6 && worst_ad < 1e-6 && worst_pd < 1e-6 && worst_limit < 1e-6,
           "correlation parity at pi/2, n=4..10: pure dev=" + fmt("%.1e", worst_pure) +
               ", AD(gamma=10) dev from +1=" + fmt("%.1e", worst_ad) +
               ", PD(gamma=10) dev from (-1)^(n/2)=" + fmt("%.1e", worst_pd) +
               ", infinite-gamma curves dev=" + fmt("%.1e", worst_limit));
}

void criterion_12() {
    bool pass = true;
    double worst = 0.0;
    std::string flips;
    for (int n : {4, 6}) {
        const double a = alpha_n(n);
        const std::map<ChannelKind, double> printed{
            {ChannelKind::AD, std::log((1.0 + a + std::sqrt(a * a + 6.0 * a - 3.0)) / 2.0)},
            {ChannelKind::DP, 1.0 - 1.0 / std::sqrt(4.0 * a - 1.0)},
            {ChannelKind::PD, -0.5 * std::log((1.0 - a) / a)}};
        for (const auto &[kind, expected] : printed) {
            const double hi = kind == ChannelKind::DP ? 1.0 : 5.0;
            const auto root = optimize::bisect(
                [&](double g) { return reduced_pair_fidelity(n, NoiseChannel(kind, g)) - 0.5; },
                0.0, hi, 1e-14);
            const double computed = root ? *root : -1.0;
            worst = std::max(worst, std::max(std::abs(computed - expected),
                                             std::abs(reduced_disconnection_threshold(n, kind) -
                                                      expected)));
            // Walk a grid with step h; the first non-complete graph must be
            // empty and lie within one step of the threshold.
            const double h = 1e-3;
            double flip = -1.0;
            bool clean = true;
            for (int i = 0; i * h <= hi; ++i) {
                const auto graph = connectivity_graph(n, NoiseChannel(kind, i * h));
                if (!graph.complete()) {
                    flip = i * h;
                    clean = graph.empty();
                    break;
                }
            }
            pass = pass && clean && flip >= 0.0 && std::abs(flip - expected) <= h;
            flips += "n=" + std::to_string(n) + " " + to_string(kind) + " " +
                     fmt("%.6f", expected) + " (flip " + fmt("%.3f", flip) + ") ";
        }
    }
    pass = pass && worst < 1e-8;
    report("12", pass, "reduced-state thresholds: max dev=" + fmt("%.1e", worst) + "; " + flips);
}

} // namespace

int main() {
    std::map<int, double> bbs;
    criterion_1(bbs);
    criterion_2();
    criterion_3(bbs.at(6));
    criterion_4(bbs.at(8));
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    criterion_12();
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
