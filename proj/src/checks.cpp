// Copyright 2026 The lgsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lgsim/checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "lgsim/entropy.hpp"
#include "lgsim/lgineq.hpp"
#include "lgsim/measure.hpp"
#include "lgsim/sweep.hpp"
#include "parallel.hpp"

namespace lgsim {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Running extremes over a slice of the grid; merged after the parallel pass.
struct GridStats {
    double min_Bs_strong = kInf;       // min over B1s, B2s, B3s at eps = 1
    double max_B_strong = -kInf;       // max over B1, B2, B3 at eps = 1
    double min_B4_strong = kInf;
    double min_B1p = kInf;
    double max_oracle_dev = 0.0;
    double max_product_law = 0.0;      // |K13 - cos t1 cos t2| at eps = 1
    double max_markov = 0.0;           // |S123 - S13| at eps = 1
    double max_decoupling = 0.0;       // I(A2 : A1 A3) at eps = 0
    double worst_subadditivity = -kInf;  // max of S(XY) - S(X) - S(Y)
    double worst_araki_lieb = -kInf;     // max of |S(X) - S(Y)| - S(XY)
    double min_ssa = kInf;               // min conditional mutual information
    double max_venn_identity = 0.0;      // |sum of regions - S123| and B*-Venn identities
    double max_symmetric_identity = 0.0;
    std::size_t apparent_entropic = 0;
    std::size_t points = 0;

    void merge(const GridStats &o) {
        min_Bs_strong = std::min(min_Bs_strong, o.min_Bs_strong);
        max_B_strong = std::max(max_B_strong, o.max_B_strong);
        min_B4_strong = std::min(min_B4_strong, o.min_B4_strong);
        min_B1p = std::min(min_B1p, o.min_B1p);
        max_oracle_dev = std::max(max_oracle_dev, o.max_oracle_dev);
        max_product_law = std::max(max_product_law, o.max_product_law);
        max_markov = std::max(max_markov, o.max_markov);
        max_decoupling = std::max(max_decoupling, o.max_decoupling);
        worst_subadditivity = std::max(worst_subadditivity, o.worst_subadditivity);
        worst_araki_lieb = std::max(worst_araki_lieb, o.worst_araki_lieb);
        min_ssa = std::min(min_ssa, o.min_ssa);
        max_venn_identity = std::max(max_venn_identity, o.max_venn_identity);
        max_symmetric_identity = std::max(max_symmetric_identity, o.max_symmetric_identity);
        apparent_entropic += o.apparent_entropic;
        points += o.points;
    }

    void add(const LGReport &r, bool strong, bool zero_strength) {
        ++points;
        min_B1p = std::min(min_B1p, r.B1p);
        max_oracle_dev = std::max(max_oracle_dev, r.oracle_max_deviation);

        const double pair[3][3] = {{r.S12, r.S1, r.S2}, {r.S23, r.S2, r.S3}, {r.S13, r.S1, r.S3}};
        for (const auto &p : pair) {
            worst_subadditivity = std::max(worst_subadditivity, p[0] - p[1] - p[2]);
            worst_araki_lieb = std::max(worst_araki_lieb, std::abs(p[1] - p[2]) - p[0]);
        }
        for (double c : r.venn.pair_cond) {
            min_ssa = std::min(min_ssa, c);
        }
        const auto &v = r.venn;
        max_venn_identity = std::max({max_venn_identity, std::abs(v.total() - r.S123),
                                      std::abs((r.B1s - r.S2) - (v.solo[1] + v.pair_cond[1])),
                                      std::abs((r.B2s - r.S1) - (v.solo[0] + v.pair_cond[2])),
                                      std::abs((r.B3s - r.S3) - (v.solo[2] + v.pair_cond[0]))});

        if (!strong && r.B1s < 1.0 - kApparentEntropicTol && r.B1p >= -1e-9) {
            ++apparent_entropic;
        }
        if (strong) {
            min_Bs_strong = std::min({min_Bs_strong, r.B1s, r.B2s, r.B3s});
            max_B_strong = std::max({max_B_strong, r.B1, r.B2, r.B3});
            min_B4_strong = std::min(min_B4_strong, r.B4);
            max_product_law = std::max({max_product_law, std::abs(r.K13 - std::cos(r.theta1) * std::cos(r.theta2)),
                                        std::abs(r.K13 - r.K12 * r.K23)});
            max_markov = std::max(max_markov, std::abs(r.S123 - r.S13));
            if (r.theta1 == r.theta2) {
                const double c2 = std::pow(std::cos(r.theta1 / 2.0), 2);
                const double h13 = binary_entropy(c2 * c2 + (1.0 - c2) * (1.0 - c2));
                max_symmetric_identity =
                    std::max({max_symmetric_identity, std::abs((r.B1s - 1.0) - (2.0 * binary_entropy(c2) - h13)),
                              std::abs((r.B2s - 1.0) - h13), std::abs((r.B3s - 1.0) - h13)});
            }
        }
        if (zero_strength) {
            max_decoupling = std::max(max_decoupling, std::abs(r.S2 + r.S13 - r.S123));
        }
    }
};

std::string fmt(double v) {
    std::ostringstream s;
    s.precision(6);
    s << v;
    return s.str();
}

CheckResult make(std::string name, bool passed, double worst, std::string detail) {
    return {std::move(name), passed, worst, std::move(detail)};
}

}  // namespace

std::vector<CheckResult> run_invariant_suite(const CheckOptions &options) {
    AngleRange angle{0.0, kPi, options.grid_steps};
    const auto thetas = angle.values();
    std::vector<double> epsilons;
    for (std::size_t k = 0; k < options.epsilon_steps; ++k) {
        epsilons.push_back(options.epsilon_steps == 1
                               ? 1.0
                               : static_cast<double>(k) / static_cast<double>(options.epsilon_steps - 1));
    }

    std::vector<GridStats> per_row(thetas.size());
    detail::parallel_for(thetas.size(), [&](std::size_t i) {
        for (double t2 : thetas) {
            for (double e : epsilons) {
                per_row[i].add(evaluate_point(thetas[i], t2, e), e == 1.0, e == 0.0);
            }
        }
    });
    GridStats g;
    for (const auto &s : per_row) {
        g.merge(s);
    }

    std::vector<CheckResult> out;
    const std::string grid_desc = std::to_string(g.points) + " grid points";

    out.push_back(make("strong entropic no-violation", g.min_Bs_strong >= 1.0 - 1e-9, g.min_Bs_strong,
                       "min(B1s, B2s, B3s) at eps=1 = " + fmt(g.min_Bs_strong) + " (need >= 1 - 1e-9)"));
    out.push_back(make("strong standard no-violation", g.max_B_strong <= 1.0 + 1e-12 && g.min_B4_strong >= -1e-12,
                       g.max_B_strong,
                       "max(B1, B2, B3) = " + fmt(g.max_B_strong) + ", min(B4) = " + fmt(g.min_B4_strong)));

    const LGReport boundary = evaluate_point(kPi / 4, kPi / 4, 0.0);
    out.push_back(make("weak no-violation", g.min_B1p >= -1e-9 && std::abs(boundary.B1p) <= 1e-9, g.min_B1p,
                       "min(B1p) = " + fmt(g.min_B1p) + " over " + grid_desc + "; B1p(pi/4, pi/4, 0) = " +
                           fmt(boundary.B1p)));

    const double entropic_combo = boundary.S12 + boundary.S23 - boundary.S13;
    out.push_back(make("apparent violation reproduced",
                       entropic_combo < 1.0 && boundary.naive_B1 > 1.0 && g.apparent_entropic > 0,
                       entropic_combo,
                       "S12+S23-S13 = " + fmt(entropic_combo) + ", cos+cos-naive_K13 = " + fmt(boundary.naive_B1) +
                           ", weak grid points with B1s < 1 but B1p >= 0: " + std::to_string(g.apparent_entropic)));

    double rho_dev = 0.0;
    for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = 0; b < 5; ++b) {
            const double t1 = kPi * static_cast<double>(a) / 4.0;
            const double t2 = kPi * static_cast<double>(b) / 4.0;
            rho_dev = std::max(rho_dev, max_abs_diff(run_protocol(t1, t2, 1.0).rho123.mat(), oracle_rho123(t1, t2)));
        }
    }
    out.push_back(make("closed-form rho123 at eps=1", rho_dev <= 1e-12, rho_dev,
                       "max entry deviation over 25 probes = " + fmt(rho_dev)));

    out.push_back(make("oracle entropies", g.max_oracle_dev <= 1e-9, g.max_oracle_dev,
                       "max |S_sim - S_closed| = " + fmt(g.max_oracle_dev)));
    out.push_back(make("correlator product law", g.max_product_law <= 1e-10, g.max_product_law,
                       "max |K13 - cos t1 cos t2| = " + fmt(g.max_product_law)));
    out.push_back(make("A2 determined by A1, A3 at eps=1", g.max_markov <= 1e-9, g.max_markov,
                       "max |S123 - S13| = " + fmt(g.max_markov)));
    out.push_back(make("A2 decoupled at eps=0", g.max_decoupling <= 1e-10, g.max_decoupling,
                       "max I(A2 : A1 A3) = " + fmt(g.max_decoupling)));

    const bool ineq_ok = g.worst_subadditivity <= 1e-9 && g.worst_araki_lieb <= 1e-9 && g.min_ssa >= -1e-9;
    out.push_back(make("entropy inequalities", ineq_ok, std::max({g.worst_subadditivity, g.worst_araki_lieb, -g.min_ssa}),
                       "subadditivity slack " + fmt(g.worst_subadditivity) + ", Araki-Lieb slack " +
                           fmt(g.worst_araki_lieb) + ", min conditional MI " + fmt(g.min_ssa)));
    out.push_back(make("Venn inclusion-exclusion", g.max_venn_identity <= 1e-9, g.max_venn_identity,
                       "max identity residual = " + fmt(g.max_venn_identity)));
    out.push_back(make("symmetric-angle closed form", g.max_symmetric_identity <= 1e-10, g.max_symmetric_identity,
                       "max residual on theta1 = theta2 = " + fmt(g.max_symmetric_identity)));

    double unitary_dev = 0.0;
    double norm_dev = 0.0;
    const SubsystemLayout layout = SubsystemLayout::protocol();
    const ComplexMatrix id = ComplexMatrix::identity(layout.total_dim());
    for (int a = 0; a <= 8; ++a) {
        const double t = kPi * a / 8.0;
        const ComplexMatrix us = strong_unitary(t, "Q", "A2", layout);
        unitary_dev = std::max(unitary_dev, max_abs_diff(matmul(adjoint(us), us), id));
        for (int b = 0; b <= 4; ++b) {
            const double e = b / 4.0;
            const ComplexMatrix uw = weak_unitary(t, e, "Q", "A2", layout);
            unitary_dev = std::max(unitary_dev, max_abs_diff(matmul(adjoint(uw), uw), id));
            for (int c = 0; c <= 8; ++c) {
                norm_dev = std::max(norm_dev, std::abs(run_protocol(t, kPi * c / 8.0, e).final_ket.norm() - 1.0));
            }
        }
    }
    out.push_back(make("unitarity and norm", unitary_dev <= 1e-12 && norm_dev <= 1e-12,
                       std::max(unitary_dev, norm_dev),
                       "max |U^dag U - 1| = " + fmt(unitary_dev) + ", max |norm - 1| = " + fmt(norm_dev)));

    if (options.mc_repetitions > 0) {
        const LGReport probe = evaluate_point(kPi / 2, kPi / 2, 1.0);
        const double exact_k[3] = {probe.K12, probe.K23, probe.K13};
        const double exact_h[3] = {probe.S12, probe.S23, probe.S13};
        std::size_t within_bound[3] = {0, 0, 0};
        std::size_t within_5sigma[3] = {0, 0, 0};
        double worst_h = 0.0;
        for (std::size_t rep = 0; rep < options.mc_repetitions; ++rep) {
            const SampleEstimate s = sample_outcomes(probe.distribution, options.mc_samples, rep + 1);
            const double h[3] = {s.H12, s.H23, s.H13};
            for (int k = 0; k < 3; ++k) {
                within_bound[k] += std::abs(s.K_hat[k]) <= 0.003;
                within_5sigma[k] += std::abs(s.K_hat[k] - exact_k[k]) <= 5.0 * s.K_stderr[k];
                worst_h = std::max(worst_h, std::abs(h[k] - exact_h[k]));
            }
        }
        const std::size_t need = (options.mc_repetitions * 99 + 99) / 100;
        const std::size_t min_bound = *std::min_element(within_bound, within_bound + 3);
        const std::size_t min_5sigma = *std::min_element(within_5sigma, within_5sigma + 3);
        out.push_back(make("Monte Carlo convergence", min_bound >= need && min_5sigma >= need && worst_h <= 0.01,
                           static_cast<double>(min_bound),
                           "reps with |K_hat| <= 0.003: " + std::to_string(min_bound) + "/" +
                               std::to_string(options.mc_repetitions) + ", within 5 stderr: " +
                               std::to_string(min_5sigma) + ", max plug-in entropy error " + fmt(worst_h)));
    }
    return out;
}

}  // namespace lgsim
