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


#include <cmath>
#include <numbers>
#include <vector>

#include "doctest.h"
#include "lgsim/entropy.hpp"
#include "lgsim/error.hpp"
#include "lgsim/measure.hpp"
#include "oracles.hpp"

using namespace lgsim;
using std::numbers::pi;

namespace {

SubsystemLayout three_bits() {
    return SubsystemLayout({{"X", 2}, {"Y", 2}, {"Z", 2}});
}

DensityOp classical(const std::vector<double> &p) {
    return DensityOp(three_bits(), ComplexMatrix::diagonal(p));
}

// Brute-force entropy of the marginal of p on the bits in mask (bit0 = X).
double marginal_entropy(const std::vector<double> &p, unsigned mask) {
    std::vector<double> m(8, 0.0);
    for (unsigned i = 0; i < 8; ++i) {
        const unsigned x = (i >> 2) & 1, y = (i >> 1) & 1, z = i & 1;
        const unsigned key = ((mask & 1) ? x << 2 : 0) | ((mask & 2) ? y << 1 : 0) | ((mask & 4) ? z : 0);
        m[key] += p[i];
    }
    return oracle::entropy_of(m);
}

}  // namespace

TEST_CASE("binary entropy") {
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.25) == doctest::Approx(oracle::h2(0.25)).epsilon(1e-15));
    CHECK(binary_entropy(0.25) == doctest::Approx(0.8112781).epsilon(1e-7));
    CHECK(binary_entropy(0.3) == doctest::Approx(binary_entropy(0.7)).epsilon(1e-15));
    CHECK(binary_entropy(-1e-13) == 0.0);
    CHECK_THROWS_AS(binary_entropy(1.1), Error);
    CHECK_THROWS_AS(binary_entropy(-0.01), Error);
}

TEST_CASE("shannon entropy") {
    const std::vector<double> half{0.5, 0.5};
    CHECK(shannon(half) == doctest::Approx(1.0));
    const std::vector<double> sure{1.0, 0.0, 0.0, 0.0};
    CHECK(shannon(sure) == 0.0);

    const std::vector<double> p{0.375, 0.125, 0.125, 0.375};
    CHECK(shannon(p) == doctest::Approx(1.0 + oracle::h2(0.75)).epsilon(1e-14));
    CHECK(shannon(p) == doctest::Approx(1.8112781).epsilon(1e-7));
    const auto run = run_protocol(pi / 3, 0.2, 1.0);
    CHECK(von_neumann(run.rho12) == doctest::Approx(shannon(p)).epsilon(1e-10));

    const std::vector<double> short_sum{0.5, 0.4};
    CHECK_THROWS_AS(shannon(short_sum), Error);
    const std::vector<double> negative{1.1, -0.1};
    CHECK_THROWS_AS(shannon(negative), Error);
}

TEST_CASE("von Neumann entropy") {
    const double half[] = {0.5, 0.5};
    CHECK(von_neumann(DensityOp(SubsystemLayout({{"X", 2}}), ComplexMatrix::diagonal(half))) ==
          doctest::Approx(1.0));

    const double h = 1.0 / std::sqrt(2.0);
    const Ket plus(SubsystemLayout({{"X", 2}, {"Y", 2}}), {h, 0.0, 0.0, h});
    CHECK(std::abs(von_neumann(density_of(plus))) < 1e-12);

    const auto run = run_protocol(pi / 2, 0.6, 1.0);
    CHECK(von_neumann(run.rho12) == doctest::Approx(2.0).epsilon(1e-12));

    const double bad[] = {1.5, -0.5};
    const DensityOp negative(SubsystemLayout({{"X", 2}}), ComplexMatrix::diagonal(bad));
    CHECK_THROWS_AS(von_neumann(negative), Error);
}

TEST_CASE("Venn regions of the GHZ-diagonal classical state") {
    const std::vector<double> p{0.5, 0, 0, 0, 0, 0, 0, 0.5};
    const auto v = venn3(classical(p));
    auto S = [&](unsigned mask) { return marginal_entropy(p, mask); };
    const double full = S(7);
    CHECK(v.solo[0] == doctest::Approx(full - S(6)));
    CHECK(v.solo[1] == doctest::Approx(full - S(5)));
    CHECK(v.solo[2] == doctest::Approx(full - S(3)));
    CHECK(v.pair_cond[0] == doctest::Approx(S(5) + S(6) - S(4) - full));
    CHECK(v.pair_cond[1] == doctest::Approx(S(3) + S(6) - S(2) - full));
    CHECK(v.pair_cond[2] == doctest::Approx(S(3) + S(5) - S(1) - full));
    CHECK(v.center ==
          doctest::Approx(S(1) + S(2) + S(4) - S(3) - S(5) - S(6) + full));
    for (double x : v.solo) {
        CHECK(std::abs(x) < 1e-12);
    }
    for (double x : v.pair_cond) {
        CHECK(std::abs(x) < 1e-12);
    }
    CHECK(v.center == doctest::Approx(1.0));
    CHECK(v.total() == doctest::Approx(full));
}

TEST_CASE("Venn regions of a product state") {
    const double pa = 0.2, pb = 0.5, pc = 0.9;
    std::vector<double> p(8);
    for (unsigned i = 0; i < 8; ++i) {
        p[i] = ((i & 4) ? pa : 1 - pa) * ((i & 2) ? pb : 1 - pb) * ((i & 1) ? pc : 1 - pc);
    }
    const auto v = venn3(classical(p));
    CHECK(v.solo[0] == doctest::Approx(oracle::h2(pa)).epsilon(1e-12));
    CHECK(v.solo[1] == doctest::Approx(oracle::h2(pb)).epsilon(1e-12));
    CHECK(v.solo[2] == doctest::Approx(oracle::h2(pc)).epsilon(1e-12));
    for (double x : v.pair_cond) {
        CHECK(std::abs(x) < 1e-12);
    }
    CHECK(std::abs(v.center) < 1e-12);
}

TEST_CASE("protocol Venn regions at quarter turns") {
    const auto run = run_protocol(pi / 2, pi / 2, 1.0);
    const auto v = venn3(run.rho123);
    CHECK(v.labels == std::array<std::string, 3>{"A1", "A2", "A3"});
    CHECK(std::abs(v.solo[1]) < 1e-9);
}

TEST_CASE("venn3 needs three factors") {
    const double d[] = {0.25, 0.25, 0.25, 0.25};
    const DensityOp two(SubsystemLayout({{"X", 2}, {"Y", 2}}), ComplexMatrix::diagonal(d));
    CHECK_THROWS_AS(venn3(two), Error);
}

TEST_CASE("weak marginals are not diagonal in the pointer basis") {
    const auto run = run_protocol(pi / 3, pi / 3, 0.5);
    for (const DensityOp *rho : {&run.rho12, &run.rho23}) {
        std::vector<double> diag(4);
        for (std::size_t i = 0; i < 4; ++i) {
            diag[i] = rho->mat()(i, i).real();
        }
        CHECK(std::abs(von_neumann(*rho) - shannon(diag)) > 1e-3);
    }
}

TEST_CASE("strong marginals are diagonal in the pointer basis") {
    for (double t : {0.4, 1.2, 2.8}) {
        const auto run = run_protocol(t, 1.0, 1.0);
        for (const DensityOp *rho : {&run.rho12, &run.rho23, &run.rho13}) {
            std::vector<double> diag(4);
            for (std::size_t i = 0; i < 4; ++i) {
                diag[i] = rho->mat()(i, i).real();
            }
            CHECK(von_neumann(*rho) == doctest::Approx(shannon(diag)).epsilon(1e-10));
        }
    }
}
