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

#include "doctest.h"
#include "lgsim/error.hpp"
#include "lgsim/lgineq.hpp"
#include "lgsim/measure.hpp"
#include "oracles.hpp"

using namespace lgsim;
using std::numbers::pi;

TEST_CASE("outcome distributions") {
    const auto p0 = outcome_distribution(run_protocol(0.0, 0.0, 1.0).rho123);
    CHECK(p0[0] == doctest::Approx(0.5));
    CHECK(p0[7] == doctest::Approx(0.5));
    const auto pu = outcome_distribution(run_protocol(pi / 2, pi / 2, 1.0).rho123);
    for (double v : pu) {
        CHECK(v == doctest::Approx(0.125).epsilon(1e-12));
    }
    const auto pw = outcome_distribution(run_protocol(0.7, 1.9, 0.0).rho123);
    double total = 0.0;
    for (unsigned i = 0; i < 8; ++i) {
        total += pw[i];
        if (i & 2) {
            CHECK(std::abs(pw[i]) < 1e-15);
        }
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("strong correlators follow the basis angles") {
    for (double t1 : {0.0, 0.6, 1.7, pi}) {
        for (double t2 : {0.0, 0.9, 2.4}) {
            const auto k = correlators(run_protocol(t1, t2, 1.0).rho123);
            CHECK(k.K12 == doctest::Approx(std::cos(t1)).epsilon(1e-12));
            CHECK(k.K23 == doctest::Approx(std::cos(t2)).epsilon(1e-12));
            CHECK(std::abs(k.K13 - std::cos(t1) * std::cos(t2)) < 1e-12);
        }
    }
    const auto k0 = correlators(run_protocol(0.0, 0.0, 1.0).rho123);
    CHECK(k0.K12 == doctest::Approx(1.0));
    CHECK(k0.K23 == doctest::Approx(1.0));
    CHECK(k0.K13 == doctest::Approx(1.0));
}

TEST_CASE("standard inequality combinations") {
    const auto a = standard_lg({1, 1, 1});
    CHECK(a.B1 == 1.0);
    CHECK(a.B2 == 1.0);
    CHECK(a.B3 == 1.0);
    CHECK(a.B4 == 4.0);
    CHECK(standard_lg({0.5, 0.5, 0.25}).B1 == doctest::Approx(0.75));
    CHECK(standard_lg({-1, -1, 1}).B1 == doctest::Approx(-3.0));
}

TEST_CASE("entropic inequality combinations") {
    const auto a = entropic_lg(1, 1, 1);
    CHECK(a.B1s == 1.0);
    CHECK(a.B2s == 1.0);
    CHECK(a.B3s == 1.0);
    CHECK(entropic_lg(1.8112781, 1.8112781, 1.9544340).B1s == doctest::Approx(1.6681222).epsilon(1e-7));
    CHECK(entropic_lg(2, 2, 2).B1s == 2.0);
    CHECK(weak_entropic_lg(1, 1, 2, 0) == 0.0);
    CHECK(weak_entropic_lg(1, 1, 1, 0) == 1.0);
}

TEST_CASE("closed-form entropies") {
    const double strong = 1.0 + oracle::h2(0.75);
    CHECK(oracle_entropies(pi / 3, 0.5, 1.0).S12 == doctest::Approx(strong).epsilon(1e-14));
    CHECK(strong == doctest::Approx(1.8112781).epsilon(1e-7));

    const auto zero = oracle_entropies(0.8, 1.3, 0.0);
    CHECK(zero.S12 == doctest::Approx(1.0));
    CHECK(zero.S23 == doctest::Approx(1.0));
    CHECK(std::abs(zero.S2) < 1e-15);
    const double c = std::cos((0.8 + 1.3) / 2);
    CHECK(zero.S13 == doctest::Approx(1.0 + oracle::h2(c * c)).epsilon(1e-14));

    for (double eps : {0.0, 0.3, 0.8, 1.0}) {
        const auto o = oracle_entropies(1.1, 2.3, eps);
        CHECK(o.S12 == doctest::Approx(oracle::S12(1.1, eps)).epsilon(1e-14));
        CHECK(o.S23 == doctest::Approx(oracle::S23(2.3, eps)).epsilon(1e-14));
        CHECK(o.S13 == doctest::Approx(oracle::S13(1.1, 2.3, eps)).epsilon(1e-14));
        CHECK(o.S2 == doctest::Approx(oracle::S2(eps)).epsilon(1e-14));
    }
    CHECK_THROWS_AS(oracle_entropies(0.1, 0.1, 1.2), Error);
}

TEST_CASE("closed-form strong state") {
    const auto m = oracle_rho123(0.9, 2.1);
    const auto expect = oracle::strong_rho123(0.9, 2.1);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            CHECK(std::abs(m(i, j) - expect[i][j]) < 1e-15);
        }
    }
}

TEST_CASE("comparator without the middle measurement") {
    const auto q = no_middle_comparator(pi / 4, pi / 4);
    CHECK(q.naive_S13 == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(std::abs(q.naive_K13) < 1e-15);
    const auto back = no_middle_comparator(0.7, -0.7);
    CHECK(back.naive_K13 == doctest::Approx(1.0));
    CHECK(back.naive_S13 == doctest::Approx(1.0));
}

TEST_CASE("evaluate_point examples") {
    const auto a = evaluate_point(pi / 3, pi / 3, 1.0);
    CHECK(a.B1s == doctest::Approx(1.6681222).epsilon(1e-7));
    CHECK(a.B1 == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(a.B1p == doctest::Approx(0.6681222).epsilon(1e-7));
    CHECK(a.B1p == doctest::Approx(a.B1s - 1.0).epsilon(1e-12));
    CHECK(a.S13 == doctest::Approx(1.0 + oracle::h2(0.625)).epsilon(1e-12));
    CHECK(a.consistent);

    const auto b = evaluate_point(pi / 4, pi / 4, 0.0);
    CHECK(std::abs(b.B1s) < 1e-9);
    CHECK(std::abs(b.B1p) < 1e-9);
    CHECK(b.naive_B1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

    const auto c = evaluate_point(0.0, 0.0, 1.0);
    CHECK(c.B1 == doctest::Approx(1.0));
    CHECK(c.B2 == doctest::Approx(1.0));
    CHECK(c.B3 == doctest::Approx(1.0));
    CHECK(c.B4 == doctest::Approx(4.0));
    CHECK(c.B1s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.B2s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(c.B3s == doctest::Approx(1.0).epsilon(1e-12));

    const auto d = evaluate_point(0.9, -0.9, 0.0);
    CHECK(d.B1p == doctest::Approx(1.0).epsilon(1e-9));
    CHECK_THROWS_AS(evaluate_point(0.1, 0.1, -0.5), Error);
}

TEST_CASE("symmetric-angle identities") {
    for (double t : {0.3, 1.0, 1.9, 2.6}) {
        const auto r = evaluate_point(t, t, 1.0);
        const double c2 = std::pow(std::cos(t / 2), 2), s2 = std::pow(std::sin(t / 2), 2);
        const double h4 = oracle::h2(c2 * c2 + s2 * s2);
        CHECK(r.B1s - 1.0 == doctest::Approx(2.0 * oracle::h2(c2) - h4).epsilon(1e-10));
        CHECK(r.B2s - 1.0 == doctest::Approx(h4).epsilon(1e-10));
        CHECK(r.B3s - 1.0 == doctest::Approx(h4).epsilon(1e-10));
    }
}

TEST_CASE("Venn identities with the inequality families") {
    const auto r = evaluate_point(0.8, 2.2, 0.45);
    CHECK(r.B1s - r.S2 == doctest::Approx(r.venn.solo[1] + r.venn.pair_cond[1]).epsilon(1e-10));
    CHECK(r.B2s - r.S1 == doctest::Approx(r.venn.solo[0] + r.venn.pair_cond[2]).epsilon(1e-10));
    CHECK(r.B3s - r.S3 == doctest::Approx(r.venn.solo[2] + r.venn.pair_cond[0]).epsilon(1e-10));
}
