// SPDX-License-Identifier: Apache-2.0
//
// fdnoma: antenna selection analysis for full-duplex cooperative NOMA relaying
// Copyright (C) 2026 The fdnoma authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include <catch_amalgamated.hpp>

#include <set>
#include <tuple>

#include "fdnoma/selection.hpp"
#include "support.hpp"

using namespace fdnoma;

namespace
{

// Independent enumeration oracles: plain loops over every triple, strict
// improvement only, so ties stay at the first triple in (i, j, k) order.
template <typename Objective>
AntennaChoice enumerate(const SystemParams& p, Objective objective)
{
    AntennaChoice best{0, 0, 0};
    double best_value = objective(best);
    for (int i = 0; i < p.m_b; ++i)
        for (int j = 0; j < p.m_r; ++j)
            for (int k = 0; k < p.m_t; ++k)
            {
                const AntennaChoice c{i, j, k};
                const double v = objective(c);
                if (v > best_value)
                {
                    best_value = v;
                    best = c;
                }
            }
    return best;
}

double oracle_gamma2(const ChannelRealization& r, const AntennaChoice& c, const SystemParams& p)
{
    const double gr = p.a2 * r.g_br(c.i, c.j) / (p.a1 * r.g_br(c.i, c.j) + r.g_si(c.j, c.k) + 1.0);
    const double x = r.g_su1(c.i) / (r.g_ru1(c.k) + 1.0);
    const double g12 = p.a2 * x / (p.a1 * x + 1.0);
    return std::min({gr, g12, r.g_ru2(c.k)});
}

double oracle_sum_rate(const ChannelRealization& r, const AntennaChoice& c, const SystemParams& p)
{
    const double g1 = p.a1 * r.g_su1(c.i) / (r.g_ru1(c.k) + 1.0);
    return std::log2(1.0 + g1) + std::log2(1.0 + oracle_gamma2(r, c, p));
}

} // namespace

TEST_CASE("max_u1 picks the separable argmax and argmin", "[selection]")
{
    const SystemParams p = test::dims(3, 2, 2);
    ChannelRealization r = test::zeros(p);
    r.g_su1 << 1.0, 5.0, 2.0;
    r.g_ru1 << 3.0, 0.1;
    r.g_br.setOnes();
    r.g_br(1, 1) = 4.0;
    const AntennaChoice c = select_max_u1(r, p);
    CHECK(c.i == 1);
    CHECK(c.k == 1);
    CHECK(c.j == 1);

    r.g_ru1.setConstant(0.7);
    CHECK(select_max_u1(r, p).k == 0);
}

TEST_CASE("max_u1 receive antenna accounts for self-interference", "[selection]")
{
    const SystemParams p = test::dims(1, 2, 1);
    ChannelRealization r = test::zeros(p);
    r.g_su1 << 1.0;
    r.g_br << 10.0, 8.0;
    r.g_si << 50.0, 0.0;
    CHECK(select_max_u1(r, p).j == 1);
    CHECK(select_max_u1_analytic(r, p).j == 0);

    // Without SI both variants coincide.
    r.g_si.setZero();
    CHECK(select_max_u1(r, p) == select_max_u1_analytic(r, p));
}

TEST_CASE("max_u1_analytic receive stage is a plain argmax", "[selection]")
{
    const SystemParams p = test::dims(1, 3, 1);
    ChannelRealization r = test::zeros(p);
    r.g_br << 1.0, 9.0, 4.0;
    CHECK(select_max_u1_analytic(r, p).j == 1);
}

TEST_CASE("max_u1 matches a two-stage enumeration", "[selection]")
{
    test::Gen gen(5);
    for (int n = 0; n < 10'000; ++n)
    {
        const SystemParams p = gen.params();
        const ChannelRealization r = gen.realization(p);
        const AntennaChoice c = select_max_u1(r, p);
        const AntennaChoice a = select_max_u1_analytic(r, p);

        // First stage: argmax over (i, k) of a1 g_su1 / (g_ru1 + 1).
        const AntennaChoice first = enumerate(p, [&](const AntennaChoice& t) {
            return t.j == 0 ? p.a1 * r.g_su1(t.i) / (r.g_ru1(t.k) + 1.0) : -1.0;
        });
        REQUIRE(c.i == first.i);
        REQUIRE(c.k == first.k);
        REQUIRE(a.i == c.i);
        REQUIRE(a.k == c.k);

        // Second stage: argmax over j of the relay SINR for fixed (i*, k*).
        const AntennaChoice second = enumerate(p, [&](const AntennaChoice& t) {
            if (t.i != c.i || t.k != c.k)
                return -1.0;
            return p.a2 * r.g_br(t.i, t.j) / (p.a1 * r.g_br(t.i, t.j) + r.g_si(t.j, t.k) + 1.0);
        });
        REQUIRE(c.j == second.j);
    }
}

TEST_CASE("single antenna everywhere leaves one choice", "[selection]")
{
    const SystemParams p = test::dims(1, 1, 1);
    test::Gen gen(9);
    const ChannelRealization r = gen.realization(p);
    for (Scheme s : all_schemes)
        CHECK(select(s, r, p, {1, 0}) == AntennaChoice{0, 0, 0});
}

TEST_CASE("exhaustive U2 search ties to the first triple", "[selection]")
{
    const SystemParams p = test::dims(3, 3, 3);
    test::Gen gen(10);
    ChannelRealization r = gen.realization(p);
    r.g_ru2.setZero();
    CHECK(select_max_u2_exhaustive(r, p) == AntennaChoice{0, 0, 0});
}

TEST_CASE("decoupled U2 selection", "[selection]")
{
    const SystemParams p = test::dims(2, 3, 2);
    ChannelRealization r = test::zeros(p);
    r.g_ru2 << 1.0, 7.0;
    r.g_si.col(0) << 0.0, 0.0, 0.0;
    r.g_si.col(1) << 5.0, 0.2, 3.0;
    r.g_br << 1.0, 2.0, 3.0,
              4.0, 0.5, 6.0;
    const AntennaChoice c = select_max_u2_decoupled(r, p);
    CHECK(c.k == 1);
    CHECK(c.j == 1);
    CHECK(c.i == 0);
}

TEST_CASE("decoupled against exhaustive with one relay antenna per side", "[selection]")
{
    // With m_r = m_t = 1 only i is free. The decoupled rule maximises the
    // relay SINR over i; it matches the exhaustive search whenever the U1
    // decoding stage is not the bottleneck at its choice, and always for m_b = 1.
    test::Gen gen(11);
    int unconstrained = 0;
    for (int m_b = 1; m_b <= 4; ++m_b)
        for (int n = 0; n < 2'000; ++n)
        {
            SystemParams p = gen.params();
            p.m_b = m_b;
            p.m_r = 1;
            p.m_t = 1;
            const ChannelRealization r = gen.realization(p);
            const AntennaChoice dc = select_max_u2_decoupled(r, p);
            const double d = e2e_sinr_u2(r, dc, p);
            const double e = e2e_sinr_u2(r, select_max_u2_exhaustive(r, p), p);
            REQUIRE(d <= e);

            double best_relay = 0.0;
            for (int i = 0; i < m_b; ++i)
                best_relay = std::max(best_relay, sinr_relay(r, {i, 0, 0}, p));
            REQUIRE(sinr_relay(r, dc, p) == best_relay);

            const SinrBundle b = sinr_bundle(r, dc, p);
            if (m_b == 1 || b.gamma_12 >= std::min(b.gamma_r, b.gamma_ru2))
            {
                ++unconstrained;
                REQUIRE(d == e);
            }
        }
    CHECK(unconstrained > 2'000);
}

TEST_CASE("exhaustive searches match independent enumeration", "[selection]")
{
    test::Gen gen(12);
    for (int n = 0; n < 10'000; ++n)
    {
        SystemParams p = gen.params();
        p.m_b = p.m_r = p.m_t = 4;
        const ChannelRealization r = gen.realization(p);

        const AntennaChoice u2 = select_max_u2_exhaustive(r, p);
        const AntennaChoice u2_oracle = enumerate(p, [&](const AntennaChoice& c) { return oracle_gamma2(r, c, p); });
        REQUIRE(oracle_gamma2(r, u2, p) == oracle_gamma2(r, u2_oracle, p));

        const AntennaChoice sum = select_optimum_sumrate(r, p);
        const AntennaChoice sum_oracle = enumerate(p, [&](const AntennaChoice& c) { return oracle_sum_rate(r, c, p); });
        REQUIRE(oracle_sum_rate(r, sum, p) == Catch::Approx(oracle_sum_rate(r, sum_oracle, p)).epsilon(1e-14));
    }
}

TEST_CASE("per-realization dominance chain", "[selection]")
{
    test::Gen gen(13);
    for (int n = 0; n < 20'000; ++n)
    {
        const SystemParams p = gen.params();
        const ChannelRealization r = gen.realization(p);
        const RngSeed seed{13, static_cast<std::uint64_t>(n)};

        const double best_sum = instantaneous_rates(sinr_bundle(r, select_optimum_sumrate(r, p), p)).sum();
        const double best_gamma1 = sinr_u1(r, select_max_u1(r, p), p);
        const double exhaustive_gamma2 = e2e_sinr_u2(r, select_max_u2_exhaustive(r, p), p);
        for (Scheme s : all_schemes)
        {
            const AntennaChoice c = select(s, r, p, seed);
            REQUIRE(in_range(c, p));
            REQUIRE(best_sum >= instantaneous_rates(sinr_bundle(r, c, p)).sum());
            REQUIRE(best_gamma1 >= sinr_u1(r, c, p));
            REQUIRE(exhaustive_gamma2 >= e2e_sinr_u2(r, c, p));
        }
    }
}

TEST_CASE("max_u1 first stage is invariant to group scaling", "[selection]")
{
    test::Gen gen(14);
    for (int n = 0; n < 5'000; ++n)
    {
        const SystemParams p = gen.params();
        const ChannelRealization r = gen.realization(p);
        const AntennaChoice c = select_max_u1(r, p);
        const double scale = gen.log_uniform(1e-3, 1e3);

        ChannelRealization s = r;
        s.g_su1 *= scale;
        REQUIRE(select_max_u1(s, p).i == c.i);
        REQUIRE(select_max_u1(s, p).k == c.k);

        s = r;
        s.g_ru1 *= scale;
        REQUIRE(select_max_u1(s, p).i == c.i);
        REQUIRE(select_max_u1(s, p).k == c.k);
    }
}

TEST_CASE("random selection is reproducible, in range and covers every triple", "[selection]")
{
    const SystemParams p = test::dims(2, 3, 2);
    test::Gen gen(15);
    const ChannelRealization r = gen.realization(p);

    CHECK(select_random(r, p, {8, 100}) == select_random(r, p, {8, 100}));

    std::set<std::tuple<Eigen::Index, Eigen::Index, Eigen::Index>> seen;
    bool differs = false;
    const AntennaChoice first = select_random(r, p, {8, 0});
    for (std::uint64_t t = 0; t < 2'000; ++t)
    {
        const AntennaChoice c = select_random(r, p, {8, t});
        REQUIRE(in_range(c, p));
        seen.emplace(c.i, c.j, c.k);
        differs = differs || !(c == first);
    }
    CHECK(differs);
    CHECK(seen.size() == 12);
}
