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

#include "fdnoma/selection.hpp"

#include <cmath>

namespace fdnoma
{

namespace
{

constexpr std::uint64_t random_selection_domain = 1;

// First stage shared by both max-U1 variants: a1 g_su1(i) / (g_ru1(k) + 1) is
// separable, increasing in g_su1 and decreasing in g_ru1.
AntennaChoice near_user_stage(const ChannelRealization& real)
{
    AntennaChoice c;
    real.g_su1.maxCoeff(&c.i);
    real.g_ru1.minCoeff(&c.k);
    return c;
}

} // namespace

AntennaChoice select_max_u1(const ChannelRealization& real, const SystemParams& p)
{
    AntennaChoice c = near_user_stage(real);
    double best = -1.0;
    for (Eigen::Index j = 0; j < p.m_r; ++j)
    {
        const double gamma = superposed_sinr(p.a1, p.a2, real.g_br(c.i, j), real.g_si(j, c.k));
        if (gamma > best)
        {
            best = gamma;
            c.j = j;
        }
    }
    return c;
}

AntennaChoice select_max_u1_analytic(const ChannelRealization& real, const SystemParams&)
{
    AntennaChoice c = near_user_stage(real);
    real.g_br.row(c.i).maxCoeff(&c.j);
    return c;
}

AntennaChoice select_max_u2_exhaustive(const ChannelRealization& real, const SystemParams& p)
{
    AntennaChoice best_choice;
    double best = -1.0;
    for (Eigen::Index i = 0; i < p.m_b; ++i)
        for (Eigen::Index j = 0; j < p.m_r; ++j)
            for (Eigen::Index k = 0; k < p.m_t; ++k)
            {
                const AntennaChoice c{i, j, k};
                const double gamma = e2e_sinr_u2(real, c, p);
                if (gamma > best)
                {
                    best = gamma;
                    best_choice = c;
                }
            }
    return best_choice;
}

AntennaChoice select_max_u2_decoupled(const ChannelRealization& real, const SystemParams&)
{
    AntennaChoice c;
    real.g_ru2.maxCoeff(&c.k);
    real.g_si.col(c.k).minCoeff(&c.j);
    real.g_br.col(c.j).maxCoeff(&c.i);
    return c;
}

AntennaChoice select_optimum_sumrate(const ChannelRealization& real, const SystemParams& p)
{
    AntennaChoice best_choice;
    double best = -1.0;
    for (Eigen::Index i = 0; i < p.m_b; ++i)
        for (Eigen::Index j = 0; j < p.m_r; ++j)
            for (Eigen::Index k = 0; k < p.m_t; ++k)
            {
                const AntennaChoice c{i, j, k};
                const double sum = instantaneous_rates(sinr_bundle(real, c, p)).sum();
                if (sum > best)
                {
                    best = sum;
                    best_choice = c;
                }
            }
    return best_choice;
}

AntennaChoice select_random(const ChannelRealization&, const SystemParams& p, RngSeed seed)
{
    StreamRng rng(seed, random_selection_domain);
    AntennaChoice c;
    c.i = static_cast<Eigen::Index>(rng.index(static_cast<std::uint64_t>(p.m_b)));
    c.j = static_cast<Eigen::Index>(rng.index(static_cast<std::uint64_t>(p.m_r)));
    c.k = static_cast<Eigen::Index>(rng.index(static_cast<std::uint64_t>(p.m_t)));
    return c;
}

AntennaChoice select(Scheme scheme, const ChannelRealization& real, const SystemParams& p, RngSeed seed)
{
    switch (scheme)
    {
    case Scheme::max_u1: return select_max_u1(real, p);
    case Scheme::max_u1_analytic: return select_max_u1_analytic(real, p);
    case Scheme::max_u2_exhaustive: return select_max_u2_exhaustive(real, p);
    case Scheme::max_u2_decoupled: return select_max_u2_decoupled(real, p);
    case Scheme::optimum_sumrate: return select_optimum_sumrate(real, p);
    case Scheme::random: return select_random(real, p, seed);
    }
    return {};
}

} // namespace fdnoma
