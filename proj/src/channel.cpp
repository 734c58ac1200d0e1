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

#include "fdnoma/channel.hpp"

#include <cmath>
#include <cstdio>

namespace fdnoma
{

namespace
{

void write_number(std::ostream& os, double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    os << buf;
}

} // namespace

void ChannelRealization::resize(const SystemParams& p)
{
    g_br.resize(p.m_b, p.m_r);
    g_su1.resize(p.m_b);
    g_ru1.resize(p.m_t);
    g_ru2.resize(p.m_t);
    g_si.resize(p.m_r, p.m_t);
}

StreamRng::StreamRng(RngSeed key, std::uint64_t domain) noexcept
    : state_(mix(key.seed + 0x632be59bd9b4e019ULL * (domain + 1)) ^ mix(key.stream ^ 0xd1b54a32d192ed03ULL))
{
}

double StreamRng::exponential(double mean) noexcept
{
    // fabs keeps U == 1 from producing -0.
    return mean * std::fabs(std::log(uniform_open_closed()));
}

void draw_into(const SystemParams& p, const MeanGains& gains, RngSeed seed, ChannelRealization& out)
{
    if (out.g_br.rows() != p.m_b || out.g_br.cols() != p.m_r || out.g_si.cols() != p.m_t)
        out.resize(p);

    StreamRng rng(seed);
    for (Eigen::Index i = 0; i < p.m_b; ++i)
        for (Eigen::Index j = 0; j < p.m_r; ++j)
            out.g_br(i, j) = rng.exponential(gains.lam_br);
    for (Eigen::Index i = 0; i < p.m_b; ++i)
        out.g_su1(i) = rng.exponential(gains.lam_su1);
    for (Eigen::Index k = 0; k < p.m_t; ++k)
        out.g_ru1(k) = rng.exponential(gains.lam_ru1);
    for (Eigen::Index k = 0; k < p.m_t; ++k)
        out.g_ru2(k) = rng.exponential(gains.lam_ru2);
    for (Eigen::Index j = 0; j < p.m_r; ++j)
        for (Eigen::Index k = 0; k < p.m_t; ++k)
            out.g_si(j, k) = rng.exponential(gains.lam_si);
}

ChannelRealization draw(const SystemParams& params, RngSeed seed)
{
    ChannelRealization real;
    real.resize(params);
    draw_into(params, mean_gains(params), seed, real);
    return real;
}

void write_realization_header(std::ostream& os, const SystemParams& p)
{
    os << "trial";
    for (int i = 0; i < p.m_b; ++i)
        for (int j = 0; j < p.m_r; ++j)
            os << ",g_br_" << i << '_' << j;
    for (int i = 0; i < p.m_b; ++i)
        os << ",g_su1_" << i;
    for (int k = 0; k < p.m_t; ++k)
        os << ",g_ru1_" << k;
    for (int k = 0; k < p.m_t; ++k)
        os << ",g_ru2_" << k;
    for (int j = 0; j < p.m_r; ++j)
        for (int k = 0; k < p.m_t; ++k)
            os << ",g_si_" << j << '_' << k;
    os << '\n';
}

void write_realization_row(std::ostream& os, std::uint64_t trial, const ChannelRealization& r)
{
    os << trial;
    auto put = [&os](double x) {
        os << ',';
        write_number(os, x);
    };
    for (Eigen::Index i = 0; i < r.g_br.rows(); ++i)
        for (Eigen::Index j = 0; j < r.g_br.cols(); ++j)
            put(r.g_br(i, j));
    for (double x : r.g_su1)
        put(x);
    for (double x : r.g_ru1)
        put(x);
    for (double x : r.g_ru2)
        put(x);
    for (Eigen::Index j = 0; j < r.g_si.rows(); ++j)
        for (Eigen::Index k = 0; k < r.g_si.cols(); ++k)
            put(r.g_si(j, k));
    os << '\n';
}

} // namespace fdnoma
