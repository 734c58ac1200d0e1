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

#include "fdnoma/sinr.hpp"

#include <algorithm>
#include <cmath>

namespace fdnoma
{

bool in_range(const AntennaChoice& c, const SystemParams& p)
{
    return c.i >= 0 && c.i < p.m_b && c.j >= 0 && c.j < p.m_r && c.k >= 0 && c.k < p.m_t;
}

double sinr_relay(const ChannelRealization& real, const AntennaChoice& c, const SystemParams& p)
{
    return superposed_sinr(p.a1, p.a2, real.g_br(c.i, c.j), real.g_si(c.j, c.k));
}

double sinr_u2_at_u1(const ChannelRealization& real, const AntennaChoice& c, const SystemParams& p)
{
    return superposed_sinr(p.a1, p.a2, real.g_su1(c.i), real.g_ru1(c.k));
}

double sinr_u1(const ChannelRealization& real, const AntennaChoice& c, const SystemParams& p)
{
    return p.a1 * real.g_su1(c.i) / (real.g_ru1(c.k) + 1.0);
}

double snr_u2(const ChannelRealization& real, const AntennaChoice& c, const SystemParams&) { return real.g_ru2(c.k); }

double e2e_sinr_u2(const ChannelRealization& real, const AntennaChoice& c, const SystemParams& p)
{
    return std::min({sinr_u2_at_u1(real, c, p), sinr_relay(real, c, p), snr_u2(real, c, p)});
}

SinrBundle sinr_bundle(const ChannelRealization& real, const AntennaChoice& c, const SystemParams& p)
{
    SinrBundle b{};
    b.gamma_r = sinr_relay(real, c, p);
    b.gamma_12 = sinr_u2_at_u1(real, c, p);
    b.gamma_1 = sinr_u1(real, c, p);
    b.gamma_ru2 = snr_u2(real, c, p);
    b.gamma_2 = std::min({b.gamma_12, b.gamma_r, b.gamma_ru2});
    return b;
}

UserRates instantaneous_rates(const SinrBundle& b) { return {std::log2(1.0 + b.gamma_1), std::log2(1.0 + b.gamma_2)}; }

} // namespace fdnoma
