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

#ifndef FDNOMA_SINR_HPP
#define FDNOMA_SINR_HPP

#include <Eigen/Core>

#include "fdnoma/channel.hpp"
#include "fdnoma/config.hpp"

namespace fdnoma
{

// Selected BS transmit antenna i, relay receive antenna j and relay transmit
// antenna k (zero based).
struct AntennaChoice
{
    Eigen::Index i = 0;
    Eigen::Index j = 0;
    Eigen::Index k = 0;

    bool operator==(const AntennaChoice&) const = default;
};

bool in_range(const AntennaChoice& choice, const SystemParams& params);

struct SinrBundle
{
    double gamma_r;   // relay decoding x2 with x1 as interference
    double gamma_12;  // U1 decoding x2 (first SIC stage)
    double gamma_1;   // U1 own signal after SIC
    double gamma_ru2; // relay -> U2
    double gamma_2;   // end-to-end at U2: min(gamma_12, gamma_r, gamma_ru2)
};

// a2 g / (a1 g + s + 1), the common shape of the relay and U1 first-stage
// SINRs. Strictly below a2/a1 for every finite g.
inline double superposed_sinr(double a1, double a2, double signal, double interference)
{
    return a2 * signal / (a1 * signal + interference + 1.0);
}

double sinr_relay(const ChannelRealization& real, const AntennaChoice& choice, const SystemParams& params);
double sinr_u2_at_u1(const ChannelRealization& real, const AntennaChoice& choice, const SystemParams& params);
double sinr_u1(const ChannelRealization& real, const AntennaChoice& choice, const SystemParams& params);
double snr_u2(const ChannelRealization& real, const AntennaChoice& choice, const SystemParams& params);
double e2e_sinr_u2(const ChannelRealization& real, const AntennaChoice& choice, const SystemParams& params);

SinrBundle sinr_bundle(const ChannelRealization& real, const AntennaChoice& choice, const SystemParams& params);

struct UserRates
{
    double u1; // log2(1 + gamma_1)
    double u2; // log2(1 + gamma_2)

    double sum() const { return u1 + u2; }
};

UserRates instantaneous_rates(const SinrBundle& bundle);

} // namespace fdnoma

#endif // FDNOMA_SINR_HPP
