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

#ifndef FDNOMA_SELECTION_HPP
#define FDNOMA_SELECTION_HPP

#include "fdnoma/channel.hpp"
#include "fdnoma/config.hpp"
#include "fdnoma/sinr.hpp"

namespace fdnoma
{

// All selectors see every channel (genie CSI). Ties go to the lowest index,
// lexicographically in (i, j, k) for the exhaustive searches.

// Strongest BS->U1 antenna and weakest relay->U1 antenna, then the relay
// receive antenna maximising the relay SINR including self-interference.
AntennaChoice select_max_u1(const ChannelRealization& real, const SystemParams& params);

// As select_max_u1, but the receive antenna only maximises g_br(i*, j).
AntennaChoice select_max_u1_analytic(const ChannelRealization& real, const SystemParams& params);

// Exhaustive argmax of the end-to-end U2 SINR.
AntennaChoice select_max_u2_exhaustive(const ChannelRealization& real, const SystemParams& params);

// Strongest relay->U2 antenna k*, the receive antenna j* with the weakest SI
// from k*, then the BS antenna with the strongest g_br(i, j*).
AntennaChoice select_max_u2_decoupled(const ChannelRealization& real, const SystemParams& params);

// Exhaustive argmax of log2(1 + gamma_1) + log2(1 + gamma_2).
AntennaChoice select_optimum_sumrate(const ChannelRealization& real, const SystemParams& params);

// Independent uniform indices; uses its own stream domain so the draws never
// alias the channel draws of the same (seed, trial).
AntennaChoice select_random(const ChannelRealization& real, const SystemParams& params, RngSeed seed);

AntennaChoice select(Scheme scheme, const ChannelRealization& real, const SystemParams& params, RngSeed seed);

} // namespace fdnoma

#endif // FDNOMA_SELECTION_HPP
