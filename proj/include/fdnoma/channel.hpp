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

#ifndef FDNOMA_CHANNEL_HPP
#define FDNOMA_CHANNEL_HPP

#include <cstdint>
#include <limits>
#include <ostream>

#include <Eigen/Dense>

#include "fdnoma/config.hpp"

namespace fdnoma
{

// Per-antenna power gains of one fading block. Every entry already includes
// the transmit SNR of the link, so each is exponential with the matching
// MeanGains mean.
struct ChannelRealization
{
    Eigen::MatrixXd g_br;  // m_b x m_r, (i, j): BS antenna i -> relay receive antenna j
    Eigen::VectorXd g_su1; // m_b, BS -> U1
    Eigen::VectorXd g_ru1; // m_t, relay -> U1 inter-user interference
    Eigen::VectorXd g_ru2; // m_t, relay -> U2
    Eigen::MatrixXd g_si;  // m_r x m_t, (j, k): relay transmit antenna k -> receive antenna j

    void resize(const SystemParams& params);
};

struct RngSeed
{
    std::uint64_t seed = 0;
    std::uint64_t stream = 0; // trial index
};

// SplitMix64 counter stream. Each (seed, stream, domain) triple gives an
// independent, reproducible sequence, so trials can run in any order.
class StreamRng
{
  public:
    using result_type = std::uint64_t;

    explicit StreamRng(RngSeed key, std::uint64_t domain = 0) noexcept;

    static constexpr result_type min() noexcept { return 0; }
    static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

    result_type operator()() noexcept
    {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // Uniform on (0, 1] with 53 random bits.
    double uniform_open_closed() noexcept { return static_cast<double>((operator()() >> 11) + 1) * 0x1.0p-53; }

    // Exponential with the given mean, -mean * ln(U).
    double exponential(double mean) noexcept;

    // Uniform index in [0, n) for n < 2^32, by multiply-shift of the top 32 bits.
    std::uint64_t index(std::uint64_t n) noexcept { return ((operator()() >> 32) * n) >> 32; }

    static std::uint64_t mix(std::uint64_t z) noexcept
    {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

  private:
    std::uint64_t state_;
};

// Draw order is fixed: g_br row-major (i outer, j inner), g_su1, g_ru1, g_ru2,
// then g_si row-major (j outer, k inner).
ChannelRealization draw(const SystemParams& params, RngSeed seed);
void draw_into(const SystemParams& params, const MeanGains& gains, RngSeed seed, ChannelRealization& out);

// Replay dump: one row per trial, columns trial, g_br_i_j..., g_su1_i...,
// g_ru1_k..., g_ru2_k..., g_si_j_k... in the draw order above.
void write_realization_header(std::ostream& os, const SystemParams& params);
void write_realization_row(std::ostream& os, std::uint64_t trial, const ChannelRealization& real);

} // namespace fdnoma

#endif // FDNOMA_CHANNEL_HPP
