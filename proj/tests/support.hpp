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

#ifndef FDNOMA_TESTS_SUPPORT_HPP
#define FDNOMA_TESTS_SUPPORT_HPP

#include <random>

#include "fdnoma/channel.hpp"
#include "fdnoma/config.hpp"

namespace fdnoma::test
{

// Independent generator for property tests: std::mt19937_64 instead of the
// library stream, so a bug in the production RNG cannot hide itself.
class Gen
{
  public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    double exponential(double mean) { return mean > 0.0 ? std::exponential_distribution<double>(1.0 / mean)(engine_) : 0.0; }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

    SystemParams params()
    {
        SystemParams p;
        p.m_b = integer(1, 5);
        p.m_r = integer(1, 5);
        p.m_t = integer(1, 5);
        p.a1 = uniform(0.05, 0.45);
        p.a2 = 1.0 - p.a1;
        p.rho_s = db_to_linear(uniform(-5.0, 40.0));
        p.rho_r = db_to_linear(uniform(-5.0, 40.0));
        p.var_br = uniform(0.2, 2.0);
        p.var_bu1 = uniform(0.2, 2.0);
        p.var_ru1 = uniform(0.2, 2.0);
        p.var_ru2 = uniform(0.2, 2.0);
        p.var_si = uniform(0.01, 1.0);
        p.k1 = uniform(0.0, 0.2);
        p.rate1 = uniform(0.1, 1.5);
        p.rate2 = uniform(0.1, 1.5);
        return p;
    }

    ChannelRealization realization(const SystemParams& p)
    {
        const MeanGains g = mean_gains(p);
        ChannelRealization r;
        r.resize(p);
        for (Eigen::Index i = 0; i < r.g_br.rows(); ++i)
            for (Eigen::Index j = 0; j < r.g_br.cols(); ++j)
                r.g_br(i, j) = exponential(g.lam_br);
        for (Eigen::Index i = 0; i < r.g_su1.size(); ++i)
            r.g_su1(i) = exponential(g.lam_su1);
        for (Eigen::Index k = 0; k < r.g_ru1.size(); ++k)
            r.g_ru1(k) = exponential(g.lam_ru1);
        for (Eigen::Index k = 0; k < r.g_ru2.size(); ++k)
            r.g_ru2(k) = exponential(g.lam_ru2);
        for (Eigen::Index j = 0; j < r.g_si.rows(); ++j)
            for (Eigen::Index k = 0; k < r.g_si.cols(); ++k)
                r.g_si(j, k) = exponential(g.lam_si);
        return r;
    }

    std::mt19937_64& engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
};

inline SystemParams dims(int m_b, int m_r, int m_t)
{
    SystemParams p;
    p.m_b = m_b;
    p.m_r = m_r;
    p.m_t = m_t;
    return p;
}

inline ChannelRealization zeros(const SystemParams& p)
{
    ChannelRealization r;
    r.resize(p);
    r.g_br.setZero();
    r.g_su1.setZero();
    r.g_ru1.setZero();
    r.g_ru2.setZero();
    r.g_si.setZero();
    return r;
}

} // namespace fdnoma::test

#endif // FDNOMA_TESTS_SUPPORT_HPP
