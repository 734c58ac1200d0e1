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

#ifndef FDNOMA_CONFIG_HPP
#define FDNOMA_CONFIG_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fdnoma
{

// Model constants of the FD cooperative NOMA downlink.
//
// Noise variances at the relay and both users are normalised to one, so every
// power enters through the linear transmit SNRs rho_s and rho_r.
struct SystemParams
{
    int m_b = 4; // BS transmit antennas
    int m_r = 4; // relay receive antennas
    int m_t = 4; // relay transmit antennas

    double a1 = 0.25; // near-user power share
    double a2 = 0.75; // far-user power share

    double rho_s = 100.0; // linear BS transmit SNR
    double rho_r = 100.0; // linear relay transmit SNR

    double var_br = 1.0;  // BS -> relay
    double var_bu1 = 1.0; // BS -> U1
    double var_ru1 = 1.0; // relay -> U1 (scaled by k1 before use)
    double var_ru2 = 1.0; // relay -> U2
    double var_si = 0.3;  // residual self-interference

    double k1 = 0.01; // inter-user interference strength at U1

    double rate1 = 0.5; // target rate of U1, bits/s/Hz
    double rate2 = 0.5; // target rate of U2, bits/s/Hz

    bool operator==(const SystemParams&) const = default;
};

enum class ConfigErrc
{
    POWER_SPLIT_INVALID,
    ANTENNA_COUNT_INVALID,
    SNR_INVALID,
    VARIANCE_INVALID,
    INTERFERENCE_INVALID,
    RATE_INVALID,
    SWEEP_INVALID,
    PARSE_ERROR,
    UNKNOWN_KEY,
    IO_ERROR,
};

std::string_view to_string(ConfigErrc code);

class ConfigError : public std::runtime_error
{
  public:
    ConfigError(ConfigErrc code, const std::string& what);
    ConfigErrc code() const noexcept { return code_; }

  private:
    ConfigErrc code_;
};

// Returns `params` unchanged if every invariant holds, otherwise throws a
// ConfigError naming the first violated invariant.
SystemParams validate(const SystemParams& params);

// Means of the exponential per-antenna power gains.
struct MeanGains
{
    double lam_br;  // rho_s * var_br
    double lam_su1; // rho_s * var_bu1
    double lam_ru1; // rho_r * k1 * var_ru1
    double lam_ru2; // rho_r * var_ru2
    double lam_si;  // rho_r * var_si
};

MeanGains mean_gains(const SystemParams& params);

double db_to_linear(double db);

// Target-rate SINR thresholds 2^R - 1.
double rate_threshold(double rate_bits);

// Which transmit SNR a sweep power point drives.
enum class PowerTarget
{
    joint,
    rho_s,
    rho_r,
};

SystemParams with_power_db(SystemParams params, double power_db, PowerTarget target = PowerTarget::joint);

// Reference setup: four antennas everywhere, a1 = 0.25, k1 = 0.01, residual
// SI variance 0.3, unit link variances and 0.5 bits/s/Hz target rates.
SystemParams reference_params(double power_db = 20.0);

enum class Scheme
{
    max_u1,
    max_u1_analytic,
    max_u2_exhaustive,
    max_u2_decoupled,
    optimum_sumrate,
    random,
};

inline constexpr Scheme all_schemes[] = {Scheme::max_u1,           Scheme::max_u1_analytic,
                                         Scheme::max_u2_exhaustive, Scheme::max_u2_decoupled,
                                         Scheme::optimum_sumrate,   Scheme::random};

std::string_view to_string(Scheme scheme);
Scheme parse_scheme(std::string_view name);

enum class Metric
{
    rate_u1,
    rate_u2,
    rate_sum,
    outage_u1,
    outage_u2,
    jain,
};

inline constexpr Metric all_metrics[] = {Metric::rate_u1,   Metric::rate_u2,   Metric::rate_sum,
                                         Metric::outage_u1, Metric::outage_u2, Metric::jain};

std::string_view to_string(Metric metric);
Metric parse_metric(std::string_view name);

PowerTarget parse_power_target(std::string_view name);

struct SweepSpec
{
    std::vector<double> power_db{0.0, 5.0, 10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0, 45.0, 50.0};
    std::vector<Scheme> schemes{std::begin(all_schemes), std::end(all_schemes)};
    std::vector<Metric> metrics{std::begin(all_metrics), std::end(all_metrics)};
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    PowerTarget target = PowerTarget::joint;
};

void validate(const SweepSpec& sweep);

// Parses "start:stop:step" (inclusive) or a comma separated list of dB values.
std::vector<double> parse_power_grid(std::string_view text);

struct LoadedConfig
{
    SystemParams params;
    SweepSpec sweep;
};

// Flat `key = value` text, `#` starts a comment. rho_s and rho_r are in dB;
// every other value is linear. Sweep keys (power, schemes, metrics, trials,
// seed, power_target) are optional.
LoadedConfig parse_config(std::string_view text);
LoadedConfig load_config(const std::filesystem::path& path);

} // namespace fdnoma

#endif // FDNOMA_CONFIG_HPP
