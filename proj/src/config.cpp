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

#include "fdnoma/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

namespace fdnoma
{

namespace
{

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos)
        return {};
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep)
{
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (true)
    {
        const auto next = s.find(sep, pos);
        out.push_back(trim(s.substr(pos, next - pos)));
        if (next == std::string_view::npos)
            break;
        pos = next + 1;
    }
    return out;
}

double parse_double(std::string_view text, std::string_view key)
{
    text = trim(text);
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError(ConfigErrc::PARSE_ERROR,
                          "cannot parse '" + std::string(text) + "' as a number for key '" + std::string(key) + "'");
    return value;
}

template <typename Int>
Int parse_integer(std::string_view text, std::string_view key)
{
    text = trim(text);
    Int value{};
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end || text.empty())
        throw ConfigError(ConfigErrc::PARSE_ERROR,
                          "cannot parse '" + std::string(text) + "' as an integer for key '" + std::string(key) + "'");
    return value;
}

bool positive(double x) { return std::isfinite(x) && x > 0.0; }

} // namespace

std::string_view to_string(ConfigErrc code)
{
    switch (code)
    {
    case ConfigErrc::POWER_SPLIT_INVALID: return "POWER_SPLIT_INVALID";
    case ConfigErrc::ANTENNA_COUNT_INVALID: return "ANTENNA_COUNT_INVALID";
    case ConfigErrc::SNR_INVALID: return "SNR_INVALID";
    case ConfigErrc::VARIANCE_INVALID: return "VARIANCE_INVALID";
    case ConfigErrc::INTERFERENCE_INVALID: return "INTERFERENCE_INVALID";
    case ConfigErrc::RATE_INVALID: return "RATE_INVALID";
    case ConfigErrc::SWEEP_INVALID: return "SWEEP_INVALID";
    case ConfigErrc::PARSE_ERROR: return "PARSE_ERROR";
    case ConfigErrc::UNKNOWN_KEY: return "UNKNOWN_KEY";
    case ConfigErrc::IO_ERROR: return "IO_ERROR";
    }
    return "UNKNOWN";
}

ConfigError::ConfigError(ConfigErrc code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code)
{
}

SystemParams validate(const SystemParams& p)
{
    if (p.m_b < 1 || p.m_r < 1 || p.m_t < 1)
        throw ConfigError(ConfigErrc::ANTENNA_COUNT_INVALID, "antenna counts must be >= 1");
    if (!std::isfinite(p.a1) || !std::isfinite(p.a2) || std::abs(p.a1 + p.a2 - 1.0) > 1e-12)
        throw ConfigError(ConfigErrc::POWER_SPLIT_INVALID, "a1 + a2 must equal 1");
    if (!(p.a1 > 0.0) || !(p.a1 < p.a2))
        throw ConfigError(ConfigErrc::POWER_SPLIT_INVALID, "power split requires 0 < a1 < a2");
    if (!positive(p.rho_s) || !positive(p.rho_r))
        throw ConfigError(ConfigErrc::SNR_INVALID, "rho_s and rho_r must be positive");
    if (!positive(p.var_br) || !positive(p.var_bu1) || !positive(p.var_ru1) || !positive(p.var_ru2) ||
        !positive(p.var_si))
        throw ConfigError(ConfigErrc::VARIANCE_INVALID, "channel variances must be positive");
    if (!std::isfinite(p.k1) || p.k1 < 0.0)
        throw ConfigError(ConfigErrc::INTERFERENCE_INVALID, "k1 must be >= 0");
    if (!positive(p.rate1) || !positive(p.rate2))
        throw ConfigError(ConfigErrc::RATE_INVALID, "target rates must be positive");
    return p;
}

MeanGains mean_gains(const SystemParams& p)
{
    return MeanGains{
        .lam_br = p.rho_s * p.var_br,
        .lam_su1 = p.rho_s * p.var_bu1,
        .lam_ru1 = p.rho_r * p.k1 * p.var_ru1,
        .lam_ru2 = p.rho_r * p.var_ru2,
        .lam_si = p.rho_r * p.var_si,
    };
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double rate_threshold(double rate_bits) { return std::expm1(rate_bits * std::log(2.0)); }

SystemParams with_power_db(SystemParams params, double power_db, PowerTarget target)
{
    const double linear = db_to_linear(power_db);
    if (target != PowerTarget::rho_r)
        params.rho_s = linear;
    if (target != PowerTarget::rho_s)
        params.rho_r = linear;
    return params;
}

SystemParams reference_params(double power_db) { return with_power_db(SystemParams{}, power_db); }

std::string_view to_string(Scheme scheme)
{
    switch (scheme)
    {
    case Scheme::max_u1: return "max_u1";
    case Scheme::max_u1_analytic: return "max_u1_analytic";
    case Scheme::max_u2_exhaustive: return "max_u2_exhaustive";
    case Scheme::max_u2_decoupled: return "max_u2_decoupled";
    case Scheme::optimum_sumrate: return "optimum_sumrate";
    case Scheme::random: return "random";
    }
    return "unknown";
}

Scheme parse_scheme(std::string_view name)
{
    for (Scheme s : all_schemes)
        if (to_string(s) == name)
            return s;
    throw ConfigError(ConfigErrc::SWEEP_INVALID, "unknown scheme '" + std::string(name) + "'");
}

std::string_view to_string(Metric metric)
{
    switch (metric)
    {
    case Metric::rate_u1: return "rate_u1";
    case Metric::rate_u2: return "rate_u2";
    case Metric::rate_sum: return "rate_sum";
    case Metric::outage_u1: return "outage_u1";
    case Metric::outage_u2: return "outage_u2";
    case Metric::jain: return "jain";
    }
    return "unknown";
}

Metric parse_metric(std::string_view name)
{
    for (Metric m : all_metrics)
        if (to_string(m) == name)
            return m;
    throw ConfigError(ConfigErrc::SWEEP_INVALID, "unknown metric '" + std::string(name) + "'");
}

PowerTarget parse_power_target(std::string_view name)
{
    if (name == "joint")
        return PowerTarget::joint;
    if (name == "rho_s")
        return PowerTarget::rho_s;
    if (name == "rho_r")
        return PowerTarget::rho_r;
    throw ConfigError(ConfigErrc::SWEEP_INVALID, "unknown power target '" + std::string(name) + "'");
}

void validate(const SweepSpec& sweep)
{
    if (sweep.power_db.empty())
        throw ConfigError(ConfigErrc::SWEEP_INVALID, "power grid is empty");
    if (sweep.schemes.empty())
        throw ConfigError(ConfigErrc::SWEEP_INVALID, "scheme list is empty");
    if (sweep.metrics.empty())
        throw ConfigError(ConfigErrc::SWEEP_INVALID, "metric list is empty");
    if (sweep.trials < 1)
        throw ConfigError(ConfigErrc::SWEEP_INVALID, "trial count must be >= 1");
    for (double db : sweep.power_db)
        if (!std::isfinite(db))
            throw ConfigError(ConfigErrc::SWEEP_INVALID, "power points must be finite");
}

std::vector<double> parse_power_grid(std::string_view text)
{
    text = trim(text);
    std::vector<double> grid;
    if (text.find(':') != std::string_view::npos)
    {
        const auto parts = split(text, ':');
        if (parts.size() != 3)
            throw ConfigError(ConfigErrc::PARSE_ERROR, "power grid must be start:stop:step");
        const double start = parse_double(parts[0], "power");
        const double stop = parse_double(parts[1], "power");
        const double step = parse_double(parts[2], "power");
        if (!(step > 0.0) || stop < start)
            throw ConfigError(ConfigErrc::SWEEP_INVALID, "power grid needs step > 0 and stop >= start");
        // Points are start + n*step so rounding does not accumulate; the small
        // slack keeps an inclusive stop that is a multiple of step.
        const auto count = static_cast<long>(std::floor((stop - start) / step + 1e-9)) + 1;
        for (long n = 0; n < count; ++n)
            grid.push_back(start + static_cast<double>(n) * step);
    }
    else
    {
        for (auto item : split(text, ','))
            grid.push_back(parse_double(item, "power"));
    }
    return grid;
}

LoadedConfig parse_config(std::string_view text)
{
    LoadedConfig cfg;
    SystemParams& p = cfg.params;
    SweepSpec& s = cfg.sweep;

    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw))
    {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;

        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw ConfigError(ConfigErrc::PARSE_ERROR, "line " + std::to_string(line_no) + ": expected key = value");
        const auto key = trim(line.substr(0, eq));
        const auto value = trim(line.substr(eq + 1));

        if (key == "m_b")
            p.m_b = parse_integer<int>(value, key);
        else if (key == "m_r")
            p.m_r = parse_integer<int>(value, key);
        else if (key == "m_t")
            p.m_t = parse_integer<int>(value, key);
        else if (key == "a1")
            p.a1 = parse_double(value, key);
        else if (key == "a2")
            p.a2 = parse_double(value, key);
        else if (key == "rho_s")
            p.rho_s = db_to_linear(parse_double(value, key));
        else if (key == "rho_r")
            p.rho_r = db_to_linear(parse_double(value, key));
        else if (key == "var_br")
            p.var_br = parse_double(value, key);
        else if (key == "var_bu1")
            p.var_bu1 = parse_double(value, key);
        else if (key == "var_ru1")
            p.var_ru1 = parse_double(value, key);
        else if (key == "var_ru2")
            p.var_ru2 = parse_double(value, key);
        else if (key == "var_si")
            p.var_si = parse_double(value, key);
        else if (key == "k1")
            p.k1 = parse_double(value, key);
        else if (key == "rate1")
            p.rate1 = parse_double(value, key);
        else if (key == "rate2")
            p.rate2 = parse_double(value, key);
        else if (key == "power")
            s.power_db = parse_power_grid(value);
        else if (key == "schemes")
        {
            s.schemes.clear();
            for (auto name : split(value, ','))
                s.schemes.push_back(parse_scheme(name));
        }
        else if (key == "metrics")
        {
            s.metrics.clear();
            for (auto name : split(value, ','))
                s.metrics.push_back(parse_metric(name));
        }
        else if (key == "trials")
            s.trials = parse_integer<std::uint64_t>(value, key);
        else if (key == "seed")
            s.seed = parse_integer<std::uint64_t>(value, key);
        else if (key == "power_target")
            s.target = parse_power_target(value);
        else
            throw ConfigError(ConfigErrc::UNKNOWN_KEY,
                              "line " + std::to_string(line_no) + ": unknown key '" + std::string(key) + "'");
    }

    validate(cfg.params);
    validate(cfg.sweep);
    return cfg;
}

LoadedConfig load_config(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(ConfigErrc::IO_ERROR, "cannot open config file '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

} // namespace fdnoma
