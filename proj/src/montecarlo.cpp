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

#include "fdnoma/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include <Eigen/Dense>

#include "fdnoma/analytic.hpp"
#include "fdnoma/channel.hpp"
#include "fdnoma/selection.hpp"
#include "fdnoma/sinr.hpp"

namespace fdnoma
{

namespace
{

constexpr std::uint64_t trials_per_block = 8192;

// Running mean and co-moment of the per-trial rate pair (r1, r2) plus the
// outage event counts. Blocks are merged with Chan's pairwise update.
struct Accumulator
{
    std::uint64_t n = 0;
    Eigen::Vector2d mean = Eigen::Vector2d::Zero();
    Eigen::Matrix2d comoment = Eigen::Matrix2d::Zero();
    std::uint64_t outage_u1 = 0;
    std::uint64_t outage_u2 = 0;

    void add(const UserRates& r, bool out1, bool out2)
    {
        ++n;
        const Eigen::Vector2d x(r.u1, r.u2);
        const Eigen::Vector2d delta = x - mean;
        mean += delta / static_cast<double>(n);
        comoment.noalias() += delta * (x - mean).transpose();
        outage_u1 += out1;
        outage_u2 += out2;
    }

    void merge(const Accumulator& other)
    {
        if (other.n == 0)
            return;
        if (n == 0)
        {
            *this = other;
            return;
        }
        const double na = static_cast<double>(n);
        const double nb = static_cast<double>(other.n);
        const double total = na + nb;
        const Eigen::Vector2d delta = other.mean - mean;
        mean += delta * (nb / total);
        comoment += other.comoment + delta * delta.transpose() * (na * nb / total);
        n += other.n;
        outage_u1 += other.outage_u1;
        outage_u2 += other.outage_u2;
    }
};

using BlockResult = std::vector<Accumulator>; // one per scheme

// Pairwise reduction over [lo, hi) in block order.
BlockResult reduce_blocks(const std::vector<BlockResult>& blocks, std::size_t lo, std::size_t hi)
{
    if (hi - lo == 1)
        return blocks[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    BlockResult left = reduce_blocks(blocks, lo, mid);
    const BlockResult right = reduce_blocks(blocks, mid, hi);
    for (std::size_t s = 0; s < left.size(); ++s)
        left[s].merge(right[s]);
    return left;
}

MetricEstimate monte_carlo_estimate(double value, double variance, std::uint64_t n)
{
    const double se = (n > 1) ? std::sqrt(std::max(variance, 0.0) / static_cast<double>(n)) : 0.0;
    return {value, se, n, EstimateKind::monte_carlo};
}

MetricEstimate proportion(std::uint64_t events, std::uint64_t n)
{
    const double p = static_cast<double>(events) / static_cast<double>(n);
    const double variance = (n > 1) ? p * (1.0 - p) * static_cast<double>(n) / static_cast<double>(n - 1) : 0.0;
    return monte_carlo_estimate(p, variance, n);
}

MetricSet finalize(const Accumulator& acc, bool infeasible)
{
    const double n = static_cast<double>(acc.n);
    const Eigen::Matrix2d cov = (acc.n > 1) ? Eigen::Matrix2d(acc.comoment / (n - 1.0)) : Eigen::Matrix2d::Zero();

    MetricSet m;
    m.rate_u1 = monte_carlo_estimate(acc.mean(0), cov(0, 0), acc.n);
    m.rate_u2 = monte_carlo_estimate(acc.mean(1), cov(1, 1), acc.n);
    m.rate_sum = monte_carlo_estimate(acc.mean.sum(), cov.sum(), acc.n);
    m.outage_u1 = proportion(acc.outage_u1, acc.n);
    m.outage_u2 = proportion(acc.outage_u2, acc.n);
    m.threshold_infeasible = infeasible;

    const JainIndex jain = jain_index(acc.mean(0), acc.mean(1));
    m.jain_undefined = jain.undefined;
    double jain_variance = 0.0;
    if (!jain.undefined)
    {
        // Delta method on J(r1, r2) = S^2 / (2Q), S = r1 + r2, Q = r1^2 + r2^2.
        const double s = acc.mean.sum();
        const double q = acc.mean.squaredNorm();
        const Eigen::Vector2d gradient = s * (Eigen::Vector2d::Constant(q) - s * acc.mean) / (q * q);
        jain_variance = gradient.dot(cov * gradient);
    }
    m.jain_index = monte_carlo_estimate(jain.value, jain_variance, acc.n);
    return m;
}

std::string status_flags(const MetricSet& m)
{
    std::string flags;
    auto add = [&flags](std::string_view f) {
        if (!flags.empty())
            flags += '|';
        flags += f;
    };
    if (m.non_converged)
        add("NON_CONVERGED");
    if (m.threshold_infeasible)
        add("THRESHOLD_INFEASIBLE");
    if (m.jain_undefined)
        add("JAIN_UNDEFINED");
    return flags.empty() ? "ok" : flags;
}

} // namespace

std::string_view to_string(EstimateKind kind)
{
    return kind == EstimateKind::analytic ? "analytic" : "monte_carlo";
}

JainIndex jain_index(double r1, double r2)
{
    const double q = r1 * r1 + r2 * r2;
    if (q == 0.0)
        return {1.0, true};
    const double s = r1 + r2;
    return {s * s / (2.0 * q), false};
}

std::vector<MetricSet> estimate_metrics(const SystemParams& params, std::span<const Scheme> schemes,
                                        const MonteCarloOptions& opts)
{
    const SystemParams p = validate(params);
    if (opts.trials < 1)
        throw std::invalid_argument("estimate_metrics needs at least one trial");

    const MeanGains gains = mean_gains(p);
    const double theta1 = rate_threshold(p.rate1);
    const double theta2 = rate_threshold(p.rate2);
    const bool infeasible = theta2 >= p.a2 / p.a1;

    const std::uint64_t block_count = (opts.trials + trials_per_block - 1) / trials_per_block;
    std::vector<BlockResult> blocks(block_count, BlockResult(schemes.size()));
    std::atomic<std::uint64_t> next_block{0};

    auto worker = [&] {
        ChannelRealization real;
        real.resize(p);
        for (std::uint64_t b = next_block++; b < block_count; b = next_block++)
        {
            BlockResult& acc = blocks[b];
            const std::uint64_t end = std::min(opts.trials, (b + 1) * trials_per_block);
            for (std::uint64_t t = b * trials_per_block; t < end; ++t)
            {
                const RngSeed key{opts.seed, t};
                draw_into(p, gains, key, real);
                for (std::size_t s = 0; s < schemes.size(); ++s)
                {
                    const AntennaChoice choice = select(schemes[s], real, p, key);
                    const SinrBundle sinr = sinr_bundle(real, choice, p);
                    const bool out1 = !(sinr.gamma_12 > theta2 && sinr.gamma_1 > theta1);
                    const bool out2 = !(sinr.gamma_r > theta2 && sinr.gamma_ru2 > theta2);
                    acc[s].add(instantaneous_rates(sinr), out1, out2);
                }
            }
        }
    };

    unsigned workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, block_count));
    if (workers <= 1)
        worker();
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back(worker);
    }

    const BlockResult total = reduce_blocks(blocks, 0, blocks.size());
    std::vector<MetricSet> out;
    out.reserve(total.size());
    for (const Accumulator& acc : total)
        out.push_back(finalize(acc, infeasible));
    return out;
}

RateEstimates estimate_rates(const SystemParams& params, Scheme scheme, std::uint64_t trials, std::uint64_t seed)
{
    const Scheme one[] = {scheme};
    const MetricSet m = estimate_metrics(params, one, {.trials = trials, .seed = seed}).front();
    return {m.rate_u1, m.rate_u2, m.rate_sum};
}

OutageEstimates estimate_outage(const SystemParams& params, Scheme scheme, std::uint64_t trials, std::uint64_t seed)
{
    const Scheme one[] = {scheme};
    const MetricSet m = estimate_metrics(params, one, {.trials = trials, .seed = seed}).front();
    return {m.outage_u1, m.outage_u2, m.threshold_infeasible};
}

MetricSet analytic_metric_set(Scheme scheme, const SystemParams& params, const QuadratureOptions& opts)
{
    const auto a = analytic_metrics(scheme, validate(params), opts);
    if (!a)
        throw std::invalid_argument("no closed form for scheme " + std::string(to_string(scheme)));

    auto exact = [](double v) { return MetricEstimate{v, 0.0, 0, EstimateKind::analytic}; };
    MetricSet m;
    m.rate_u1 = exact(a->rate_u1);
    m.rate_u2 = exact(a->rate_u2);
    m.rate_sum = exact(a->rate_u1 + a->rate_u2);
    m.outage_u1 = exact(a->outage_u1);
    m.outage_u2 = exact(a->outage_u2);
    const JainIndex jain = jain_index(a->rate_u1, a->rate_u2);
    m.jain_index = exact(jain.value);
    m.jain_undefined = jain.undefined;
    m.threshold_infeasible = rate_threshold(params.rate2) >= params.a2 / params.a1;
    m.non_converged = !a->rate_u2_quadrature.converged;
    return m;
}

SweepMode parse_sweep_mode(std::string_view name)
{
    if (name == "mc")
        return SweepMode::monte_carlo;
    if (name == "analytic")
        return SweepMode::analytic;
    if (name == "both")
        return SweepMode::both;
    throw ConfigError(ConfigErrc::SWEEP_INVALID, "unknown sweep mode '" + std::string(name) + "'");
}

double rate_rel_diff(const MetricSet& mc, const MetricSet& an)
{
    auto rel = [](const MetricEstimate& m, const MetricEstimate& a) { return std::abs(m.value - a.value) / a.value; };
    return std::max({rel(mc.rate_u1, an.rate_u1), rel(mc.rate_u2, an.rate_u2), rel(mc.rate_sum, an.rate_sum)});
}

std::vector<SweepRow> run_sweep(const SystemParams& params, const SweepSpec& sweep, SweepMode mode, unsigned workers)
{
    validate(sweep);
    std::vector<SweepRow> rows;
    for (double db : sweep.power_db)
    {
        const SystemParams p = validate(with_power_db(params, db, sweep.target));

        std::vector<MetricSet> mc;
        if (mode != SweepMode::analytic)
            mc = estimate_metrics(p, sweep.schemes, {.trials = sweep.trials, .seed = sweep.seed, .workers = workers});

        for (std::size_t s = 0; s < sweep.schemes.size(); ++s)
        {
            const Scheme scheme = sweep.schemes[s];
            if (mode != SweepMode::analytic)
                rows.push_back({db, scheme, mc[s], std::nullopt});
            if (mode != SweepMode::monte_carlo && has_analytic_form(scheme))
            {
                SweepRow row{db, scheme, analytic_metric_set(scheme, p), std::nullopt};
                if (mode == SweepMode::both)
                    row.rel_diff = rate_rel_diff(mc[s], row.metrics);
                rows.push_back(row);
            }
        }
    }
    return rows;
}

std::string csv_number(double x)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows, std::span<const Metric> metrics)
{
    auto selected = [&metrics](Metric m) { return std::find(metrics.begin(), metrics.end(), m) != metrics.end(); };

    os << "power_db,scheme,rate_u1,rate_u1_se,rate_u2,rate_u2_se,rate_sum,outage_u1,outage_u1_se,"
          "outage_u2,outage_u2_se,jain,trials,kind,rel_diff,status\n";
    for (const SweepRow& row : rows)
    {
        const MetricSet& m = row.metrics;
        auto value = [&](Metric metric, double v) { return selected(metric) ? csv_number(v) : std::string(); };

        os << csv_number(row.power_db) << ',' << to_string(row.scheme) << ',';
        os << value(Metric::rate_u1, m.rate_u1.value) << ',' << value(Metric::rate_u1, m.rate_u1.std_error) << ',';
        os << value(Metric::rate_u2, m.rate_u2.value) << ',' << value(Metric::rate_u2, m.rate_u2.std_error) << ',';
        os << value(Metric::rate_sum, m.rate_sum.value) << ',';
        os << value(Metric::outage_u1, m.outage_u1.value) << ','
           << value(Metric::outage_u1, m.outage_u1.std_error) << ',';
        os << value(Metric::outage_u2, m.outage_u2.value) << ','
           << value(Metric::outage_u2, m.outage_u2.std_error) << ',';
        os << value(Metric::jain, m.jain_index.value) << ',';
        os << m.rate_u1.trials << ',' << to_string(m.rate_u1.kind) << ',';
        os << (row.rel_diff ? csv_number(*row.rel_diff) : std::string()) << ',';
        os << status_flags(m) << '\n';
    }
}

} // namespace fdnoma
