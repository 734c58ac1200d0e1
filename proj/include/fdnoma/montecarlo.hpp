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

#ifndef FDNOMA_MONTECARLO_HPP
#define FDNOMA_MONTECARLO_HPP

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fdnoma/config.hpp"
#include "fdnoma/quadrature.hpp"

namespace fdnoma
{

enum class EstimateKind
{
    monte_carlo,
    analytic,
};

std::string_view to_string(EstimateKind kind);

struct MetricEstimate
{
    double value = 0.0;
    double std_error = 0.0; // sample std / sqrt(trials) for Monte Carlo, 0 for analytic
    std::uint64_t trials = 0;
    EstimateKind kind = EstimateKind::monte_carlo;
};

struct MetricSet
{
    MetricEstimate rate_u1;
    MetricEstimate rate_u2;
    MetricEstimate rate_sum;
    MetricEstimate outage_u1;
    MetricEstimate outage_u2;
    MetricEstimate jain_index;

    bool threshold_infeasible = false; // theta2 >= a2/a1: both outages are 1
    bool jain_undefined = false;       // both rates zero
    bool non_converged = false;        // analytic quadrature missed its tolerance
};

struct RateEstimates
{
    MetricEstimate u1;
    MetricEstimate u2;
    MetricEstimate sum;
};

struct OutageEstimates
{
    MetricEstimate u1;
    MetricEstimate u2;
    bool threshold_infeasible = false;
};

struct JainIndex
{
    double value;
    bool undefined; // both rates zero, value set to 1 by convention
};

// (r1 + r2)^2 / (2 (r1^2 + r2^2)), in [0.5, 1] for non-negative rates.
JainIndex jain_index(double rate_u1, double rate_u2);

struct MonteCarloOptions
{
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    unsigned workers = 0; // 0 picks std::thread::hardware_concurrency()
};

// Runs every scheme on the same realizations (trial t uses RngSeed{seed, t}),
// so per-trial comparisons between schemes are exact. Results do not depend
// on the worker count: trials are reduced in fixed blocks, in block order.
std::vector<MetricSet> estimate_metrics(const SystemParams& params, std::span<const Scheme> schemes,
                                        const MonteCarloOptions& opts);

RateEstimates estimate_rates(const SystemParams& params, Scheme scheme, std::uint64_t trials, std::uint64_t seed);
OutageEstimates estimate_outage(const SystemParams& params, Scheme scheme, std::uint64_t trials,
                                std::uint64_t seed);

MetricSet analytic_metric_set(Scheme scheme, const SystemParams& params, const QuadratureOptions& opts = {});

struct SweepRow
{
    double power_db;
    Scheme scheme;
    MetricSet metrics;
    std::optional<double> rel_diff; // analytic rows of a paired (both) sweep
};

enum class SweepMode
{
    monte_carlo,
    analytic,
    both,
};

SweepMode parse_sweep_mode(std::string_view name);

// Rows are ordered by power point, then scheme, and in `both` mode the
// Monte Carlo row precedes its analytic partner. Schemes without a closed
// form get no analytic row.
std::vector<SweepRow> run_sweep(const SystemParams& params, const SweepSpec& sweep, SweepMode mode = SweepMode::monte_carlo,
                                unsigned workers = 0);

// Max over rate_u1, rate_u2, rate_sum of |mc - analytic| / analytic.
double rate_rel_diff(const MetricSet& mc, const MetricSet& analytic);

// Header plus one row per SweepRow. Columns: power_db, scheme, rate_u1,
// rate_u1_se, rate_u2, rate_u2_se, rate_sum, outage_u1, outage_u1_se,
// outage_u2, outage_u2_se, jain, trials, kind, rel_diff, status. Numbers use
// 17 significant digits; unselected metrics and absent rel_diff are empty.
void write_sweep_csv(std::ostream& os, std::span<const SweepRow> rows, std::span<const Metric> metrics);

std::string csv_number(double x);

} // namespace fdnoma

#endif // FDNOMA_MONTECARLO_HPP
