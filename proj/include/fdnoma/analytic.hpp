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

#ifndef FDNOMA_ANALYTIC_HPP
#define FDNOMA_ANALYTIC_HPP

#include <functional>
#include <optional>

#include "fdnoma/config.hpp"
#include "fdnoma/quadrature.hpp"

namespace fdnoma
{

// Closed-form and single-integral expressions for the ergodic rates and
// outage probabilities of the max-U1 and max-U2 selection schemes under
// i.i.d. Rayleigh fading.
//
// The max-U1 expressions describe the `max_u1_analytic` selector (relay
// receive antenna picked on g_br alone); the near-user results also hold for
// `max_u1`, whose first stage is identical. The max-U2 expressions describe
// `max_u2_decoupled`.
//
// Every CDF returns a probability clamped to [0, 1]; the unclamped value is
// within 1e-12 of that range for antenna counts up to 16.

// (1 / ln 2) * integral_0^upper (1 - F(x)) / (1 + x) dx. `upper` may be +inf;
// a finite upper limit must be where F reaches 1 and is pulled in by a
// relative 1e-12 so the integrand is never evaluated on the singular edge.
QuadratureResult rate_from_cdf(const std::function<double(double)>& cdf, double upper,
                               const QuadratureOptions& opts = {});

// m * sum_{p=0}^{m-1} (-1)^p C(m-1, p) / (p + 1), which is exactly 1.
double alternating_order_sum(int m);

// ---- max-U1 scheme ---------------------------------------------------------

double cdf_gamma1_max_u1(double x, const SystemParams& params);
double rate_u1_max_u1(const SystemParams& params);
double cdf_gamma2_max_u1(double x, const SystemParams& params);
QuadratureResult rate_u2_max_u1(const SystemParams& params, const QuadratureOptions& opts = {});

// ---- max-U2 scheme ---------------------------------------------------------

double cdf_gamma1_max_u2(double x, const SystemParams& params);
double rate_u1_max_u2(const SystemParams& params);
double cdf_gamma2_max_u2(double x, const SystemParams& params);
QuadratureResult rate_u2_max_u2(const SystemParams& params, const QuadratureOptions& opts = {});

// ---- outage ----------------------------------------------------------------

// Near-user outage threshold on g_su1 / (g_ru1 + 1):
// max(theta2 / (a2 - a1 theta2), theta1 / a1), +inf when theta2 >= a2 / a1.
double zeta(const SystemParams& params);

double outage_u1_max_u1(const SystemParams& params);
double outage_u1_max_u2(const SystemParams& params);
double outage_u2_max_u1(const SystemParams& params);
double outage_u2_max_u2(const SystemParams& params);

// Analytic metric values for a scheme, when a closed form exists
// (max_u1_analytic, max_u2_decoupled, random).
struct AnalyticMetrics
{
    double rate_u1;
    double rate_u2;
    double outage_u1;
    double outage_u2;
    QuadratureResult rate_u2_quadrature;
};

std::optional<AnalyticMetrics> analytic_metrics(Scheme scheme, const SystemParams& params,
                                                const QuadratureOptions& opts = {});

bool has_analytic_form(Scheme scheme);

} // namespace fdnoma

#endif // FDNOMA_ANALYTIC_HPP
