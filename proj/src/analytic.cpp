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

#include "fdnoma/analytic.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <iostream>
#include <limits>
#include <mutex>
#include <numbers>

#include "fdnoma/special.hpp"

namespace fdnoma
{

namespace
{

constexpr double inf = std::numeric_limits<double>::infinity();
constexpr double singular_threshold = 1e-6;
constexpr int max_exact_antennas = 16;

const QuadratureOptions fallback_quadrature{.abs_tol = 1e-15, .rel_tol = 1e-13, .max_subdivisions = 4000};

void warn_if_large(const SystemParams& p)
{
    if (std::max({p.m_b, p.m_r, p.m_t}) <= max_exact_antennas)
        return;
    static std::once_flag once;
    std::call_once(once, [] {
        std::cerr << "fdnoma: warning: antenna counts above " << max_exact_antennas
                  << " make the alternating binomial sums lose precision\n";
    });
}

double clamp_probability(double raw)
{
    assert(raw >= -1e-12 && raw <= 1.0 + 1e-12);
    return std::clamp(raw, 0.0, 1.0);
}

// Survival of the largest of m i.i.d. exponentials compared against a scaled,
// exponentially perturbed threshold:
//   sum_{p=0}^{m-1} (-1)^p C(m, p+1) e^{-(p+1) a} / (1 + (p+1) b).
// With A the max of m exponentials of mean lambda and Y exponential with mean
// mu, P(A > t (Y + 1)) is this sum at a = t / lambda, b = t mu / lambda.
double max_order_tail(int m, double a, double b)
{
    CompensatedSum sum;
    for (int p = 0; p < m; ++p)
    {
        const double n = p + 1.0;
        const double sign = (p % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binomial(m, p + 1) * std::exp(-n * a) / (1.0 + n * b);
    }
    return sum.value();
}

// integral_0^inf e^{-alpha x} / ((1 + x)(1 + beta x)) dx
//   = (e^alpha E1(alpha) - e^{alpha/beta} E1(alpha/beta)) / (1 - beta).
// The removable singularity at beta = 1 is integrated numerically.
double exponential_rational_integral(double alpha, double beta)
{
    if (std::abs(beta - 1.0) < singular_threshold)
    {
        const auto cdf = [alpha, beta](double x) { return 1.0 - std::exp(-alpha * x) / (1.0 + beta * x); };
        return rate_from_cdf(cdf, inf, fallback_quadrature).value * std::numbers::ln2;
    }
    const double far = (beta == 0.0) ? 0.0 : exp_e1_scaled(alpha / beta);
    return (exp_e1_scaled(alpha) - far) / (1.0 - beta);
}

// x / (a2 - a1 x): the g_su1 (or g_br) level that makes the superposed SINR
// equal x for unit interference-plus-noise.
double superposed_level(double x, const SystemParams& p) { return x / (p.a2 - p.a1 * x); }

double survival_gamma1_max_u1(double x, const SystemParams& p, const MeanGains& g)
{
    const double t = x / (p.a1 * g.lam_su1);
    return max_order_tail(p.m_b, t, t * g.lam_ru1 / p.m_t);
}

double survival_gamma1_max_u2(double x, const SystemParams& p, const MeanGains& g)
{
    const double t = x / (p.a1 * g.lam_su1);
    return max_order_tail(1, t, t * g.lam_ru1);
}

// P(gamma_2 > x) for x < a2/a1 under max_u1_analytic: the U1 first stage,
// relay and relay->U2 events are independent.
double survival_gamma2_max_u1(double x, const SystemParams& p, const MeanGains& g)
{
    const double u = superposed_level(x, p);
    const double at_u1 = max_order_tail(p.m_b, u / g.lam_su1, u * g.lam_ru1 / (p.m_t * g.lam_su1));
    const double at_relay = max_order_tail(p.m_r, u / g.lam_br, u * g.lam_si / g.lam_br);
    const double at_u2 = std::exp(-x / g.lam_ru2);
    return at_u2 * at_u1 * at_relay;
}

// P(gamma_2 > x) for x < a2/a1 under max_u2_decoupled. The SI of the chosen
// receive antenna is the minimum of m_r exponentials (mean lam_si / m_r).
double survival_gamma2_max_u2(double x, const SystemParams& p, const MeanGains& g)
{
    const double u = superposed_level(x, p);
    const double at_u1 = max_order_tail(1, u / g.lam_su1, u * g.lam_ru1 / g.lam_su1);
    const double at_relay = max_order_tail(p.m_b, u / g.lam_br, u * g.lam_si / (p.m_r * g.lam_br));
    const double at_u2 = max_order_tail(p.m_t, x / g.lam_ru2, 0.0);
    return at_u1 * at_relay * at_u2;
}

double far_user_limit(const SystemParams& p) { return p.a2 / p.a1; }

QuadratureResult far_user_rate(double (*survival)(double, const SystemParams&, const MeanGains&),
                               const SystemParams& p, const QuadratureOptions& opts)
{
    const MeanGains g = mean_gains(p);
    const auto integrand = [&](double x) { return survival(x, p, g) / (1.0 + x); };
    QuadratureResult r = integrate(integrand, 0.0, far_user_limit(p) * (1.0 - 1e-12), opts);
    r.value /= std::numbers::ln2;
    r.abs_error_bound /= std::numbers::ln2;
    return r;
}

} // namespace

QuadratureResult rate_from_cdf(const std::function<double(double)>& cdf, double upper, const QuadratureOptions& opts)
{
    const double limit = std::isinf(upper) ? upper : upper * (1.0 - 1e-12);
    const auto integrand = [&cdf](double x) { return (1.0 - cdf(x)) / (1.0 + x); };
    QuadratureResult r = integrate(integrand, 0.0, limit, opts);
    r.value /= std::numbers::ln2;
    r.abs_error_bound /= std::numbers::ln2;
    return r;
}

double alternating_order_sum(int m)
{
    CompensatedSum sum;
    for (int p = 0; p < m; ++p)
        sum += ((p % 2 == 0) ? 1.0 : -1.0) * binomial(m - 1, p) / (p + 1.0);
    return m * sum.value();
}

double cdf_gamma1_max_u1(double x, const SystemParams& p)
{
    warn_if_large(p);
    if (x <= 0.0)
        return 0.0;
    if (std::isinf(x))
        return 1.0;
    return clamp_probability(1.0 - survival_gamma1_max_u1(x, p, mean_gains(p)));
}

double rate_u1_max_u1(const SystemParams& p)
{
    warn_if_large(p);
    const MeanGains g = mean_gains(p);
    CompensatedSum sum;
    for (int q = 0; q < p.m_b; ++q)
    {
        const double n = q + 1.0;
        const double alpha = n / (p.a1 * g.lam_su1);
        const double beta = n * g.lam_ru1 / (p.m_t * p.a1 * g.lam_su1);
        const double sign = (q % 2 == 0) ? 1.0 : -1.0;
        sum += sign * binomial(p.m_b, q + 1) * exponential_rational_integral(alpha, beta);
    }
    return sum.value() / std::numbers::ln2;
}

double cdf_gamma2_max_u1(double x, const SystemParams& p)
{
    warn_if_large(p);
    if (x <= 0.0)
        return 0.0;
    if (x >= far_user_limit(p))
        return 1.0;
    return clamp_probability(1.0 - survival_gamma2_max_u1(x, p, mean_gains(p)));
}

QuadratureResult rate_u2_max_u1(const SystemParams& p, const QuadratureOptions& opts)
{
    warn_if_large(p);
    return far_user_rate(survival_gamma2_max_u1, p, opts);
}

double cdf_gamma1_max_u2(double x, const SystemParams& p)
{
    if (x <= 0.0)
        return 0.0;
    if (std::isinf(x))
        return 1.0;
    return clamp_probability(1.0 - survival_gamma1_max_u2(x, p, mean_gains(p)));
}

double rate_u1_max_u2(const SystemParams& p)
{
    const MeanGains g = mean_gains(p);
    const double alpha = 1.0 / (p.a1 * g.lam_su1);
    const double beta = g.lam_ru1 / (p.a1 * g.lam_su1);
    return exponential_rational_integral(alpha, beta) / std::numbers::ln2;
}

double cdf_gamma2_max_u2(double x, const SystemParams& p)
{
    warn_if_large(p);
    if (x <= 0.0)
        return 0.0;
    if (x >= far_user_limit(p))
        return 1.0;
    return clamp_probability(1.0 - survival_gamma2_max_u2(x, p, mean_gains(p)));
}

QuadratureResult rate_u2_max_u2(const SystemParams& p, const QuadratureOptions& opts)
{
    warn_if_large(p);
    return far_user_rate(survival_gamma2_max_u2, p, opts);
}

double zeta(const SystemParams& p)
{
    const double theta1 = rate_threshold(p.rate1);
    const double theta2 = rate_threshold(p.rate2);
    if (theta2 >= far_user_limit(p))
        return inf;
    return std::max(theta2 / (p.a2 - p.a1 * theta2), theta1 / p.a1);
}

double outage_u1_max_u1(const SystemParams& p)
{
    warn_if_large(p);
    const double z = zeta(p);
    if (std::isinf(z))
        return 1.0;
    const MeanGains g = mean_gains(p);
    const double t = z / g.lam_su1;
    return clamp_probability(1.0 - max_order_tail(p.m_b, t, t * g.lam_ru1 / p.m_t));
}

double outage_u1_max_u2(const SystemParams& p)
{
    const double z = zeta(p);
    if (std::isinf(z))
        return 1.0;
    const MeanGains g = mean_gains(p);
    const double t = z / g.lam_su1;
    return clamp_probability(1.0 - std::exp(-t) / (1.0 + t * g.lam_ru1));
}

double outage_u2_max_u1(const SystemParams& p)
{
    warn_if_large(p);
    const double theta2 = rate_threshold(p.rate2);
    if (theta2 >= far_user_limit(p))
        return 1.0;
    const MeanGains g = mean_gains(p);
    const double u = superposed_level(theta2, p);
    const double relay = max_order_tail(p.m_r, u / g.lam_br, u * g.lam_si / g.lam_br);
    return clamp_probability(1.0 - std::exp(-theta2 / g.lam_ru2) * relay);
}

double outage_u2_max_u2(const SystemParams& p)
{
    warn_if_large(p);
    const double theta2 = rate_threshold(p.rate2);
    if (theta2 >= far_user_limit(p))
        return 1.0;
    const MeanGains g = mean_gains(p);
    const double u = superposed_level(theta2, p);
    const double to_u2 = max_order_tail(p.m_t, theta2 / g.lam_ru2, 0.0);
    const double relay = max_order_tail(p.m_b, u / g.lam_br, u * g.lam_si / (p.m_r * g.lam_br));
    return clamp_probability(1.0 - to_u2 * relay);
}

bool has_analytic_form(Scheme scheme)
{
    return scheme == Scheme::max_u1_analytic || scheme == Scheme::max_u2_decoupled || scheme == Scheme::random;
}

std::optional<AnalyticMetrics> analytic_metrics(Scheme scheme, const SystemParams& params,
                                                const QuadratureOptions& opts)
{
    switch (scheme)
    {
    case Scheme::max_u1_analytic:
    {
        const QuadratureResult r2 = rate_u2_max_u1(params, opts);
        return AnalyticMetrics{rate_u1_max_u1(params), r2.value, outage_u1_max_u1(params),
                               outage_u2_max_u1(params), r2};
    }
    case Scheme::random:
    {
        // Without a choice to make, every scheme sees a single antenna triple.
        SystemParams single = params;
        single.m_b = single.m_r = single.m_t = 1;
        return analytic_metrics(Scheme::max_u2_decoupled, single, opts);
    }
    case Scheme::max_u2_decoupled:
    {
        const QuadratureResult r2 = rate_u2_max_u2(params, opts);
        return AnalyticMetrics{rate_u1_max_u2(params), r2.value, outage_u1_max_u2(params),
                               outage_u2_max_u2(params), r2};
    }
    default: return std::nullopt;
    }
}

} // namespace fdnoma
