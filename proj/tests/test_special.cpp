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

#include <catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "fdnoma/analytic.hpp"
#include "fdnoma/quadrature.hpp"
#include "fdnoma/special.hpp"

using namespace fdnoma;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{

// Ei(x) = -integral_{-x}^{inf} e^{-t} / t dt for x < 0, by double-exponential
// quadrature in long double.
double ei_oracle(double x)
{
    boost::math::quadrature::exp_sinh<long double> integrator;
    const long double lo = -static_cast<long double>(x);
    const long double v = integrator.integrate([](long double t) { return std::exp(-t) / t; }, lo,
                                               std::numeric_limits<long double>::infinity());
    return static_cast<double>(-v);
}

// E1(1) = -gamma - sum_{n>=1} (-1)^n / (n n!).
double e1_at_one_series()
{
    long double sum = 0.0L;
    long double factorial = 1.0L;
    for (int n = 1; n < 30; ++n)
    {
        factorial *= n;
        sum += (n % 2 == 0 ? 1.0L : -1.0L) / (n * factorial);
    }
    return static_cast<double>(-std::numbers::egamma_v<long double> - sum);
}

} // namespace

TEST_CASE("Ei at -1 matches the defining integral", "[special]")
{
    const double oracle = ei_oracle(-1.0);
    CHECK_THAT(oracle, WithinAbs(-0.219383934395520273677, 1e-15));
    CHECK_THAT(exp_int_ei(-1.0), WithinAbs(oracle, 1e-12));
}

TEST_CASE("Ei across the series and continued fraction branches", "[special]")
{
    for (double x : {-1e-8, -0.01, -0.5, -0.999, -1.0, -1.001, -2.0, -5.0, -12.5, -39.9, -40.0, -40.1, -80.0})
    {
        INFO("x = " << x);
        CHECK_THAT(exp_int_ei(x), WithinRel(ei_oracle(x), 1e-12));
    }
}

TEST_CASE("Ei decays to zero from below", "[special]")
{
    const double v = exp_int_ei(-50.0);
    CHECK(v < 0.0);
    CHECK(v > -1e-20);
    CHECK(exp_int_ei(-800.0) <= 0.0);
}

TEST_CASE("Ei derivative is e^x / x", "[special]")
{
    const double h = 1e-5;
    const double fd = (exp_int_ei(-2.0 + h) - exp_int_ei(-2.0 - h)) / (2.0 * h);
    CHECK_THAT(fd, WithinAbs(std::exp(-2.0) / -2.0, 1e-6));
}

TEST_CASE("Ei rejects non-negative arguments", "[special]")
{
    CHECK_THROWS_AS(exp_int_ei(0.0), std::domain_error);
    CHECK_THROWS_AS(exp_int_ei(1.0), std::domain_error);
}

TEST_CASE("scaled E1 is finite everywhere", "[special]")
{
    CHECK_THAT(exp_e1_scaled(1.0), WithinRel(std::exp(1.0) * e1_at_one_series(), 1e-13));
    CHECK(exp_e1_scaled(std::numeric_limits<double>::infinity()) == 0.0);
    // e^y E1(y) ~ 1/y for large y.
    CHECK_THAT(exp_e1_scaled(1e6), WithinRel(1e-6 * (1.0 - 1e-6 + 2e-12), 1e-15));
    CHECK_THAT(exp_e1_scaled(50.0), WithinRel(-std::exp(50.0) * ei_oracle(-50.0), 1e-12));
}

TEST_CASE("binomial coefficients", "[special]")
{
    CHECK(binomial(4, 0) == 1.0);
    CHECK(binomial(4, 2) == 6.0);
    CHECK(binomial(16, 8) == 12870.0);
    CHECK(binomial(3, 5) == 0.0);
}

TEST_CASE("compensated sum keeps cancelled digits", "[special]")
{
    CompensatedSum s;
    s += 1e16;
    s += 1.0;
    s += -1e16;
    CHECK(s.value() == 1.0);
}

TEST_CASE("alternating order-statistic sum is one", "[special]")
{
    for (int m = 1; m <= 16; ++m)
    {
        INFO("m = " << m);
        CHECK_THAT(alternating_order_sum(m), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("quadrature on known integrals", "[special]")
{
    const auto cubic = integrate([](double x) { return x * x; }, 0.0, 1.0);
    CHECK(cubic.converged);
    CHECK_THAT(cubic.value, WithinRel(1.0 / 3.0, 1e-14));

    const auto sine = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(sine.converged);
    CHECK_THAT(sine.value, WithinRel(2.0, 1e-13));

    const auto decay = integrate([](double x) { return std::exp(-x); }, 0.0, std::numeric_limits<double>::infinity());
    CHECK(decay.converged);
    CHECK_THAT(decay.value, WithinRel(1.0, 1e-10));

    const auto root = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(root.converged);
    CHECK_THAT(root.value, WithinRel(2.0, 1e-8));
}

TEST_CASE("quadrature flags a missed tolerance", "[special]")
{
    QuadratureOptions opts;
    opts.max_subdivisions = 5;
    const auto wild = integrate([](double x) { return std::sin(1.0 / x); }, 1e-6, 1.0, opts);
    CHECK_FALSE(wild.converged);
    CHECK(std::isfinite(wild.value));
    CHECK(wild.abs_error_bound > 0.0);
}

TEST_CASE("rate from a CDF", "[special]")
{
    const auto degenerate = rate_from_cdf([](double) { return 1.0; }, std::numeric_limits<double>::infinity());
    CHECK(degenerate.value == 0.0);

    const auto exponential =
        rate_from_cdf([](double x) { return -std::expm1(-x); }, std::numeric_limits<double>::infinity());
    CHECK(exponential.converged);
    const double expected = std::exp(1.0) * e1_at_one_series() / std::numbers::ln2;
    CHECK_THAT(expected, WithinAbs(0.8603473822708861, 1e-15));
    CHECK_THAT(exponential.value, WithinRel(expected, 1e-8));
}
