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

#include "fdnoma/special.hpp"

#include <algorithm>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace fdnoma
{

namespace
{

constexpr double eps = std::numeric_limits<double>::epsilon();
constexpr int max_iterations = 1000;

// E1(y) = -gamma - ln y - sum_{n>=1} (-y)^n / (n n!), used for 0 < y <= 1
// where the terms shrink monotonically after the first.
double e1_series(double y)
{
    double term = 1.0;
    double sum = 0.0;
    for (int n = 1; n <= max_iterations; ++n)
    {
        term *= -y / n;
        const double contribution = term / n;
        sum += contribution;
        if (std::abs(contribution) < std::abs(sum) * eps)
            break;
    }
    return -std::numbers::egamma - std::log(y) - sum;
}

// e^y E1(y) as the continued fraction 1/(y+1- 1^2/(y+3- 2^2/(y+5- ...))),
// evaluated by the modified Lentz method. Converges quickly for y > 1.
double e1_scaled_continued_fraction(double y)
{
    constexpr double tiny = 1e-300;
    double b = y + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int n = 1; n <= max_iterations; ++n)
    {
        const double a = -static_cast<double>(n) * n;
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < eps)
            break;
    }
    return h;
}

} // namespace

double exp_e1_scaled(double y)
{
    if (!(y > 0.0))
        throw std::domain_error("exp_e1_scaled requires y > 0");
    if (std::isinf(y))
        return 0.0;
    if (y <= 1.0)
        return std::exp(y) * e1_series(y);
    return e1_scaled_continued_fraction(y);
}

double exp_int_ei(double x)
{
    if (!(x < 0.0))
        throw std::domain_error("exp_int_ei is only defined here for x < 0");
    const double y = -x;
    if (y <= 1.0)
        return -e1_series(y);
    return -std::exp(x) * e1_scaled_continued_fraction(y);
}

double binomial(int n, int k)
{
    if (k < 0 || k > n)
        return 0.0;
    k = std::min(k, n - k);
    double result = 1.0;
    for (int i = 1; i <= k; ++i)
        result = result * (n - k + i) / i;
    return std::round(result);
}

} // namespace fdnoma
