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

#ifndef FDNOMA_QUADRATURE_HPP
#define FDNOMA_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <vector>

namespace fdnoma
{

struct QuadratureResult
{
    double value = 0.0;
    double abs_error_bound = 0.0;
    int evaluations = 0;
    bool converged = true; // false means NON_CONVERGED: tolerance unmet at the subdivision budget
};

struct QuadratureOptions
{
    double abs_tol = 1e-9;
    double rel_tol = 1e-8;
    int max_subdivisions = 4000;
};

namespace detail
{

// Gauss-Kronrod 7/15 abscissae on [-1, 1] (non-negative half) and weights.
inline constexpr std::array<double, 8> kronrod_nodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851, 0.864864423359769072789712788640926,
    0.741531185599394439863864773280788, 0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kronrod_weights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204, 0.104790010322250183839876322541518,
    0.140653259715525918745189590510238, 0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for kronrod_nodes[1], [3], [5], [7].
inline constexpr std::array<double, 4> gauss_weights = {0.129484966168869693270611432679082,
                                                        0.279705391489276667901467771423780,
                                                        0.381830050505118944950369775488975,
                                                        0.417959183673469387755102040816327};

struct Segment
{
    double a, b, value, error;
    bool operator<(const Segment& other) const { return error < other.error; }
};

template <typename F>
Segment gauss_kronrod_15(F& f, double a, double b)
{
    const double centre = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(centre);
    double kronrod = fc * kronrod_weights[7];
    double gauss = fc * gauss_weights[3];
    for (int n = 0; n < 7; ++n)
    {
        const double dx = half * kronrod_nodes[n];
        const double pair = f(centre - dx) + f(centre + dx);
        kronrod += kronrod_weights[n] * pair;
        if (n % 2 == 1)
            gauss += gauss_weights[n / 2] * pair;
    }
    kronrod *= half;
    gauss *= half;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

template <typename F>
QuadratureResult integrate_finite(F& f, double a, double b, const QuadratureOptions& opts)
{
    QuadratureResult result;
    if (a == b)
        return result;

    int evaluations = 0;
    auto counted = [&f, &evaluations](double x) {
        ++evaluations;
        return f(x);
    };

    std::vector<Segment> segments{gauss_kronrod_15(counted, a, b)};
    double value = segments.front().value;
    double error = segments.front().error;

    int subdivisions = 0;
    while (error > std::max(opts.abs_tol, opts.rel_tol * std::abs(value)))
    {
        if (subdivisions >= opts.max_subdivisions)
        {
            result.converged = false;
            break;
        }
        std::pop_heap(segments.begin(), segments.end());
        const Segment worst = segments.back();
        segments.pop_back();
        const double mid = 0.5 * (worst.a + worst.b);
        segments.push_back(gauss_kronrod_15(counted, worst.a, mid));
        std::push_heap(segments.begin(), segments.end());
        segments.push_back(gauss_kronrod_15(counted, mid, worst.b));
        std::push_heap(segments.begin(), segments.end());
        ++subdivisions;

        // Re-sum from scratch so the running totals do not drift.
        value = 0.0;
        error = 0.0;
        for (const auto& s : segments)
        {
            value += s.value;
            error += s.error;
        }
    }

    result.value = value;
    result.abs_error_bound = error;
    result.evaluations = evaluations;
    return result;
}

} // namespace detail

// Globally adaptive Gauss-Kronrod quadrature of f over [a, b]. An infinite
// upper limit is handled by the map x = a + t / (1 - t), t in [0, 1).
// The error bound is the summed |Kronrod - Gauss| difference, which is
// conservative for smooth integrands.
template <typename F>
QuadratureResult integrate(F f, double a, double b, const QuadratureOptions& opts = {})
{
    if (std::isinf(b))
    {
        auto mapped = [&f, a](double t) {
            const double one_minus = 1.0 - t;
            return f(a + t / one_minus) / (one_minus * one_minus);
        };
        return detail::integrate_finite(mapped, 0.0, 1.0, opts);
    }
    return detail::integrate_finite(f, a, b, opts);
}

} // namespace fdnoma

#endif // FDNOMA_QUADRATURE_HPP
