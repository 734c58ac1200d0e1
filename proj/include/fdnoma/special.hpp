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

#ifndef FDNOMA_SPECIAL_HPP
#define FDNOMA_SPECIAL_HPP

#include <cmath>

namespace fdnoma
{

// Exponential integral Ei(x) = integral_{-inf}^{x} e^t / t dt, for x < 0.
// Throws std::domain_error for x >= 0.
double exp_int_ei(double x);

// e^y E1(y) for y > 0, where E1(y) = -Ei(-y). Finite for every y and equal
// to 0 at +inf, so it never overflows the way e^y * E1(y) would.
double exp_e1_scaled(double y);

double binomial(int n, int k);

// Neumaier compensated summation.
class CompensatedSum
{
  public:
    CompensatedSum& operator+=(double x) noexcept
    {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
        return *this;
    }

    double value() const noexcept { return sum_ + carry_; }

  private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

} // namespace fdnoma

#endif // FDNOMA_SPECIAL_HPP
