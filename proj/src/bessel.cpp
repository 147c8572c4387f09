// SPDX-License-Identifier: Apache-2.0
//
// holocura: spatial statistics of curvature-reconfigurable antenna apertures
// Copyright (C) 2026 The holocura authors
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

#include "holocura/numerics.hpp"

#include <cmath>
#include <limits>

namespace holocura::numerics
{
    namespace
    {
        constexpr double series_limit = 5.0;
        constexpr double asymptotic_limit = 25.0;

        // sum_k (-x^2/4)^k / (k!)^2
        double j0_series(double x)
        {
            const double q = -0.25 * x * x;
            double term = 1.0, sum = 1.0;
            for (int k = 1; k < 60; ++k)
            {
                term *= q / (double(k) * double(k));
                sum += term;
                if (std::abs(term) < 1e-17 * std::abs(sum))
                    break;
            }
            return sum;
        }

        // Miller backward recurrence normalized with J0 + 2 sum_k J_2k = 1
        double j0_miller(double x)
        {
            int start = int(x + 40.0 + 2.0 * std::sqrt(40.0 * x));
            start += start % 2;

            double j_next = 0.0, j_cur = 1e-300, norm = 0.0;
            for (int n = start; n > 0; --n)
            {
                const double j_prev = 2.0 * double(n) / x * j_cur - j_next;
                j_next = j_cur;
                j_cur = j_prev;
                if ((n - 1) % 2 == 0 && n - 1 > 0)
                    norm += 2.0 * j_cur;
                if (std::abs(j_cur) > 1e250)
                {
                    j_cur *= 1e-250;
                    j_next *= 1e-250;
                    norm *= 1e-250;
                }
            }
            // j_cur now holds the unnormalized J0
            return j_cur / (norm + j_cur);
        }

        // Hankel expansion J0 = sqrt(2/(pi x)) (P cos(chi) - Q sin(chi)), chi = x - pi/4
        double j0_asymptotic(double x)
        {
            double P = 0.0, Q = 0.0;
            double u = 1.0, last = std::numeric_limits<double>::infinity();
            for (int k = 0; k < 200; ++k)
            {
                if (k > 0)
                    u *= -double((2 * k - 1) * (2 * k - 1)) / (8.0 * double(k) * x);
                if (std::abs(u) > last) // expansion started to diverge
                    break;
                last = std::abs(u);
                const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
                if (k % 2 == 0)
                    P += sign * u;
                else
                    Q += sign * u;
                if (std::abs(u) < 1e-18)
                    break;
            }
            const double s = std::sin(x), c = std::cos(x);
            const double cos_chi = (c + s) / std::sqrt(2.0);
            const double sin_chi = (s - c) / std::sqrt(2.0);
            return std::sqrt(2.0 / (pi * x)) * (P * cos_chi - Q * sin_chi);
        }
    }

    double bessel_j0(double x)
    {
        x = std::abs(x);
        if (x <= series_limit)
            return j0_series(x);
        if (x < asymptotic_limit)
            return j0_miller(x);
        return j0_asymptotic(x);
    }
}
