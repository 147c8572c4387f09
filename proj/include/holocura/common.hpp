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

#ifndef HOLOCURA_COMMON_HPP
#define HOLOCURA_COMMON_HPP

#include <Eigen/Core>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

namespace holocura
{
    using cplx = std::complex<double>;
    using Vec3 = Eigen::Vector3d;
    using CVector = Eigen::VectorXcd;
    using CMatrix = Eigen::MatrixXcd;
    using RMatrix = Eigen::MatrixXd;

    inline constexpr double pi = std::numbers::pi;
    inline constexpr double speed_of_light = 299792458.0; // [m/s]

    inline double wavelength_from_frequency(double carrier_hz) { return speed_of_light / carrier_hz; }
    inline double wavenumber(double wavelength) { return 2.0 * pi / wavelength; }

    // Normalized sinc, sin(pi x) / (pi x)
    inline double sinc(double x)
    {
        if (x == 0.0)
            return 1.0;
        const double px = pi * x;
        return std::sin(px) / px;
    }

    // Shortest round-trip text for CSV and JSON artifacts; "nan" for undefined values
    inline std::string format_number(double x)
    {
        if (std::isnan(x))
            return "nan";
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        for (int digits = 6; digits < 17; ++digits)
        {
            char trial[32];
            std::snprintf(trial, sizeof trial, "%.*g", digits, x);
            if (std::strtod(trial, nullptr) == x)
                return trial;
        }
        return buf;
    }

    // User coincides with an element, or a geometry is otherwise not evaluable
    class DegenerateGeometry : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // Quadrature or refinement failed to reach the requested tolerance
    class NonConvergence : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A distance between two all-zero statistics was requested
    class UndefinedDistance : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };
}

#endif
