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

#ifndef HOLOCURA_NUMERICS_HPP
#define HOLOCURA_NUMERICS_HPP

#include "holocura/common.hpp"

#include <functional>
#include <vector>

namespace holocura::numerics
{
    // Bessel function of the first kind, order zero. Absolute error below 1e-12 for all finite x.
    double bessel_j0(double x);

    struct QuadratureRule
    {
        enum class Kind
        {
            gauss_legendre,
            composite_simpson
        };

        Kind kind = Kind::gauss_legendre;
        double lower = 0.0, upper = 0.0;
        std::vector<double> nodes;
        std::vector<double> weights;

        // n-point Gauss-Legendre rule mapped to [a, b]
        static QuadratureRule gauss_legendre(std::size_t n, double a, double b);

        // Composite Simpson on n_intervals (even) uniform sub-intervals, i.e. n_intervals + 1 samples
        static QuadratureRule simpson(std::size_t n_intervals, double a, double b);

        std::size_t size() const { return nodes.size(); }

        template <typename F>
        auto apply(F &&f) const
        {
            using T = decltype(f(0.0));
            T acc{};
            for (std::size_t i = 0; i < nodes.size(); ++i)
                acc += weights[i] * f(nodes[i]);
            return acc;
        }
    };

    struct IntegrationResult
    {
        double value = 0.0;
        double error_bound = 0.0;    // sum of the per-interval Gauss-Kronrod error estimates
        std::size_t evaluations = 0; // integrand calls
        std::size_t intervals = 0;   // sub-intervals in the final partition
    };

    // Globally adaptive Gauss-Kronrod (G15/K31) with bisection of the worst interval, absolute tolerance.
    // Throws NonConvergence (with the achieved error in the message) after max_intervals splits.
    IntegrationResult integrate_1d(const std::function<double(double)> &f, double a, double b, double tolerance,
                                   std::size_t max_intervals = 2000);

    // Product grid over (theta, phi) with weights sin(theta) * w_theta * w_phi
    struct AngularGrid
    {
        std::vector<double> theta, phi;
        std::vector<double> theta_weight, phi_weight; // quadrature weights of the 1D factors

        static AngularGrid product(const QuadratureRule &theta_rule, const QuadratureRule &phi_rule);

        // Uniform samples with composite Simpson weights; sample counts must be odd
        static AngularGrid uniform(std::size_t n_theta, std::size_t n_phi, double theta_lo, double theta_hi,
                                   double phi_lo, double phi_hi);

        double cell_weight(std::size_t i_theta, std::size_t i_phi) const;

        // Integral of sin(theta) / (2 pi) over the grid; 1 for the front half-space
        double density_integral() const;
    };

    enum class OracleDomain
    {
        front,         // [0, pi] x [0, pi]
        caps,          // theta in [0, beta] u [pi - beta, pi], phi in [pi, 2 pi]
        front_and_caps // union of both
    };

    struct OracleOptions
    {
        double tolerance = 1e-7;      // refinement stops when the estimate moves by less than this
        std::size_t max_nodes = 4096; // per angular dimension
    };

    struct OracleResult
    {
        cplx value;
        std::size_t theta_nodes = 0, phi_nodes = 0; // front-domain resolution at convergence
        double last_change = 0.0;
    };

    // Ground-truth isotropic correlation: integral of (sin(theta) / 2 pi) exp(j k (p_a - p_b) . u(theta, phi))
    // over the requested domain, by Gauss-Legendre product quadrature refined x2 until converged.
    OracleResult oracle_corr_pair(const Vec3 &p_a, const Vec3 &p_b, double wavelength, OracleDomain domain,
                                  double half_angle_rad = 0.0, const OracleOptions &options = {});

    // Same integrand on a fixed grid (no refinement)
    cplx oracle_corr_on_grid(const Vec3 &p_a, const Vec3 &p_b, double wavelength, const AngularGrid &grid);

    struct PhiIdentity
    {
        cplx integral;   // int_pi^{2 pi} exp(-j z sin(phi)) dphi, by quadrature
        double pi_j0;    // pi J0(z) from the series/asymptotic evaluation
    };

    // Quadrature of the backside azimuth integral next to its even-part Bessel form
    PhiIdentity phi_integral_identity_check(double z);

    // Xi(z) = int_0^pi sin(z sin t) dt, the odd part dropped by the even-part reduction
    double odd_phi_part(double z);
}

#endif
