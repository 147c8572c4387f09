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
#include <sstream>

namespace holocura::numerics
{
    namespace
    {
        // (1 / 2 pi) sum_ij sin(theta_i) w_i w_j exp(j kd . u(theta_i, phi_j))
        cplx product_sum(const Vec3 &kd, const QuadratureRule &theta_rule, const QuadratureRule &phi_rule)
        {
            const std::size_t n_phi = phi_rule.size();
            std::vector<double> cos_phi(n_phi), sin_phi(n_phi);
            for (std::size_t j = 0; j < n_phi; ++j)
            {
                cos_phi[j] = std::cos(phi_rule.nodes[j]);
                sin_phi[j] = std::sin(phi_rule.nodes[j]);
            }
            cplx acc(0.0, 0.0);
            for (std::size_t i = 0; i < theta_rule.size(); ++i)
            {
                const double st = std::sin(theta_rule.nodes[i]), ct = std::cos(theta_rule.nodes[i]);
                const double z_phase = kd.z() * ct;
                cplx inner(0.0, 0.0);
                for (std::size_t j = 0; j < n_phi; ++j)
                {
                    const double phase = st * (kd.x() * cos_phi[j] + kd.y() * sin_phi[j]) + z_phase;
                    inner += phi_rule.weights[j] * cplx(std::cos(phase), std::sin(phase));
                }
                acc += st * theta_rule.weights[i] * inner;
            }
            return acc / (2.0 * pi);
        }

        cplx evaluate_domain(const Vec3 &kd, OracleDomain domain, double beta, std::size_t n)
        {
            cplx value(0.0, 0.0);
            if (domain != OracleDomain::caps)
                value += product_sum(kd, QuadratureRule::gauss_legendre(n, 0.0, pi),
                                     QuadratureRule::gauss_legendre(n, 0.0, pi));
            if (domain != OracleDomain::front && beta > 0.0)
            {
                const std::size_t n_cap = 8 + std::size_t(std::ceil(double(n) * beta / pi));
                const auto phi_back = QuadratureRule::gauss_legendre(n, pi, 2.0 * pi);
                value += product_sum(kd, QuadratureRule::gauss_legendre(n_cap, 0.0, beta), phi_back);
                value += product_sum(kd, QuadratureRule::gauss_legendre(n_cap, pi - beta, pi), phi_back);
            }
            return value;
        }
    }

    OracleResult oracle_corr_pair(const Vec3 &p_a, const Vec3 &p_b, double wavelength, OracleDomain domain,
                                  double half_angle_rad, const OracleOptions &options)
    {
        if (!(wavelength > 0.0))
            throw std::invalid_argument("Wavelength must be positive");
        if (half_angle_rad < 0.0 || half_angle_rad > 0.5 * pi * (1.0 + 1e-12))
            throw std::invalid_argument("Cap half angle must lie in [0, pi/2]");

        const Vec3 kd = wavenumber(wavelength) * (p_a - p_b);
        std::size_t n = 24 + std::size_t(std::ceil(0.75 * kd.norm()));
        cplx previous = evaluate_domain(kd, domain, half_angle_rad, n);
        while (true)
        {
            if (2 * n > options.max_nodes)
            {
                std::ostringstream msg;
                msg << "Angular oracle did not converge to " << options.tolerance << " within " << options.max_nodes
                    << " nodes per dimension (|k d| = " << kd.norm() << ")";
                throw NonConvergence(msg.str());
            }
            n *= 2;
            const cplx current = evaluate_domain(kd, domain, half_angle_rad, n);
            const double change = std::abs(current - previous);
            if (change < options.tolerance)
                return {current, n, n, change};
            previous = current;
        }
    }

    cplx oracle_corr_on_grid(const Vec3 &p_a, const Vec3 &p_b, double wavelength, const AngularGrid &grid)
    {
        QuadratureRule theta_rule, phi_rule;
        theta_rule.nodes = grid.theta;
        theta_rule.weights = grid.theta_weight;
        phi_rule.nodes = grid.phi;
        phi_rule.weights = grid.phi_weight;
        return product_sum(wavenumber(wavelength) * (p_a - p_b), theta_rule, phi_rule);
    }

    PhiIdentity phi_integral_identity_check(double z)
    {
        auto integral = [z](std::size_t n) {
            return QuadratureRule::gauss_legendre(n, pi, 2.0 * pi).apply([z](double phi) {
                return std::polar(1.0, -z * std::sin(phi));
            });
        };
        std::size_t n = 64 + std::size_t(2.0 * std::abs(z));
        cplx previous = integral(n);
        for (int level = 0; level < 6; ++level)
        {
            n *= 2;
            const cplx current = integral(n);
            if (std::abs(current - previous) < 1e-13)
                return {current, pi * bessel_j0(z)};
            previous = current;
        }
        throw NonConvergence("Backside azimuth integral did not converge for z = " + std::to_string(z));
    }

    double odd_phi_part(double z)
    {
        return integrate_1d([z](double t) { return std::sin(z * std::sin(t)); }, 0.0, pi, 1e-13).value;
    }
}
