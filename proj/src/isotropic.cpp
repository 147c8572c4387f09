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

#include "holocura/channels.hpp"
#include "holocura/numerics.hpp"

#include <cmath>

namespace holocura::channels
{
    namespace
    {
        // 1 - cos(beta) without cancellation near beta = 0
        double cap_measure(double beta)
        {
            const double s = std::sin(0.5 * beta);
            return 2.0 * s * s;
        }
    }

    double iso_extension_integral(double axial_phase, double transverse_phase, double half_angle_rad, double tolerance)
    {
        if (half_angle_rad <= 0.0)
            return 0.0;
        if (axial_phase == 0.0 && transverse_phase == 0.0)
            return cap_measure(half_angle_rad);
        auto integrand = [=](double u) {
            return std::cos(axial_phase * u) * numerics::bessel_j0(transverse_phase * std::sqrt(std::max(0.0, 1.0 - u * u)));
        };
        return numerics::integrate_1d(integrand, std::cos(half_angle_rad), 1.0, tolerance).value;
    }

    IsoEntry iso_corr_1d(const geometry::Aperture &geom, std::size_t m, std::size_t n, double wavelength,
                         double tolerance)
    {
        if (geom.is_2d())
            throw std::invalid_argument("iso_corr_1d expects a 1D aperture");
        if (m >= geom.columns() || n >= geom.columns())
            throw std::out_of_range("Element index out of range");

        if (geom.is_flat())
            return {sinc(2.0 * std::abs(geom.arc_coordinate(n) - geom.arc_coordinate(m)) / wavelength), 0.0};

        const double R = geom.radius(), beta = geom.half_angle();
        const double am = geom.central_angle(m), an = geom.central_angle(n);
        const double b = 4.0 * pi * R / wavelength * std::sin(0.5 * (an - am));
        const double c = beta - 0.5 * (am + an);
        return {sinc(b / pi), iso_extension_integral(b * std::cos(c), b * std::sin(c), beta, tolerance)};
    }

    PairSeparation iso_pair_separation(const geometry::Aperture &geom, std::size_t element_a, std::size_t element_b)
    {
        const double dm = double(geom.row_of(element_a)) - double(geom.row_of(element_b));
        const double dx = dm * geom.x_spacing();
        const std::size_t n = geom.column_of(element_a), np = geom.column_of(element_b);
        if (geom.is_flat())
            return {std::abs(dx), std::abs(geom.arc_coordinate(n) - geom.arc_coordinate(np))};

        const double R = geom.radius(), beta = geom.half_angle();
        const double psi_n = geom.central_angle(n), psi_np = geom.central_angle(np);
        const double t = beta - 0.5 * (psi_n + psi_np);
        const double s = std::sin(0.5 * (psi_n - psi_np));
        const double arc_part = 2.0 * R * s * std::sin(t);
        return {std::sqrt(dx * dx + arc_part * arc_part), 2.0 * R * s * std::cos(t)};
    }

    IsoEntry iso_corr_2d(const geometry::Aperture &geom, std::size_t element_a, std::size_t element_b,
                         double wavelength, double tolerance)
    {
        if (!geom.is_2d())
            throw std::invalid_argument("iso_corr_2d expects a 2D aperture");
        if (element_a >= geom.size() || element_b >= geom.size())
            throw std::out_of_range("Element index out of range");
        const auto [D, E] = iso_pair_separation(geom, element_a, element_b);
        const double k0 = wavenumber(wavelength);
        return {sinc(2.0 / wavelength * std::hypot(D, E)),
                iso_extension_integral(k0 * E, k0 * D, geom.half_angle(), tolerance)};
    }

    CorrelationMatrix iso_corr_matrix(const geometry::Aperture &geom, double wavelength, bool normalize,
                                      double tolerance)
    {
        const auto N = Eigen::Index(geom.size());
        CorrelationMatrix R{CMatrix::Zero(N, N), normalize ? CorrelationMatrix::Normalization::coefficient
                                                           : CorrelationMatrix::Normalization::raw};
        const double scale = normalize ? 1.0 / (1.0 + cap_measure(geom.half_angle())) : 1.0;

        // Entries depend on |m - m'| and the unordered column pair only
        const std::size_t rows = geom.rows(), cols = geom.columns();
        const std::size_t n_pairs = cols * (cols + 1) / 2;
        std::vector<double> table(rows * n_pairs);
        auto pair_slot = [cols](std::size_t n, std::size_t np) { return n * cols - n * (n + 1) / 2 + np; };

#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t job = 0; job < std::ptrdiff_t(table.size()); ++job)
        {
            const std::size_t dm = std::size_t(job) / n_pairs;
            std::size_t slot = std::size_t(job) % n_pairs;
            std::size_t n = 0;
            while (slot >= cols - n)
            {
                slot -= cols - n;
                ++n;
            }
            const std::size_t np = n + slot;
            const IsoEntry e = geom.is_2d() ? iso_corr_2d(geom, geom.index(dm, n), geom.index(0, np), wavelength, tolerance)
                                            : iso_corr_1d(geom, n, np, wavelength, tolerance);
            table[std::size_t(job)] = e.total();
        }

        for (std::size_t a = 0; a < geom.size(); ++a)
            for (std::size_t b = a; b < geom.size(); ++b)
            {
                const std::size_t ma = geom.row_of(a), mb = geom.row_of(b);
                const std::size_t na = geom.column_of(a), nb = geom.column_of(b);
                const std::size_t dm = ma > mb ? ma - mb : mb - ma;
                const double v = table[dm * n_pairs + pair_slot(std::min(na, nb), std::max(na, nb))] * scale;
                R.values(Eigen::Index(a), Eigen::Index(b)) = v;
                R.values(Eigen::Index(b), Eigen::Index(a)) = v;
            }
        if (normalize)
            R.values.diagonal().setOnes();
        return R;
    }
}
