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

#include <cmath>

namespace holocura::channels
{
    CorrelationMatrix CorrelationMatrix::block(const std::vector<std::size_t> &indices) const
    {
        const auto n = Eigen::Index(indices.size());
        CorrelationMatrix out{CMatrix(n, n), normalization};
        for (Eigen::Index i = 0; i < n; ++i)
            for (Eigen::Index j = 0; j < n; ++j)
                out.values(i, j) = values(Eigen::Index(indices[std::size_t(i)]), Eigen::Index(indices[std::size_t(j)]));
        return out;
    }

    ChannelVector los_channel(const geometry::Aperture &geom, const geometry::UserLocation &user, double wavelength,
                              visibility::VrPolicy policy, double azimuth_tolerance_rad)
    {
        if (!(wavelength > 0.0))
            throw std::invalid_argument("Wavelength must be positive");
        const double k = wavenumber(wavelength);
        CVector h(geom.size());
        for (std::size_t i = 0; i < geom.size(); ++i)
        {
            const double r = geometry::exact_distance(geom, i, user);
            h[Eigen::Index(i)] = wavelength / (4.0 * pi * r) * std::polar(1.0, -k * r);
        }
        const auto mask = visibility::vr_mask(geom, user, policy, azimuth_tolerance_rad);
        return {visibility::gate_channel(h, mask), wavelength, Provenance::los};
    }

    std::vector<CorrelationMatrix> los_pair_correlations(const std::vector<CVector> &subarray_channels)
    {
        std::vector<CorrelationMatrix> out;
        out.reserve(subarray_channels.size());
        for (const auto &h : subarray_channels)
            out.push_back({h * h.adjoint(), CorrelationMatrix::Normalization::raw});
        return out;
    }

    std::vector<Ray> supported_rays(const ClusterTable &table, double half_angle_rad, const CdlOptions &options,
                                    std::size_t *dropped)
    {
        std::vector<Ray> rays;
        std::size_t n_dropped = 0;
        for (const Ray &ray : expand_rays(table))
        {
            if (options.support_filter && !visibility::nlos_support_filter(ray.zenith_rad, ray.azimuth_rad, half_angle_rad))
            {
                ++n_dropped;
                continue;
            }
            rays.push_back(ray);
        }
        if (rays.empty())
            throw std::runtime_error("No CDL ray of '" + table.model_name + "' survives the support filter");
        if (options.renormalize)
        {
            double total = 0.0;
            for (const auto &r : rays)
                total += r.power;
            for (auto &r : rays)
                r.power /= total;
        }
        if (dropped)
            *dropped = n_dropped;
        return rays;
    }

    CMatrix ray_steering_matrix(const geometry::Aperture &geom, const std::vector<Ray> &rays, double wavelength)
    {
        CMatrix A(Eigen::Index(geom.size()), Eigen::Index(rays.size()));
        for (std::size_t l = 0; l < rays.size(); ++l)
            A.col(Eigen::Index(l)) = geometry::steering_farfield(geom, rays[l].zenith_rad, rays[l].azimuth_rad, wavelength);
        return A;
    }

    CdlResult cdl_correlation(const geometry::Aperture &geom, const ClusterTable &table, double wavelength,
                              const CdlOptions &options)
    {
        CdlResult res;
        res.rays = supported_rays(table, geom.half_angle(), options, &res.dropped_rays);
        const CMatrix A = ray_steering_matrix(geom, res.rays, wavelength);
        Eigen::VectorXd w(Eigen::Index(res.rays.size()));
        for (std::size_t l = 0; l < res.rays.size(); ++l)
            w[Eigen::Index(l)] = res.rays[l].power;
        res.correlation.values = A * w.cwiseSqrt().asDiagonal() * (A * w.cwiseSqrt().asDiagonal()).adjoint();
        res.correlation.normalization = CorrelationMatrix::Normalization::raw;
        return res;
    }
}
