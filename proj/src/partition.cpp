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

#include "holocura/snspipe.hpp"

#include <cmath>
#include <string>

namespace holocura::sns
{
    std::string PartitionSpec::label() const
    {
        if (scheme == PartitionScheme::contiguous_1d)
            return "K" + std::to_string(subarrays);
        return "grid" + std::to_string(grid_z) + "x" + std::to_string(grid_x);
    }

    Partition make_partition(const geometry::Aperture &geom, const PartitionSpec &spec)
    {
        if (spec.scheme == PartitionScheme::contiguous_1d)
            return make_contiguous(geom, spec.subarrays);
        return make_grid(geom, spec.grid_z, spec.grid_x);
    }

    Partition make_contiguous(const geometry::Aperture &geom, std::size_t subarrays)
    {
        if (geom.is_2d())
            throw PartitionError("contiguous partition needs a 1D aperture; use a g_z x 1 grid (Z-cut) in 2D");
        const std::size_t N = geom.columns();
        if (subarrays == 0)
            throw PartitionError("partition rule K >= 1 violated (K = 0)");
        if (N % subarrays != 0)
            throw PartitionError("partition rule K | N violated: K = " + std::to_string(subarrays) +
                                 " does not divide N = " + std::to_string(N));
        Partition p;
        p.scheme = PartitionScheme::contiguous_1d;
        p.grid_z = subarrays;
        p.grid_x = 1;
        p.tile_z = N / subarrays;
        p.tile_x = 1;
        p.subarrays.resize(subarrays);
        for (std::size_t k = 0; k < subarrays; ++k)
            for (std::size_t j = 0; j < p.tile_z; ++j)
                p.subarrays[k].push_back(k * p.tile_z + j);
        return p;
    }

    Partition make_grid(const geometry::Aperture &geom, std::size_t grid_z, std::size_t grid_x)
    {
        const std::size_t N = geom.columns(), M = geom.rows();
        std::string violated;
        if (grid_z == 0 || grid_x == 0)
            violated += "grid rule g_z, g_x >= 1 violated; ";
        else
        {
            if (N % grid_z != 0)
                violated += "grid rule g_z | N violated: g_z = " + std::to_string(grid_z) + ", N = " + std::to_string(N) + "; ";
            if (M % grid_x != 0)
                violated += "grid rule g_x | M violated: g_x = " + std::to_string(grid_x) + ", M = " + std::to_string(M) + "; ";
        }
        if (!violated.empty())
            throw PartitionError(violated.substr(0, violated.size() - 2));

        Partition p;
        p.scheme = PartitionScheme::grid_2d;
        p.grid_z = grid_z;
        p.grid_x = grid_x;
        p.tile_z = N / grid_z;
        p.tile_x = M / grid_x;
        p.subarrays.resize(grid_z * grid_x);
        for (std::size_t iz = 0; iz < grid_z; ++iz)
            for (std::size_t ix = 0; ix < grid_x; ++ix)
            {
                auto &tile = p.subarrays[iz * grid_x + ix];
                for (std::size_t m = ix * p.tile_x; m < (ix + 1) * p.tile_x; ++m)
                    for (std::size_t n = iz * p.tile_z; n < (iz + 1) * p.tile_z; ++n)
                        tile.push_back(geom.index(m, n));
            }
        return p;
    }

    namespace
    {
        std::size_t steps_in_half_turn(double step_deg)
        {
            if (!(step_deg > 0.0) || step_deg > 180.0)
                throw std::invalid_argument("direction grid step must lie in (0, 180] degrees");
            const double n = 180.0 / step_deg;
            if (std::abs(n - std::round(n)) > 1e-9)
                throw std::invalid_argument("direction grid step must divide 180 degrees");
            return std::size_t(std::round(n));
        }

        double rad(double deg) { return deg * pi / 180.0; }
    }

    DirectionGrid DirectionGrid::half_space(double step_deg)
    {
        const std::size_t n = steps_in_half_turn(step_deg);
        DirectionGrid g;
        g.region = "half-space";
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j)
                g.directions.push_back({rad(double(i) * step_deg), rad(double(j) * step_deg)});
        return g;
    }

    DirectionGrid DirectionGrid::theta_cut(double azimuth_rad, double step_deg)
    {
        const std::size_t n = steps_in_half_turn(step_deg);
        DirectionGrid g;
        g.region = "theta-cut";
        for (std::size_t i = 0; i <= n; ++i)
            g.directions.push_back({rad(double(i) * step_deg), azimuth_rad});
        return g;
    }

    DirectionGrid DirectionGrid::off_broadside(double step_deg)
    {
        const std::size_t n = steps_in_half_turn(step_deg);
        DirectionGrid g;
        g.region = "off-broadside";
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = 0; j <= n; ++j)
            {
                const double phi_deg = double(j) * step_deg;
                if (std::abs(phi_deg - 90.0) < 0.5 * step_deg)
                    continue;
                g.directions.push_back({rad(double(i) * step_deg), rad(phi_deg)});
            }
        return g;
    }
}
