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

#include "holocura/visibility.hpp"

#include <algorithm>
#include <cmath>

namespace holocura::visibility
{
    std::string to_string(VrPolicy policy)
    {
        switch (policy)
        {
        case VrPolicy::broadside_gated:
            return "broadside-gated";
        case VrPolicy::full_tangent:
            return "full-tangent";
        case VrPolicy::all_visible:
            return "all-visible";
        }
        return "unknown";
    }

    VrPolicy policy_from_string(const std::string &name)
    {
        if (name == "broadside-gated")
            return VrPolicy::broadside_gated;
        if (name == "full-tangent")
            return VrPolicy::full_tangent;
        if (name == "all-visible" || name == "off")
            return VrPolicy::all_visible;
        throw std::invalid_argument("Unknown VR policy '" + name + "' (expected broadside-gated, full-tangent or all-visible)");
    }

    std::size_t VisibilityMask::visible_count() const
    {
        return std::size_t(std::count(bits.begin(), bits.end(), std::uint8_t(1)));
    }

    std::string VisibilityMask::bitmap() const
    {
        std::string s(bits.size(), '0');
        for (std::size_t i = 0; i < bits.size(); ++i)
            if (bits[i])
                s[i] = '1';
        return s;
    }

    double tangent_statistic(const geometry::Aperture &geom, std::size_t column, double zenith_rad, double azimuth_rad)
    {
        const double g = geom.tilt(column);
        return std::sin(zenith_rad) * std::sin(azimuth_rad) * std::cos(g) + std::cos(zenith_rad) * std::sin(g);
    }

    double tangent_threshold(const geometry::Aperture &geom, std::size_t column, double range_m)
    {
        if (geom.is_flat())
            return 0.0;
        return geom.radius() / range_m * (1.0 - std::cos(geom.half_angle()) * std::cos(geom.tilt(column)));
    }

    bool tangent_visible(const geometry::Aperture &geom, std::size_t column, const geometry::UserLocation &user)
    {
        return tangent_statistic(geom, column, user.zenith_rad, user.azimuth_rad) >=
               tangent_threshold(geom, column, user.range_m);
    }

    namespace
    {
        std::vector<std::uint8_t> arc_bits(const geometry::Aperture &geom, const geometry::UserLocation &user)
        {
            std::vector<std::uint8_t> arc(geom.columns());
            for (std::size_t n = 0; n < geom.columns(); ++n)
                arc[n] = tangent_visible(geom, n, user) ? 1 : 0;
            return arc;
        }

        bool on_broadside_cut(double azimuth_rad, double tolerance)
        {
            const double phi = std::remainder(azimuth_rad - 0.5 * pi, 2.0 * pi);
            return std::abs(phi) < tolerance;
        }
    }

    VisibilityMask vr_mask_1d(const geometry::Aperture &geom, const geometry::UserLocation &user, VrPolicy policy,
                              double azimuth_tolerance_rad)
    {
        VisibilityMask mask{std::vector<std::uint8_t>(geom.size(), 1), policy};
        const bool active = policy == VrPolicy::full_tangent ||
                            (policy == VrPolicy::broadside_gated && on_broadside_cut(user.azimuth_rad, azimuth_tolerance_rad));
        if (active)
        {
            const auto arc = arc_bits(geom, user);
            for (std::size_t i = 0; i < geom.size(); ++i)
                mask.bits[i] = arc[geom.column_of(i)];
        }
        return mask;
    }

    VisibilityMask vr_mask_2d(const geometry::Aperture &geom, const geometry::UserLocation &user, VrPolicy policy)
    {
        VisibilityMask mask{std::vector<std::uint8_t>(geom.size(), 1), policy};
        if (policy == VrPolicy::all_visible)
            return mask;
        const auto arc = arc_bits(geom, user);
        for (std::size_t m = 0; m < geom.rows(); ++m)
            std::copy(arc.begin(), arc.end(), mask.bits.begin() + std::ptrdiff_t(geom.index(m, 0)));
        return mask;
    }

    VisibilityMask vr_mask(const geometry::Aperture &geom, const geometry::UserLocation &user, VrPolicy policy,
                           double azimuth_tolerance_rad)
    {
        return geom.is_2d() ? vr_mask_2d(geom, user, policy) : vr_mask_1d(geom, user, policy, azimuth_tolerance_rad);
    }

    CVector gate_channel(const CVector &h, const VisibilityMask &mask)
    {
        if (std::size_t(h.size()) != mask.size())
            throw std::invalid_argument("Channel length " + std::to_string(h.size()) + " does not match mask length " +
                                        std::to_string(mask.size()));
        CVector out(h.size());
        for (Eigen::Index i = 0; i < h.size(); ++i)
            out[i] = mask[std::size_t(i)] ? h[i] : cplx(0.0, 0.0);
        return out;
    }

    bool nlos_support_filter(double zenith_rad, double azimuth_rad, double half_angle_rad)
    {
        double phi = std::fmod(azimuth_rad, 2.0 * pi);
        if (phi < 0.0)
            phi += 2.0 * pi;
        if (phi <= pi)
            return true;
        return zenith_rad <= half_angle_rad || zenith_rad >= pi - half_angle_rad;
    }
}
