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

#ifndef HOLOCURA_VISIBILITY_HPP
#define HOLOCURA_VISIBILITY_HPP

#include "holocura/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace holocura::visibility
{
    // broadside_gated: 1D tangent test only on the phi = pi/2 cut, everything visible elsewhere (2D: full tangent test)
    // full_tangent: tangent test for every direction
    // all_visible: VR modeling switched off
    enum class VrPolicy
    {
        broadside_gated,
        full_tangent,
        all_visible
    };

    std::string to_string(VrPolicy policy);
    VrPolicy policy_from_string(const std::string &name);

    // Default activation window of the broadside_gated policy: half of a 1 degree azimuth grid step
    inline constexpr double default_azimuth_tolerance = 0.5 * pi / 180.0;

    struct VisibilityMask
    {
        std::vector<std::uint8_t> bits; // one entry per element, row-major like the aperture
        VrPolicy policy = VrPolicy::full_tangent;

        std::size_t size() const { return bits.size(); }
        bool operator[](std::size_t i) const { return bits[i] != 0; }
        std::size_t visible_count() const;
        bool all_visible() const { return visible_count() == size(); }
        std::string bitmap() const; // "1"/"0" per element
    };

    // g_n(theta, phi) = sin(theta) sin(phi) cos(gamma_n) + cos(theta) sin(gamma_n)
    double tangent_statistic(const geometry::Aperture &geom, std::size_t column, double zenith_rad, double azimuth_rad);

    // Gamma_n(r, beta, gamma_n) = (R / r)(1 - cos(beta) cos(gamma_n)); zero for flat apertures
    double tangent_threshold(const geometry::Aperture &geom, std::size_t column, double range_m);

    // Tangent-plane test g_n >= Gamma_n (the boundary counts as visible)
    bool tangent_visible(const geometry::Aperture &geom, std::size_t column, const geometry::UserLocation &user);

    VisibilityMask vr_mask_1d(const geometry::Aperture &geom, const geometry::UserLocation &user, VrPolicy policy,
                              double azimuth_tolerance_rad = default_azimuth_tolerance);

    // Arc-direction mask replicated across all rows; evaluated over the full azimuth range
    VisibilityMask vr_mask_2d(const geometry::Aperture &geom, const geometry::UserLocation &user, VrPolicy policy);

    // Dispatches on geom.is_2d()
    VisibilityMask vr_mask(const geometry::Aperture &geom, const geometry::UserLocation &user, VrPolicy policy,
                           double azimuth_tolerance_rad = default_azimuth_tolerance);

    // h .* v, invisible entries exactly zero
    CVector gate_channel(const CVector &h, const VisibilityMask &mask);

    // Front half-space phi in [0, pi], or the backside caps theta in [0, beta] u [pi - beta, pi]
    bool nlos_support_filter(double zenith_rad, double azimuth_rad, double half_angle_rad);
}

#endif
